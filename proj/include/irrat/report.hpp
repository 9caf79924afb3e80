#pragma once

// Verification runs and their JSON form. Exact values are serialized as
// strings ("p/q" for rationals, decimal for integers); no floats.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "irrat/descent.hpp"
#include "irrat/errors.hpp"
#include "irrat/geometry.hpp"
#include "irrat/number_theory.hpp"

namespace irrat {

inline constexpr int report_schema_version = 1;

// Which construction a run targets. n is only meaningful for triangular.
struct FamilySelector {
  FigureKind kind = FigureKind::tennenbaum;
  std::uint64_t n = 0;

  DescentFamily descent_family() const {
    switch (kind) {
      case FigureKind::tennenbaum: return DescentFamily::sqrt2();
      case FigureKind::hex6: return DescentFamily::hex6();
      case FigureKind::triangular: return DescentFamily::triangular(n);
    }
    throw std::logic_error("unknown family");
  }

  std::uint64_t radicand() const { return descent_family().radicand(); }

  Arrangement build(const BigInt& a, const BigInt& b) const {
    switch (kind) {
      case FigureKind::tennenbaum: return build_tennenbaum(a, b);
      case FigureKind::hex6: return build_hexagon6(a, b);
      case FigureKind::triangular: return build_triangular(n, a, b);
    }
    throw std::logic_error("unknown family");
  }

  std::string window() const {
    switch (kind) {
      case FigureKind::tennenbaum: return "b < a < 2b";
      case FigureKind::hex6: return "2b < a < 3b";
      case FigureKind::triangular: return "(n+1)b/2 < a < nb";
    }
    return "?";
  }
};

// Accepts sqrt2 (alias tennenbaum), hex6, triangular.
inline FamilySelector parse_family(const std::string& name, std::uint64_t n) {
  if (name == "sqrt2" || name == "tennenbaum") return {FigureKind::tennenbaum, 0};
  if (name == "hex6") return {FigureKind::hex6, 0};
  if (name == "triangular") {
    if (n < 2) throw bad_index("triangular family needs --n >= 2");
    return {FigureKind::triangular, n};
  }
  throw std::invalid_argument("unknown family '" + name + "' (expected sqrt2, hex6, triangular)");
}

// K-th convergent of sqrt(N), counting from 1.
inline Convergent nth_convergent(std::uint64_t N, std::size_t k) {
  if (k < 1) throw std::invalid_argument("convergent index counts from 1");
  return convergents(N, k).back();
}

struct WindowCheck {
  bool ok = false;
  std::string inequality;  // the full window, or the violated side
  friend bool operator==(const WindowCheck&, const WindowCheck&) = default;
};

struct StepRecord {
  BigInt a, b;
  BigInt a_next, b_next;
  BigInt defect_in, defect_out;
  Rational multiplier;
  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

inline StepRecord to_record(const DescentStep& s) {
  return {s.a, s.b, s.a_next, s.b_next, s.defect_in, s.defect_out, s.multiplier};
}

struct CensusRecord {
  Rational big_area, total_small_area, union_area, blank_area, exactly2_area, exactly3_area,
      excess_area;
  std::uint64_t pair_intersections = 0, pairwise_regions = 0, triple_regions = 0;
  int max_depth = 0;
  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

inline CensusRecord to_record(const CoverageCensus& C) {
  return {C.big_area,
          C.total_small_area,
          C.union_area,
          C.blank_area,
          C.exactly2_area,
          C.exactly3_area,
          C.excess_area(),
          C.pair_intersections.size(),
          C.pairwise_regions.size(),
          C.triple_regions.size(),
          C.max_depth};
}

struct VerificationReport {
  std::string command;  // verify | census | chain
  std::string family;
  std::uint64_t n = 0;
  std::uint64_t N = 0;
  BigInt a, b;
  WindowCheck window_check;
  std::optional<StepRecord> descent;
  std::optional<CensusRecord> census;
  std::vector<IdentityCheck> identity_checks;
  std::vector<StepRecord> chain;
  std::optional<std::string> stop_reason;

  bool passed() const {
    return window_check.ok && std::all_of(identity_checks.begin(), identity_checks.end(),
                                          [](const auto& c) { return c.pass; });
  }
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct ReportDocument {
  int version = report_schema_version;
  std::vector<VerificationReport> runs;
  bool passed() const {
    return std::all_of(runs.begin(), runs.end(), [](const auto& r) { return r.passed(); });
  }
  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

struct RunOptions {
  // Test hook: adds one lattice unit to the measured blank area so the
  // figure identities fail.
  bool perturb_census = false;
};

namespace detail {

inline VerificationReport report_header(std::string command, const FamilySelector& sel,
                                        const BigInt& a, const BigInt& b) {
  VerificationReport r;
  r.command = std::move(command);
  r.family = to_string(sel.kind);
  r.n = sel.n;
  r.N = sel.radicand();
  r.a = a;
  r.b = b;
  return r;
}

inline std::optional<Arrangement> build_checked(const FamilySelector& sel, const BigInt& a,
                                                const BigInt& b, VerificationReport& r) {
  try {
    auto A = sel.build(a, b);
    r.window_check = {true, sel.window()};
    return A;
  } catch (const out_of_window& e) {
    r.window_check = {false, e.violated()};
    return std::nullopt;
  }
}

inline void push_check(VerificationReport& r, std::string name, const std::string& lhs,
                       const std::string& rhs) {
  r.identity_checks.push_back({std::move(name), lhs, rhs, lhs == rhs});
}

}  // namespace detail

// Builds the figure, takes its census and checks the closed forms.
inline VerificationReport run_census(const FamilySelector& sel, const BigInt& a, const BigInt& b,
                                     const RunOptions& opts = {}) {
  auto r = detail::report_header("census", sel, a, b);
  auto A = detail::build_checked(sel, a, b, r);
  if (!A) return r;
  auto C = coverage_census(*A);
  if (opts.perturb_census) C.blank_area += Rational(1);
  r.census = to_record(C);
  const auto fig = verify_figure(*A, C);
  r.identity_checks = fig.checks;
  return r;
}

// Census plus the algebraic side: descent step, defect multiplier, symbolic
// ratio, area-balance certificate for triangular runs, and agreement between the
// figure-derived and algebraic descent pairs.
inline VerificationReport run_verify(const FamilySelector& sel, const BigInt& a, const BigInt& b,
                                     const RunOptions& opts = {}) {
  auto r = detail::report_header("verify", sel, a, b);
  const auto family = sel.descent_family();
  const auto step = descent_step(family, a, b);
  r.descent = to_record(step);
  detail::push_check(r, "defect_out = multiplier * defect_in", Rational(step.defect_out).str(),
                     (step.multiplier * Rational(step.defect_in)).str());
  const auto ratio = symbolic_ratio_check(family);
  detail::push_check(r, "a'/b' = sqrt(N) under a = sqrt(N) b", ratio.holds ? "true" : "false",
                     "true");
  if (sel.kind == FigureKind::triangular) {
    const auto cert = verify_eq1(sel.n);
    detail::push_check(r, "area balance: LHS - RHS = (1-n)(a^2 - T_n b^2)", cert.difference.str(),
                       (cert.cofactor * cert.relation).str());
  }

  auto A = detail::build_checked(sel, a, b, r);
  if (!A) return r;
  auto C = coverage_census(*A);
  if (opts.perturb_census) C.blank_area += Rational(1);
  r.census = to_record(C);
  const auto fig = verify_figure(*A, C);
  r.identity_checks.insert(r.identity_checks.end(), fig.checks.begin(), fig.checks.end());
  if (fig.passed()) {
    const auto [an, bn] = census_to_descent(*A, C);
    detail::push_check(r, "census a' = algebraic a'", an.str(), step.a_next.str());
    detail::push_check(r, "census b' = algebraic b'", bn.str(), step.b_next.str());
  }
  return r;
}

inline VerificationReport run_chain(const FamilySelector& sel, const BigInt& a, const BigInt& b,
                                    std::size_t max_steps) {
  auto r = detail::report_header("chain", sel, a, b);
  r.window_check = {true, "none"};
  const auto chain = descent_chain(sel.descent_family(), a, b, max_steps);
  for (const auto& s : chain.steps) r.chain.push_back(to_record(s));
  if (chain.rejected) r.chain.push_back(to_record(*chain.rejected));
  for (std::size_t i = 0; i < r.chain.size(); ++i) {
    const auto& s = r.chain[i];
    detail::push_check(r, "step " + std::to_string(i + 1) + " defect relation",
                       Rational(s.defect_out).str(), (s.multiplier * Rational(s.defect_in)).str());
  }
  r.stop_reason = to_string(chain.reason);
  return r;
}

// JSON ----------------------------------------------------------------------

inline void to_json(nlohmann::json& j, const IdentityCheck& c) {
  j = {{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}};
}
inline void from_json(const nlohmann::json& j, IdentityCheck& c) {
  c.name = j.at("name").get<std::string>();
  c.lhs = j.at("lhs").get<std::string>();
  c.rhs = j.at("rhs").get<std::string>();
  c.pass = j.at("pass").get<bool>();
}

inline void to_json(nlohmann::json& j, const StepRecord& s) {
  j = {{"input_pair", {s.a.str(), s.b.str()}},
       {"output_pair", {s.a_next.str(), s.b_next.str()}},
       {"defect_in", s.defect_in.str()},
       {"defect_out", s.defect_out.str()},
       {"multiplier", s.multiplier.str()}};
}
inline void from_json(const nlohmann::json& j, StepRecord& s) {
  const auto& in = j.at("input_pair");
  const auto& out = j.at("output_pair");
  s.a = parse_bigint(in.at(0).get<std::string>());
  s.b = parse_bigint(in.at(1).get<std::string>());
  s.a_next = parse_bigint(out.at(0).get<std::string>());
  s.b_next = parse_bigint(out.at(1).get<std::string>());
  s.defect_in = parse_bigint(j.at("defect_in").get<std::string>());
  s.defect_out = parse_bigint(j.at("defect_out").get<std::string>());
  s.multiplier = Rational::parse(j.at("multiplier").get<std::string>());
}

inline void to_json(nlohmann::json& j, const CensusRecord& c) {
  j = {{"big_area", c.big_area.str()},
       {"total_small_area", c.total_small_area.str()},
       {"union_area", c.union_area.str()},
       {"blank_area", c.blank_area.str()},
       {"exactly2_area", c.exactly2_area.str()},
       {"exactly3_area", c.exactly3_area.str()},
       {"excess_area", c.excess_area.str()},
       {"pair_intersections", c.pair_intersections},
       {"pairwise_regions", c.pairwise_regions},
       {"triple_regions", c.triple_regions},
       {"max_depth", c.max_depth}};
}
inline void from_json(const nlohmann::json& j, CensusRecord& c) {
  auto rat = [&j](const char* key) { return Rational::parse(j.at(key).get<std::string>()); };
  c.big_area = rat("big_area");
  c.total_small_area = rat("total_small_area");
  c.union_area = rat("union_area");
  c.blank_area = rat("blank_area");
  c.exactly2_area = rat("exactly2_area");
  c.exactly3_area = rat("exactly3_area");
  c.excess_area = rat("excess_area");
  c.pair_intersections = j.at("pair_intersections").get<std::uint64_t>();
  c.pairwise_regions = j.at("pairwise_regions").get<std::uint64_t>();
  c.triple_regions = j.at("triple_regions").get<std::uint64_t>();
  c.max_depth = j.at("max_depth").get<int>();
}

inline void to_json(nlohmann::json& j, const VerificationReport& r) {
  j = {{"command", r.command},
       {"family", r.family},
       {"n", r.n},
       {"N", r.N},
       {"input_pair", {r.a.str(), r.b.str()}},
       {"window_check", {{"ok", r.window_check.ok}, {"inequality", r.window_check.inequality}}},
       {"identity_checks", r.identity_checks},
       {"pass", r.passed()}};
  j["descent"] = r.descent ? nlohmann::json(*r.descent) : nlohmann::json(nullptr);
  j["census"] = r.census ? nlohmann::json(*r.census) : nlohmann::json(nullptr);
  j["chain"] = r.chain;
  j["stop_reason"] = r.stop_reason ? nlohmann::json(*r.stop_reason) : nlohmann::json(nullptr);
}
inline void from_json(const nlohmann::json& j, VerificationReport& r) {
  r.command = j.at("command").get<std::string>();
  r.family = j.at("family").get<std::string>();
  r.n = j.at("n").get<std::uint64_t>();
  r.N = j.at("N").get<std::uint64_t>();
  r.a = parse_bigint(j.at("input_pair").at(0).get<std::string>());
  r.b = parse_bigint(j.at("input_pair").at(1).get<std::string>());
  r.window_check.ok = j.at("window_check").at("ok").get<bool>();
  r.window_check.inequality = j.at("window_check").at("inequality").get<std::string>();
  r.identity_checks = j.at("identity_checks").get<std::vector<IdentityCheck>>();
  r.descent = j.at("descent").is_null() ? std::nullopt
                                        : std::optional(j.at("descent").get<StepRecord>());
  r.census = j.at("census").is_null() ? std::nullopt
                                      : std::optional(j.at("census").get<CensusRecord>());
  r.chain = j.at("chain").get<std::vector<StepRecord>>();
  r.stop_reason = j.at("stop_reason").is_null()
                      ? std::nullopt
                      : std::optional(j.at("stop_reason").get<std::string>());
}

inline void to_json(nlohmann::json& j, const ReportDocument& d) {
  j = {{"version", d.version}, {"runs", d.runs}};
}
inline void from_json(const nlohmann::json& j, ReportDocument& d) {
  d.version = j.at("version").get<int>();
  if (d.version != report_schema_version)
    throw std::invalid_argument("unsupported report version " + std::to_string(d.version));
  d.runs = j.at("runs").get<std::vector<VerificationReport>>();
}

inline std::string serialize(const ReportDocument& d) { return nlohmann::json(d).dump(2) + "\n"; }

inline ReportDocument parse_report(const std::string& text) {
  return nlohmann::json::parse(text).get<ReportDocument>();
}

}  // namespace irrat
