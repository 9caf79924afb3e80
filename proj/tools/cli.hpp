#pragma once

// Command-line front end. Exit codes: 0 all checks pass, 1 usage or input
// error, 2 an identity check failed.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "irrat/irrat.hpp"

namespace irrat::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_check_failed = 2;

struct Selection {
  std::string family;
  std::uint64_t n = 0;
  std::string a, b;
  std::size_t convergent = 0;
};

inline void add_selection(CLI::App* cmd, Selection& sel) {
  cmd->add_option("--family", sel.family, "sqrt2 | hex6 | triangular")->required();
  cmd->add_option("--n", sel.n, "triangular index (n >= 2)");
  auto* a = cmd->add_option("--a", sel.a, "big side length");
  auto* b = cmd->add_option("--b", sel.b, "small side length");
  auto* k = cmd->add_option("--convergent", sel.convergent,
                            "use the K-th convergent (from 1) of sqrt(N) as (a, b)");
  a->needs(b);
  b->needs(a);
  k->excludes(a)->excludes(b);
}

inline std::pair<BigInt, BigInt> resolve_pair(const Selection& sel, const FamilySelector& fam) {
  if (sel.convergent > 0) {
    const auto c = nth_convergent(fam.radicand(), sel.convergent);
    return {c.p, c.q};
  }
  if (sel.a.empty() || sel.b.empty())
    throw std::invalid_argument("give --a and --b, or --convergent K");
  return {parse_bigint(sel.a), parse_bigint(sel.b)};
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw error("cannot open " + path + " for writing");
  file << text;
  if (!file) throw error("failed writing " + path);
}

inline void print_summary(std::ostream& out, const VerificationReport& r) {
  out << r.command << " " << r.family;
  if (r.family == "triangular") out << " n=" << r.n;
  out << " N=" << r.N << " (a,b)=(" << r.a << "," << r.b << ")";
  if (!r.window_check.ok) out << " window violated: " << r.window_check.inequality;
  if (r.descent) out << " -> (" << r.descent->a_next << "," << r.descent->b_next << ")";
  if (r.stop_reason) out << " steps=" << r.chain.size() << " stop=" << *r.stop_reason;
  out << (r.passed() ? " PASS" : " FAIL") << "\n";
  for (const auto& c : r.identity_checks) {
    if (!c.pass) out << "  failed: " << c.name << ": " << c.lhs << " != " << c.rhs << "\n";
  }
}

inline void emit_report(std::ostream& out, const ReportDocument& doc, const std::string& json_path) {
  const std::string text = serialize(doc);
  if (json_path.empty()) {
    out << text;
    return;
  }
  write_file(json_path, text);
  for (const auto& r : doc.runs) print_summary(out, r);
}

struct RangeRow {
  std::uint64_t n = 0;
  bool works = false;
  bool below_bound = false;
};

inline int run_range(std::ostream& out, const std::string& family, std::uint64_t n_max) {
  if (family != "triangular") {
    const auto fam = parse_family(family, 0).descent_family();
    const auto rc = range_check(fam);
    out << fam.name() << (rc.works ? " works" : " fails") << "\n";
    for (const auto& w : rc.witness)
      out << "  " << w.name << ": slack " << w.slack.str() << (w.holds ? " > 0" : " <= 0") << "\n";
    return exit_ok;
  }
  if (n_max < 2) throw std::invalid_argument("--n-max must be >= 2");
  std::vector<RangeRow> rows;
  bool consistent = true;
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    const auto fam = DescentFamily::triangular(n);
    RangeRow row{n, range_check(fam).works,
                 Surd::rational(Rational(BigInt(n)), 1) < triangular_bound(n % 2 == 0)};
    consistent = consistent && row.works == row.below_bound;
    out << "n=" << n << " " << (n % 2 == 0 ? "even" : "odd ") << " T_n=" << triangular_number(n)
        << (row.works ? " works" : " fails") << "\n";
    rows.push_back(row);
  }
  auto list = [&rows](bool works) {
    std::string s;
    for (const auto& r : rows) {
      if (r.works != works) continue;
      if (!s.empty()) s += ",";
      s += std::to_string(r.n);
    }
    return s;
  };
  out << "works: " << list(true) << "\n";
  out << "fails: " << list(false) << "\n";
  out << "bounds: even n < " << triangular_bound(true).str() << ", odd n < "
      << triangular_bound(false).str() << (consistent ? " (consistent)" : " (INCONSISTENT)")
      << "\n";
  return consistent ? exit_ok : exit_check_failed;
}

inline int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verifier for geometric irrationality proofs", "irrat"};
  app.require_subcommand(1);

  Selection sel;
  std::string json_path, svg_path;
  std::size_t max_steps = 50;
  std::uint64_t n_max = 10, limit = 0, x = 0;
  bool perturb = false;

  auto* verify = app.add_subcommand("verify", "build, census and check one arrangement");
  add_selection(verify, sel);
  verify->add_option("--json", json_path, "write the JSON report here");
  verify->add_flag("--perturb-census", perturb, "test hook: corrupt the census")->group("");

  auto* census = app.add_subcommand("census", "coverage census of one arrangement");
  add_selection(census, sel);
  census->add_option("--json", json_path, "write the JSON report here");
  census->add_flag("--perturb-census", perturb, "test hook: corrupt the census")->group("");

  auto* chain = app.add_subcommand("chain", "iterate the descent map");
  add_selection(chain, sel);
  chain->add_option("--max-steps", max_steps, "step limit")->capture_default_str();
  chain->add_option("--json", json_path, "write the JSON report here");

  auto* range = app.add_subcommand("range", "tabulate where the descent strictly shrinks");
  std::string range_family = "triangular";
  range->add_option("--family", range_family, "triangular | sqrt2 | hex6")->capture_default_str();
  range->add_option("--n-max", n_max, "largest triangular index")->capture_default_str();

  auto* sequence = app.add_subcommand("sequence", "n with T_n a perfect square");
  sequence->add_option("--limit", limit, "largest n")->required();

  auto* density = app.add_subcommand("density", "count of perfect squares up to x");
  density->add_option("--x", x, "upper limit (>= 1)")->required();

  auto* svg = app.add_subcommand("svg", "draw an arrangement");
  add_selection(svg, sel);
  svg->add_option("--out", svg_path, "output SVG path")->required();

  // CLI11 consumes the arguments in reverse order.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "irrat: " << e.what() << "\n" << app.help();
    return exit_usage;
  }

  try {
    RunOptions opts;
    opts.perturb_census = perturb;
    if (verify->parsed() || census->parsed() || chain->parsed()) {
      const auto fam = parse_family(sel.family, sel.n);
      const auto [a, b] = resolve_pair(sel, fam);
      ReportDocument doc;
      if (verify->parsed()) doc.runs.push_back(run_verify(fam, a, b, opts));
      if (census->parsed()) doc.runs.push_back(run_census(fam, a, b, opts));
      if (chain->parsed()) doc.runs.push_back(run_chain(fam, a, b, max_steps));
      emit_report(out, doc, json_path);
      return doc.passed() ? exit_ok : exit_check_failed;
    }
    if (range->parsed()) return run_range(out, range_family, n_max);
    if (sequence->parsed()) {
      const auto seq = square_triangular(limit);
      for (std::size_t i = 0; i < seq.size(); ++i) out << (i ? " " : "") << seq[i];
      out << "\n";
      return exit_ok;
    }
    if (density->parsed()) {
      const auto d = square_density(x);
      out << "squares " << d.count << "\n";
      out << "percent_rational " << d.percent_rational.str() << "\n";
      return exit_ok;
    }
    if (svg->parsed()) {
      const auto fam = parse_family(sel.family, sel.n);
      const auto [a, b] = resolve_pair(sel, fam);
      const auto A = fam.build(a, b);
      const auto C = coverage_census(A);
      const auto fig = verify_figure(A, C);
      emit_svg(build_scene(A, C), svg_path);
      out << "wrote " << svg_path << "\n";
      return fig.passed() ? exit_ok : exit_check_failed;
    }
  } catch (const mismatch_report& e) {
    err << "irrat: " << e.what() << "\n";
    return exit_check_failed;
  } catch (const std::exception& e) {
    err << "irrat: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace irrat::cli
