#pragma once

// Classical-side number theory: square-free reduction, the per-prime residue
// kernel, perfect-square density, continued-fraction convergents of sqrt(N)
// and the indices n for which the triangular number T_n is a perfect square.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "irrat/errors.hpp"
#include "irrat/rational.hpp"

namespace irrat {

// Integer-only floor square root.
constexpr std::uint64_t isqrt_u64(std::uint64_t x) {
  std::uint64_t result = 0;
  std::uint64_t bit = std::uint64_t{1} << 62;
  while (bit > x) bit >>= 2;
  while (bit != 0) {
    if (x >= result + bit) {
      x -= result + bit;
      result = (result >> 1) + bit;
    } else {
      result >>= 1;
    }
    bit >>= 2;
  }
  return result;
}

constexpr bool is_perfect_square(std::uint64_t x) {
  const std::uint64_t r = isqrt_u64(x);
  return r * r == x;
}

// T_n = n(n+1)/2.
inline BigInt triangular_number(std::uint64_t n) {
  return BigInt(n) * (BigInt(n) + 1) / 2;
}

// Deterministic trial division.
constexpr bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (std::uint64_t d = 3; d <= p / d; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

struct SquarefreeDecomposition {
  std::uint64_t m1 = 1;  // square-free part
  std::uint64_t m2 = 1;  // n = m1 * m2^2
  friend bool operator==(const SquarefreeDecomposition&, const SquarefreeDecomposition&) = default;
};

inline SquarefreeDecomposition squarefree_decompose(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("squarefree_decompose requires n >= 1");
  SquarefreeDecomposition out;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p <= rest / p; ++p) {
    if (rest % p != 0) continue;
    int exponent = 0;
    while (rest % p == 0) {
      rest /= p;
      ++exponent;
    }
    for (int k = 0; k < exponent / 2; ++k) out.m2 *= p;
    if (exponent % 2 == 1) out.m1 *= p;
  }
  out.m1 *= rest;  // leftover is 1 or a prime
  return out;
}

inline bool is_squarefree(std::uint64_t n) { return n >= 1 && squarefree_decompose(n).m2 == 1; }

inline bool sqrt_is_irrational(std::uint64_t n) { return squarefree_decompose(n).m1 > 1; }

struct PrimeCaseCheck {
  std::uint64_t p = 0;
  bool holds = false;  // r^2 mod p != 0 for every 1 <= r <= p-1
  std::vector<std::pair<std::uint64_t, std::uint64_t>> residues;  // (r, r^2 mod p)
};

// For a specific prime p, tabulates r^2 mod p for r = 1..p-1. If none of
// them vanish, p | a^2 forces a = mp + 0, the case-by-case step that stands
// in for the general prime-divides-product lemma.
inline PrimeCaseCheck prime_case_check(std::uint64_t p) {
  if (!is_prime(p)) throw not_prime(std::to_string(p) + " is not prime");
  PrimeCaseCheck out;
  out.p = p;
  out.holds = true;
  out.residues.reserve(p - 1);
  for (std::uint64_t r = 1; r < p; ++r) {
    const auto sq = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * r) % p);
    out.residues.emplace_back(r, sq);
    if (sq == 0) out.holds = false;
  }
  return out;
}

struct SquareDensity {
  std::uint64_t count = 0;   // perfect squares in [1, x]
  Rational percent_rational;  // 100 * count / x
};

// The share of n <= x with a rational square root is floor(sqrt x)/x, about
// 100 / sqrt(x) percent; everything else has an irrational root.
inline SquareDensity square_density(std::uint64_t x) {
  if (x == 0) throw std::invalid_argument("square_density requires x >= 1");
  SquareDensity out;
  out.count = isqrt_u64(x);
  out.percent_rational = Rational(BigInt(100) * out.count, BigInt(x));
  return out;
}

struct Convergent {
  BigInt p;
  BigInt q;
  std::size_t index = 0;  // 0-based: index 0 is floor(sqrt N)/1
  std::uint64_t radicand = 0;
  friend bool operator==(const Convergent&, const Convergent&) = default;
};

// First k convergents of sqrt(N) from the periodic continued-fraction
// recurrence m' = d a - m, d' = (N - m'^2)/d, a' = floor((a0 + m')/d').
inline std::vector<Convergent> convergents(std::uint64_t N, std::size_t k) {
  if (N < 2) throw std::invalid_argument("convergents requires N >= 2");
  if (is_perfect_square(N)) throw square_radicand(std::to_string(N) + " is a perfect square");
  const std::uint64_t a0 = isqrt_u64(N);
  std::uint64_t m = 0, d = 1, a = a0;
  BigInt p_prev = 1, p = a0;
  BigInt q_prev = 0, q = 1;
  std::vector<Convergent> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (i > 0) {
      m = d * a - m;
      d = (N - m * m) / d;
      a = (a0 + m) / d;
      BigInt p_next = BigInt(a) * p + p_prev;
      BigInt q_next = BigInt(a) * q + q_prev;
      p_prev = std::exchange(p, std::move(p_next));
      q_prev = std::exchange(q, std::move(q_next));
    }
    out.push_back({p, q, i, N});
  }
  return out;
}

// All n <= limit with T_n a perfect square, from the Pell recurrence
// n_{k+1} = 6 n_k - n_{k-1} + 2 seeded with 0, 1. Every produced value is
// re-tested directly.
inline std::vector<std::uint64_t> square_triangular(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  BigInt prev = 0, cur = 1;
  out.push_back(0);
  while (cur <= limit) {
    const auto n = cur.convert_to<std::uint64_t>();
    if (!exact_isqrt(triangular_number(n)))
      throw std::logic_error("Pell recurrence produced non-square T_" + std::to_string(n));
    out.push_back(n);
    BigInt next = 6 * cur - prev + 2;
    prev = std::exchange(cur, std::move(next));
  }
  return out;
}

}  // namespace irrat
