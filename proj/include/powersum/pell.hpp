#pragma once

// Pell and generalized Pell equations u^2 - D v^2 = N, and the infinite
// solution families of G(x) = y^2 for k = 1 and k = 3.

#include "introot.hpp"
#include "powersum.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace powersum {

inline bool is_perfect_square(const BigInt& s) { return s >= 0 && integer_nth_root(s, 2).exact; }

struct ContinuedFraction {
  BigInt a0;
  std::vector<BigInt> period;
};

/// Periodic expansion of sqrt(D) by the quadratic-surd recurrence
/// m' = d a - m, d' = (D - m'^2) / d, a' = floor((a0 + m') / d').
/// The period ends at the first partial quotient equal to 2 a0.
inline ContinuedFraction continued_fraction_sqrt(const BigInt& D) {
  if (D < 2 || is_perfect_square(D)) throw std::domain_error("continued_fraction_sqrt needs a nonsquare D >= 2");
  ContinuedFraction cf;
  cf.a0 = isqrt(D);
  BigInt m = 0, d = 1, a = cf.a0;
  do {
    m = d * a - m;
    d = (D - m * m) / d;
    a = (cf.a0 + m) / d;
    cf.period.push_back(a);
  } while (a != 2 * cf.a0);
  return cf;
}

/// (u, v) with u^2 - D v^2 = N.
struct PellSolution {
  BigInt u;
  BigInt v;

  friend bool operator==(const PellSolution&, const PellSolution&) = default;
  friend auto operator<=>(const PellSolution& a, const PellSolution& b) {
    if (auto c = cmp(a.u, b.u); c != 0) return c <=> 0;
    return cmp(a.v, b.v) <=> 0;
  }
};

/// Fundamental solution of u^2 - D v^2 = 1 from the convergents of sqrt(D).
inline PellSolution fundamental_solution(const BigInt& D) {
  const ContinuedFraction cf = continued_fraction_sqrt(D);
  // convergents p/q over one period, or two when the period length is odd
  BigInt p_prev = 1, q_prev = 0, p = cf.a0, q = 1;
  const std::size_t len = cf.period.size();
  for (std::size_t i = 0;; ++i) {
    if (p * p - D * q * q == 1) return {p, q};
    const BigInt& a = cf.period[i % len];
    BigInt pn = a * p + p_prev;
    BigInt qn = a * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(pn);
    q = std::move(qn);
    if (i > 2 * len) throw std::logic_error("fundamental_solution: no unit found within two periods");
  }
}

/// Composition with a unit: (u + v sqrt D)(u1 + v1 sqrt D).
inline PellSolution times_unit(const PellSolution& s, const PellSolution& unit, const BigInt& D) {
  return {s.u * unit.u + D * s.v * unit.v, s.u * unit.v + s.v * unit.u};
}

struct CongruenceConstraint {
  enum class Var { u, v } var;
  BigInt residue;
  BigInt modulus;
};

struct PellProblem {
  BigInt D;
  BigInt N;
  std::vector<CongruenceConstraint> constraints;

  PellProblem(BigInt D_, BigInt N_, std::vector<CongruenceConstraint> c = {})
      : D(std::move(D_)), N(std::move(N_)), constraints(std::move(c)) {
    if (D < 2 || is_perfect_square(D)) throw std::domain_error("PellProblem needs a nonsquare D >= 2");
    if (N == 0) throw std::domain_error("PellProblem needs N != 0");
    for (const auto& k : constraints)
      if (k.modulus < 1) throw std::domain_error("constraint modulus must be >= 1");
  }

  bool solves(const PellSolution& s) const { return s.u * s.u - D * s.v * s.v == N; }

  bool satisfies_constraints(const PellSolution& s) const {
    for (const auto& k : constraints) {
      const BigInt& val = k.var == CongruenceConstraint::Var::u ? s.u : s.v;
      BigInt diff = val - k.residue, r;
      mpz_fdiv_r(r.get_mpz_t(), diff.get_mpz_t(), k.modulus.get_mpz_t());
      if (r != 0) return false;
    }
    return true;
  }
};

/// Every class of solutions of u^2 - D v^2 = N has a member with
/// 0 <= v <= v1 sqrt(N / (2(u1+1))) when N > 0, or v1 sqrt(|N| / (2(u1-1)))
/// when N < 0, where (u1, v1) is the fundamental unit. Scanning up to this
/// bound finds a representative of every class.
inline BigInt class_representative_bound(const BigInt& D, const BigInt& N) {
  const PellSolution unit = fundamental_solution(D);
  const BigInt den = N > 0 ? BigInt(2 * (unit.u + 1)) : BigInt(2 * (unit.u - 1));
  const BigInt num = unit.v * unit.v * abs(N);
  return isqrt(BigInt(num / den));
}

/// All solutions with |v| <= search_bound, by exhaustive scan over v, that also
/// satisfy the problem's congruence constraints; sorted by |v|, then u, then v.
/// Completeness holds only inside the bound. Every orbit element under the
/// unit group with |v| <= search_bound is itself hit by the scan.
inline std::vector<PellSolution> solve_generalized(const PellProblem& problem, const BigInt& search_bound) {
  if (search_bound < 1) throw std::domain_error("solve_generalized needs search_bound >= 1");
  std::vector<PellSolution> out;
  BigInt rhs;
  for (BigInt v = 0; v <= search_bound; ++v) {
    rhs = problem.N + problem.D * v * v;
    if (rhs < 0 || !maybe_square(rhs)) continue;
    auto root = integer_nth_root(rhs, 2);
    if (!root.exact) continue;
    for (int su : {1, -1})
      for (int sv : {1, -1}) {
        PellSolution s{root.root * su, v * sv};
        if (!problem.satisfies_constraints(s)) continue;
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
      }
  }
  std::sort(out.begin(), out.end(), [](const PellSolution& a, const PellSolution& b) {
    if (int c = mpz_cmpabs(a.v.get_mpz_t(), b.v.get_mpz_t()); c != 0) return c < 0;
    return a < b;
  });
  return out;
}

/// Solutions (|u|, |v|) reachable from the given base solutions by up to
/// max_depth unit multiplications. `cutoff` is the least final |u| over all
/// walks: every nonnegative solution of the orbits with u <= cutoff is present.
struct OrbitWalk {
  std::set<PellSolution> solutions;
  BigInt cutoff;
};

inline OrbitWalk expand_orbits(const PellProblem& problem, const std::vector<PellSolution>& bases, unsigned max_depth) {
  const PellSolution unit = fundamental_solution(problem.D);
  OrbitWalk walk;
  bool first = true;
  for (const auto& b : bases) {
    for (int su : {1, -1})
      for (int sv : {1, -1}) {
        PellSolution s{b.u * su, b.v * sv};
        for (unsigned depth = 0;; ++depth) {
          if (!problem.solves(s)) throw std::logic_error("orbit element fails its Pell equation");
          walk.solutions.insert({abs(s.u), abs(s.v)});
          if (depth == max_depth) break;
          s = times_unit(s, unit, problem.D);
        }
        BigInt last = abs(s.u);
        if (first || last < walk.cutoff) walk.cutoff = last;
        first = false;
      }
  }
  return walk;
}

struct FamilyRecord {
  unsigned k;
  unsigned l;
  BigInt x;
  BigInt y;
  PellSolution witness;
  bool oracle_checked;  // literal summation was run (skipped above FamilyOptions::oracle_term_limit)
};

struct FamilyOptions {
  unsigned max_depth = 64;
  std::uint64_t oracle_term_limit = 20'000'000;
};

struct FamilyResult {
  std::vector<FamilyRecord> records;  // strictly increasing in x
  /// Fewer than the requested count were found before the orbit-depth cap.
  bool depth_limited = false;
  /// Base solutions were searched up to the class-representative bound.
  bool complete_within_cap = true;
  BigInt base_bound;
};

namespace detail {
/// G_{k,l}(x) == y^2 through the polynomial path and, when (l-1)x is below
/// the limit, through the literal sum. Returns whether the oracle ran.
inline bool verify_square_record(unsigned k, unsigned l, const BigInt& x, const BigInt& y, std::uint64_t term_limit) {
  const PowerSumInstance inst(k, l);
  const BigInt target = y * y;
  const Rational g = construct_G(inst).eval(Rational(x));
  if (g != Rational(target)) throw std::logic_error("family record fails the polynomial check");
  if (!x.fits_ulong_p() || x.get_ui() > term_limit / (l - 1)) return false;
  if (power_sum_oracle(inst, x.get_ui()) != target) throw std::logic_error("family record fails the summation oracle");
  return true;
}

/// u^2 - s^2 v^2 = N with N > 0: factor (u - s v)(u + s v) = N.
inline std::vector<PellSolution> solve_square_D(const BigInt& s, const BigInt& N) {
  std::vector<PellSolution> out;
  if (N <= 0 || !N.fits_ulong_p()) throw std::domain_error("solve_square_D needs a small positive N");
  const unsigned long n = N.get_ui();
  for (unsigned long a = 1; a * a <= n; ++a) {
    if (n % a) continue;
    const unsigned long b = n / a;
    if ((a + b) % 2) continue;
    BigInt sv = BigInt((b - a) / 2);
    if (sv % s != 0) continue;
    out.push_back({BigInt((a + b) / 2), BigInt(sv / s)});
  }
  return out;
}
}  // namespace detail

/// Solutions of 2y^2 = (l-1) x ((l+1) x + 1), i.e. G(x) = y^2 for k = 1.
/// Treating it as a quadratic in x gives u^2 - 8(l^2-1) y^2 = (l-1)^2 with
/// x = (u - (l-1)) / (2(l^2-1)).
inline FamilyResult family_k1(unsigned l, std::size_t count, const FamilyOptions& opt = {}) {
  if (l < 2) throw std::domain_error("family_k1 needs l >= 2");
  const BigInt L = l;
  const BigInt D = 8 * (L * L - 1);
  const BigInt N = (L - 1) * (L - 1);
  const BigInt xden = 2 * (L * L - 1);

  FamilyResult res;
  std::vector<PellSolution> candidates;
  BigInt cutoff;
  bool bounded = false;
  if (const auto r = integer_nth_root(D, 2); r.exact) {
    // finitely many solutions
    candidates = detail::solve_square_D(r.root, N);
  } else {
    const PellProblem problem(D, N);
    res.base_bound = class_representative_bound(D, N);
    const auto bases = solve_generalized(problem, std::max(res.base_bound, BigInt(1)));
    OrbitWalk walk = expand_orbits(problem, bases, opt.max_depth);
    candidates.assign(walk.solutions.begin(), walk.solutions.end());
    cutoff = std::move(walk.cutoff);
    bounded = true;
  }

  BigInt x, rem;
  for (const auto& s : candidates) {
    if (bounded && s.u > cutoff) break;
    if (s.v < 1) continue;
    mpz_fdiv_qr(x.get_mpz_t(), rem.get_mpz_t(), BigInt(s.u - (L - 1)).get_mpz_t(), xden.get_mpz_t());
    if (rem != 0 || x < 1) continue;
    if (res.records.size() == count) break;
    const bool oracle = detail::verify_square_record(1, l, x, s.v, opt.oracle_term_limit);
    res.records.push_back({1, l, x, s.v, s, oracle});
  }
  res.depth_limited = bounded && res.records.size() < count;
  return res;
}

/// (l^3-1)^2 - (l^4-1)(l^2-1) == l^2 (l-1)^2, and scaling the reduced k = 3
/// equation by (l^4-1) with u = (l^4-1) z gives
/// u^2 - (l^4-1) v^2 = -l^2 (l+1)(l^2+1)(l-1)^3.
inline bool k3_reduction_consistent(unsigned l) {
  const BigInt L = l;
  const BigInt D = L * L * L * L - 1;
  const BigInt reduced_rhs = L * L * (L - 1) * (L - 1);
  const BigInt c = L * L * L - 1;
  if (c * c - D * (L * L - 1) != reduced_rhs) return false;
  const BigInt scaled_rhs = -L * L * (L + 1) * (L * L + 1) * (L - 1) * (L - 1) * (L - 1);
  return -D * reduced_rhs == scaled_rhs;
}

/// Solutions of 4y^2 = x^2 (l-1)((l^2+1)x + l+1)((l+1)x + 1), i.e. G(x) = y^2
/// for k = 3. With z^2 = (l^4-1)x^2 + 2(l^3-1)x + (l^2-1), y = x z / 2 and
/// v = (l^4-1)x + (l^3-1) this becomes v^2 - (l^4-1) z^2 = l^2 (l-1)^2.
/// Base solutions are scanned up to search_bound (default: the
/// class-representative bound, which makes the orbit list complete).
inline FamilyResult family_k3(unsigned l, std::size_t count, std::optional<BigInt> search_bound = std::nullopt,
                              const FamilyOptions& opt = {}) {
  if (l < 2) throw std::domain_error("family_k3 needs l >= 2");
  if (!k3_reduction_consistent(l)) throw std::logic_error("k = 3 reduction is inconsistent");
  const BigInt L = l;
  const BigInt D = L * L * L * L - 1;
  const BigInt c = L * L * L - 1;
  const BigInt N = L * L * (L - 1) * (L - 1);
  const PellProblem base_problem(D, N);
  const PellProblem constrained(D, N, {{CongruenceConstraint::Var::u, c, D}});

  FamilyResult res;
  res.base_bound = class_representative_bound(D, N);
  const BigInt bound = search_bound.value_or(std::max(res.base_bound, BigInt(1)));
  res.complete_within_cap = bound >= res.base_bound;
  const auto bases = solve_generalized(base_problem, bound);
  const OrbitWalk walk = expand_orbits(base_problem, bases, opt.max_depth);

  BigInt x, rem;
  for (const auto& s : walk.solutions) {
    if (s.u > walk.cutoff) break;
    if (!constrained.satisfies_constraints(s)) continue;
    mpz_fdiv_qr(x.get_mpz_t(), rem.get_mpz_t(), BigInt(s.u - c).get_mpz_t(), D.get_mpz_t());
    if (rem != 0 || x < 1) continue;
    const BigInt xz = x * s.v;
    if (xz % 2 != 0) continue;
    const BigInt y = xz / 2;
    if (y < 1) continue;
    if (res.records.size() == count) break;
    const BigInt rhs = x * x * (L - 1) * ((L * L + 1) * x + L + 1) * ((L + 1) * x + 1);
    if (4 * y * y != rhs) throw std::logic_error("k = 3 record fails the factored identity");
    const bool oracle = detail::verify_square_record(3, l, x, y, opt.oracle_term_limit);
    res.records.push_back({3, l, x, y, s, oracle});
  }
  res.depth_limited = res.records.size() < count;
  return res;
}

}  // namespace powersum
