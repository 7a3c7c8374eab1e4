#pragma once

// Bounded search for G(x) = y^n and the per-exponent case analysis report.

#include "introot.hpp"
#include "pell.hpp"
#include "structure.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace powersum {

enum class SolutionSource { search, family };

inline std::string_view to_string(SolutionSource s) { return s == SolutionSource::search ? "search" : "family"; }

struct SolutionRecord {
  unsigned k;
  unsigned l;
  std::uint64_t x;
  BigInt y;
  unsigned n;
  SolutionSource source;

  friend bool operator==(const SolutionRecord&, const SolutionRecord&) = default;
};

enum class OutputFormat { table, json, csv };

struct SearchConfig {
  unsigned k = 1;
  unsigned l = 2;
  std::uint64_t x_max = 1;
  unsigned n_max = 2;
  unsigned partitions = 1;
  OutputFormat output_format = OutputFormat::table;

  void validate() const {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (l < 2) throw std::invalid_argument("l must be >= 2");
    if (x_max < 1) throw std::invalid_argument("x_max must be >= 1");
    if (n_max < 2) throw std::invalid_argument("n_max must be >= 2");
    if (partitions < 1) throw std::invalid_argument("partitions must be >= 1");
  }
};

/// A found record failed its independent re-check.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// y^n against a fresh literal sum; shares nothing with integer_nth_root.
inline bool reverify(const SolutionRecord& r) {
  BigInt p;
  mpz_pow_ui(p.get_mpz_t(), r.y.get_mpz_t(), r.n);
  return p == power_sum_oracle(PowerSumInstance(r.k, r.l), r.x);
}

namespace detail {

inline BigInt kth_power(std::uint64_t j, unsigned k) {
  BigInt r = big_from_u64(j);
  mpz_pow_ui(r.get_mpz_t(), r.get_mpz_t(), k);
  return r;
}

/// Scan x in [lo, hi]. The window sum is seeded by the literal oracle and
/// then slid: S(x+1) = S(x) - (x+1)^k + sum_{j=lx+1}^{l(x+1)} j^k.
inline std::vector<SolutionRecord> scan_range(const SearchConfig& cfg, std::uint64_t lo, std::uint64_t hi) {
  std::vector<SolutionRecord> out;
  if (lo > hi) return out;
  const PowerSumInstance inst(cfg.k, cfg.l);
  BigInt s = power_sum_oracle(inst, lo);
  for (std::uint64_t x = lo;; ++x) {
    for (unsigned n = 2; n <= cfg.n_max; ++n) {
      if (n == 2 && !maybe_square(s)) continue;
      auto r = integer_nth_root(s, n);
      if (r.exact) out.push_back({cfg.k, cfg.l, x, std::move(r.root), n, SolutionSource::search});
    }
    if (x == hi) break;
    s -= kth_power(x + 1, cfg.k);
    for (std::uint64_t j = cfg.l * x + 1; j <= cfg.l * (x + 1); ++j) s += kth_power(j, cfg.k);
  }
  return out;
}

}  // namespace detail

/// Every (x, y, n) with 1 <= x <= x_max, 2 <= n <= n_max and G(x) = y^n,
/// sorted by (x, n). The x range is split into contiguous partitions run on
/// separate threads; each record is re-verified before it is returned.
inline std::vector<SolutionRecord> search_solutions(const SearchConfig& cfg) {
  cfg.validate();
  const std::uint64_t parts = std::min<std::uint64_t>(cfg.partitions, cfg.x_max);
  const std::uint64_t chunk = cfg.x_max / parts, extra = cfg.x_max % parts;

  std::vector<std::vector<SolutionRecord>> results(parts);
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(parts);
  std::uint64_t lo = 1;
  for (std::uint64_t p = 0; p < parts; ++p) {
    const std::uint64_t hi = lo + chunk - 1 + (p < extra ? 1 : 0);
    auto job = [&, p, lo, hi] {
      try {
        results[p] = detail::scan_range(cfg, lo, hi);
      } catch (...) {
        errors[p] = std::current_exception();
      }
    };
    if (parts == 1)
      job();
    else
      workers.emplace_back(job);
    lo = hi + 1;
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<SolutionRecord> merged;
  for (auto& r : results) merged.insert(merged.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  std::sort(merged.begin(), merged.end(), [](const SolutionRecord& a, const SolutionRecord& b) {
    return a.x != b.x ? a.x < b.x : a.n < b.n;
  });
  for (const auto& r : merged)
    if (!reverify(r))
      throw VerificationError("record x=" + std::to_string(r.x) + " n=" + std::to_string(r.n) + " fails re-verification");
  return merged;
}

struct PipelineEntry {
  unsigned n;
  BrindzaAssessment assessment;
  bool family_available;  // k in {1, 3}, n == 2 and exceptional
  std::string verdict;
};

struct PipelineReport {
  unsigned k;
  unsigned l;
  bool two_distinct_zeros;  // exponent n is bounded for G(x) = y^n
  MultiplicityProfile profile;  // of P(x) = (k+1) G(x)
  std::vector<PipelineEntry> entries;
};

/// For each n: the shape of t_i = n / gcd(n, r_i) over the zeros of P, and
/// whether the effective bound applies or the equation falls to the Pell families.
inline PipelineReport pipeline_report(unsigned k, unsigned l, const std::vector<unsigned>& n_list) {
  const PowerSumInstance inst(k, l);
  PipelineReport rep{k, l, check_two_distinct_zeros(construct_G(inst)), multiplicity_profile(construct_P(inst.q(), l)), {}};
  for (unsigned n : n_list) {
    PipelineEntry e{n, brindza_assess(rep.profile, n), false, {}};
    if (e.assessment.bound_applies()) {
      e.verdict = "bound applies";
    } else {
      e.family_available = (k == 1 || k == 3) && n == 2;
      e.verdict = std::string("exceptional shape (") + (e.assessment.exceptional == ExceptionalShape::shape_a ? "a" : "b") + ")";
      if (e.family_available) e.verdict += "; Pell family available";
    }
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

}  // namespace powersum
