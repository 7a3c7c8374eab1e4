// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <powersum/search.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace powersum;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> failures;
  void require(bool cond, std::string what) {
    if (!cond) {
      ok = false;
      failures.push_back(std::move(what));
    }
  }
};

int failed = 0;

void criterion(const char* id, const char* title, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(secs < budget_s, "over time budget");
  if (!o.ok) ++failed;
  std::printf("[%s] %s %s (%.2fs / %.0fs)\n", o.ok ? "PASS" : "FAIL", id, title, secs, budget_s);
  for (const auto& f : o.failures) std::printf("       - %s\n", f.c_str());
  std::fflush(stdout);
}

ModPoly M4(std::initializer_list<std::pair<unsigned, unsigned>> terms) {
  unsigned hi = 0;
  for (auto [e, c] : terms) hi = std::max(hi, e);
  std::vector<unsigned> c(hi + 1, 0);
  for (auto [e, v] : terms) c[e] = v;
  return ModPoly(4, std::move(c));
}

bool shape_is(const MultiplicityProfile& p, unsigned m, ExceptionalShape s) { return brindza_assess(p, m).exceptional == s; }

}  // namespace

int main() {
  criterion("AC1", "power-sum polynomial equals literal sum (4500 cases)", 10, [](Outcome& o) {
    std::size_t checked = 0;
    for (unsigned k = 1; k <= 10; ++k)
      for (unsigned l = 2; l <= 10; ++l) {
        const PowerSumInstance inst(k, l);
        const Polynomial g = construct_G(inst);
        for (std::uint64_t x = 1; x <= 50; ++x, ++checked)
          if (g(Rational(big_from_u64(x))) != Rational(power_sum_oracle(inst, x)))
            o.require(false, "k=" + std::to_string(k) + " l=" + std::to_string(l) + " x=" + std::to_string(x));
      }
    o.require(checked == 4500, "case count");
  });

  criterion("AC2", "Bernoulli recurrence and denominators for even q <= 60", 1, [](Outcome& o) {
    for (unsigned n = 1; n <= 60; ++n) {
      Rational s = 0;
      for (unsigned i = 0; i < n; ++i) s += Rational(binomial(n + 1, i)) * bernoulli_number(i);
      o.require(s + Rational(n + 1) * bernoulli_number(n) == 0, "recurrence n=" + std::to_string(n));
    }
    for (unsigned q = 2; q <= 60; q += 2) {
      const Rational b = bernoulli_number(q);
      const BigInt den = b.get_den();
      o.require(den == staudt_clausen_denominator(q), "denominator q=" + std::to_string(q));
      o.require(mod_ui(den, 4) == 2, "den mod 4 q=" + std::to_string(q));
      Rational s = b;
      for (unsigned long p = 2; p <= q + 1; ++p)
        if (is_prime(p) && q % (p - 1) == 0) s += make_rational(1, p);
      o.require(is_integer(s), "integrality q=" + std::to_string(q));
    }
  });

  criterion("AC3", "d odd exactly at powers of two, else 2 mod 4", 5, [](Outcome& o) {
    for (unsigned q = 2; q <= 40; ++q)
      for (unsigned l : {2u, 4u, 6u, 8u}) {
        const BigInt d = compute_d(q, l);
        const bool ok = is_power_of_two(q) ? mod_ui(d, 2) == 1 : mod_ui(d, 4) == 2;
        o.require(ok, "q=" + std::to_string(q) + " l=" + std::to_string(l) + " d=" + d.get_str());
      }
  });

  criterion("AC4", "congruence snapshots mod 4", 2, [](Outcome& o) {
    const ModPoly q6 = M4({{6, 2}, {5, 2}, {4, 3}, {2, 1}});
    for (unsigned l : {2u, 4u, 6u, 8u})
      o.require(dP_mod(6, l, 4) == q6, "q=6 l=" + std::to_string(l) + ": " + dP_mod(6, l, 4).to_string());
    const ModPoly q8 = M4({{8, 3}, {6, 2}, {4, 1}, {2, 2}});
    for (unsigned l : {2u, 4u, 6u, 8u}) {
      const ModPoly got = dP_mod(8, l, 4);
      o.require(got == q8, "q=8 l=" + std::to_string(l) + ": expected " + q8.to_string() + ", got " + got.to_string());
    }
    const ModPoly q3a = reduce_mod(Polynomial::from_integers({0, 1}) * Polynomial::from_integers({1, 2}) *
                                       Polynomial::from_integers({1, 3}),
                                   4);
    for (unsigned l : {2u, 6u, 10u}) o.require(dP_mod(3, l, 4) == q3a, "q=3 l=" + std::to_string(l));
    const ModPoly q3b = M4({{3, 2}, {2, 1}, {1, 3}});
    for (unsigned l : {4u, 8u, 12u}) o.require(dP_mod(3, l, 4) == q3b, "q=3 l=" + std::to_string(l));
    for (long l = 2; l <= 10; ++l) {
      const Polynomial closed =
          Polynomial::from_integers({0, l - 1}) * Polynomial::from_integers({1, 3 * (l + 1), 2 * (l * l + l + 1)});
      o.require(construct_P(3, static_cast<unsigned>(l)) * Rational(2) == closed, "q=3 closed form l=" + std::to_string(l));
    }
  });

  criterion("AC5", "structure lemma on q in 2..20, even l in 2..10", 30, [](Outcome& o) {
    for (unsigned q = 2; q <= 20; ++q)
      for (unsigned l : {2u, 4u, 6u, 8u, 10u}) {
        const auto rep = verify_lemma6(q, l);
        const std::string tag = "q=" + std::to_string(q) + " l=" + std::to_string(l);
        if (q != 2 && q != 4) o.require(rep.conclusion_i, tag + " (i)");
        o.require(rep.conclusion_ii, tag + " (ii)");
        for (unsigned p = 3; p <= q; ++p)
          if (is_odd_prime(p)) o.require(count_coprime_multiplicity_zeros(rep.profile, p) >= 2, tag + " p=" + std::to_string(p));
      }
  });

  criterion("AC6", "k=3 factorisation and reduction consistency", 2, [](Outcome& o) {
    for (long l = 2; l <= 10; ++l) {
      const Polynomial rhs = Polynomial::monomial(l - 1, 2) * Polynomial::from_integers({l + 1, l * l + 1}) *
                             Polynomial::from_integers({1, l + 1});
      o.require(construct_G({3, static_cast<unsigned>(l)}) * Rational(4) == rhs, "factorisation l=" + std::to_string(l));
    }
    for (unsigned l = 2; l <= 50; ++l) {
      const BigInt L = l;
      const BigInt lhs = pow(BigInt(pow(L, 3) - 1), 2) - (pow(L, 4) - 1) * (L * L - 1);
      o.require(lhs == L * L * (L - 1) * (L - 1), "identity l=" + std::to_string(l));
      // u = (l^4 - 1) t turns v^2 - (l^4 - 1) t^2 = lhs into u^2 - (l^4 - 1) v^2 = -(l^4 - 1) lhs
      o.require(-(pow(L, 4) - 1) * lhs == -L * L * (L + 1) * (L * L + 1) * pow(BigInt(L - 1), 3), "scaled l=" + std::to_string(l));
      o.require(k3_reduction_consistent(l), "reduction l=" + std::to_string(l));
    }
  });

  criterion("AC7", "exceptional shape classification", 1, [](Outcome& o) {
    o.require(shape_is({1, 1}, 2, ExceptionalShape::shape_b), "{1,1} m=2");
    o.require(shape_is({1, 1, 2}, 2, ExceptionalShape::shape_b), "{2,1,1} m=2");
    for (unsigned m = 3; m <= 12; ++m) o.require(shape_is({1, 1}, m, ExceptionalShape::none), "{1,1} m=" + std::to_string(m));
  });

  criterion("AC8", "k=1 l=2 family first records", 1, [](Outcome& o) {
    const auto res = family_k1(2, 2);
    o.require(res.records.size() == 2, "record count");
    if (res.records.size() < 2) return;
    o.require(res.records[0].x == 8 && res.records[0].y == 10, "first record");
    o.require(res.records[1].x == 800 && res.records[1].y == 980, "second record");
    o.require(power_sum_oracle({1, 2}, 8) == 100, "oracle x=8");
    o.require(power_sum_oracle({1, 2}, 800) == 960400, "oracle x=800");
    for (const auto& r : res.records) o.require(r.oracle_checked, "oracle flag");
  });

  criterion("AC9", "search matches family for x <= 10^6, partition invariant", 60, [](Outcome& o) {
    std::vector<std::uint64_t> fam;
    for (const auto& r : family_k1(2, 10).records)
      if (r.x <= 1000000) fam.push_back(r.x.get_ui());
    o.require(!fam.empty(), "family");
    std::vector<SolutionRecord> first;
    for (unsigned parts : {1u, 4u, 16u}) {
      SearchConfig cfg;
      cfg.k = 1;
      cfg.l = 2;
      cfg.x_max = 1000000;
      cfg.n_max = 2;
      cfg.partitions = parts;
      const auto got = search_solutions(cfg);
      std::vector<std::uint64_t> xs;
      for (const auto& r : got) xs.push_back(r.x);
      o.require(xs == fam, "partitions=" + std::to_string(parts) + " differs from family");
      if (parts == 1)
        first = got;
      else
        o.require(got == first, "partitions=" + std::to_string(parts) + " differs from partitions=1");
    }
  });

  criterion("AC10", "main theorem hypotheses on concrete instances", 30, [](Outcome& o) {
    for (unsigned k : {2u, 4u, 5u, 6u, 7u})
      for (unsigned l : {2u, 4u, 6u})
        for (unsigned n = 2; n <= 5; ++n)
          o.require(theorem2_applicability(k, l, n),
                    "k=" + std::to_string(k) + " l=" + std::to_string(l) + " n=" + std::to_string(n));
  });

  std::printf("%d criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
