#include <powersum/json.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace powersum;

namespace {

// Naive double loop: literal sum per x, then y^n compared against every
// candidate y by repeated multiplication.
std::vector<SolutionRecord> naive_search(unsigned k, unsigned l, std::uint64_t x_max, unsigned n_max) {
  std::vector<SolutionRecord> out;
  for (std::uint64_t x = 1; x <= x_max; ++x) {
    const BigInt s = power_sum_oracle({k, l}, x);
    for (unsigned n = 2; n <= n_max; ++n) {
      // y <= s^(1/n); test y by walking upward from a float estimate
      long y = static_cast<long>(std::pow(s.get_d(), 1.0 / n)) - 2;
      if (y < 1) y = 1;
      for (;; ++y) {
        BigInt p = 1;
        for (unsigned i = 0; i < n; ++i) p *= y;
        if (p == s) out.push_back({k, l, x, BigInt(y), n, SolutionSource::search});
        if (p >= s) break;
      }
    }
  }
  return out;
}

}  // namespace

TEST(NthRoot, Examples) {
  auto r = integer_nth_root(100, 2);
  EXPECT_EQ(r.root, 10);
  EXPECT_TRUE(r.exact);
  r = integer_nth_root(100, 3);
  EXPECT_EQ(r.root, 4);
  EXPECT_FALSE(r.exact);
  r = integer_nth_root(960400, 2);
  EXPECT_EQ(r.root, 980);
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(integer_nth_root(1, 7).root, 1);
  EXPECT_THROW(integer_nth_root(8, 1), std::domain_error);
}

TEST(NthRoot, FloorPropertyAndMonotonicity) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 2000; ++i) {
    BigInt s = big_from_u64(rng());
    if (i % 3 == 0) s *= big_from_u64(rng());
    if (s < 1) s = 1;
    const unsigned n = 2 + rng() % 9;
    const auto r = integer_nth_root(s, n);
    EXPECT_LE(pow(r.root, n), s);
    EXPECT_GT(pow(BigInt(r.root + 1), n), s);
    EXPECT_LE(r.root, integer_nth_root(BigInt(s + 1), n).root);
    const auto back = integer_nth_root(pow(r.root, n), n);
    EXPECT_TRUE(back.exact);
    EXPECT_EQ(back.root, r.root);
  }
}

TEST(NthRoot, MaybeSquareNeverRejectsSquares) {
  for (long v = 0; v < 5000; ++v) EXPECT_TRUE(maybe_square(BigInt(v) * v));
}

TEST(Search, FindsK1L2Family) {
  SearchConfig cfg;
  cfg.k = 1;
  cfg.l = 2;
  cfg.x_max = 1000;
  cfg.n_max = 5;
  const auto got = search_solutions(cfg);
  ASSERT_FALSE(got.empty());
  bool found = false;
  for (const auto& r : got) found |= r.x == 8 && r.y == 10 && r.n == 2;
  EXPECT_TRUE(found);
}

TEST(Search, MatchesNaiveRecomputation) {
  for (auto [k, l] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {1, 2}, {1, 5}, {3, 3}, {2, 7}, {5, 2}}) {
    SearchConfig cfg;
    cfg.k = k;
    cfg.l = l;
    cfg.x_max = 200;
    cfg.n_max = 5;
    cfg.partitions = 3;
    EXPECT_EQ(search_solutions(cfg), naive_search(k, l, 200, 5)) << "k=" << k << " l=" << l;
  }
}

TEST(Search, PartitionInvariant) {
  SearchConfig cfg;
  cfg.k = 1;
  cfg.l = 4;
  cfg.x_max = 20000;
  cfg.n_max = 3;
  cfg.partitions = 1;
  const auto base = search_solutions(cfg);
  for (unsigned p : {2u, 4u, 7u, 16u, 50000u}) {
    cfg.partitions = p;
    EXPECT_EQ(search_solutions(cfg), base) << "partitions=" << p;
  }
}

TEST(Search, RecordsReverifyAndAreSorted) {
  SearchConfig cfg;
  cfg.k = 2;
  cfg.l = 2;
  cfg.x_max = 200;
  cfg.n_max = 5;
  const auto got = search_solutions(cfg);
  for (std::size_t i = 0; i < got.size(); ++i) {
    EXPECT_TRUE(reverify(got[i]));
    if (i) EXPECT_TRUE(got[i - 1].x < got[i].x || (got[i - 1].x == got[i].x && got[i - 1].n < got[i].n));
  }
  SolutionRecord bad = got.front();
  bad.y += 1;
  EXPECT_FALSE(reverify(bad));
}

TEST(Search, FamilyRecordsAppearInSearch) {
  for (unsigned l : {2u, 4u, 5u, 7u}) {
    SearchConfig cfg;
    cfg.k = 1;
    cfg.l = l;
    cfg.x_max = 100000;
    cfg.n_max = 2;
    cfg.partitions = 4;
    const auto got = search_solutions(cfg);
    for (const auto& r : family_k1(l, 50).records) {
      if (r.x > 100000) break;
      const SolutionRecord want{1, l, r.x.get_ui(), r.y, 2, SolutionSource::search};
      EXPECT_NE(std::find(got.begin(), got.end(), want), got.end()) << "l=" << l << " x=" << r.x;
    }
  }
}

TEST(Search, RejectsBadConfig) {
  SearchConfig cfg;
  cfg.n_max = 1;
  EXPECT_THROW(search_solutions(cfg), std::invalid_argument);
  cfg.n_max = 2;
  cfg.partitions = 0;
  EXPECT_THROW(search_solutions(cfg), std::invalid_argument);
}

TEST(Pipeline, Verdicts) {
  auto rep = pipeline_report(2, 2, {2});
  EXPECT_TRUE(rep.two_distinct_zeros);
  EXPECT_EQ(rep.entries[0].verdict, "bound applies");

  rep = pipeline_report(1, 2, {2, 3});
  EXPECT_EQ(rep.profile, (MultiplicityProfile{1, 1}));
  EXPECT_EQ(rep.entries[0].verdict, "exceptional shape (b); Pell family available");
  EXPECT_TRUE(rep.entries[0].family_available);
  EXPECT_EQ(rep.entries[1].verdict, "bound applies");

  rep = pipeline_report(3, 4, {2, 4});
  EXPECT_EQ(rep.entries[0].assessment.exceptional, ExceptionalShape::shape_b);
  EXPECT_TRUE(rep.entries[0].family_available);
  EXPECT_TRUE(rep.entries[1].assessment.bound_applies());
}

TEST(Json, RecordsUseDecimalStrings) {
  const SolutionRecord r{1, 2, 800, BigInt("980"), 2, SolutionSource::search};
  const auto j = to_json(r);
  EXPECT_EQ(j["x"], "800");
  EXPECT_EQ(j["y"], "980");
  EXPECT_EQ(j["source"], "search");
  const auto f = family_k1(2, 1).records.at(0);
  const auto jf = to_json(f);
  EXPECT_EQ(jf["u"], "49");
  EXPECT_EQ(jf["verified"], true);
  const auto jl = to_json(verify_lemma6(6, 2));
  EXPECT_EQ(jl["mod4_snapshot"]["text"], "2x^6 + 2x^5 + 3x^4 + x^2");
  EXPECT_EQ(jl["d"], "2");
}
