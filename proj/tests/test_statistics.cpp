#include <doctest.h>

#include <map>
#include <set>

#include "core/cores.hpp"
#include "core/error.hpp"
#include "core/statistics.hpp"

using namespace tcorelab;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition::from_parts(parts); }

int mod4(long long v) { return static_cast<int>(((v % 4) + 4) % 4); }

} // namespace

TEST_CASE("srank") {
  CHECK(srank(P({5, 4, 3, 3, 1, 1})) == 4);
  CHECK(srank(P({3, 3, 3})) == 0);
  CHECK(srank(P({5, 3, 1, 1})) == 2);
  CHECK(srank(Partition{}) == 0);
  for (int n = 0; n <= 25; ++n)
    for_each_partition(n, [&](const Partition &p) {
      int s = srank(p);
      REQUIRE(s % 2 == 0);
      REQUIRE(srank(conjugate(p)) == -s);
      REQUIRE(mod4(s) == srank_crit_mod4(p));
      REQUIRE(mod4(s) == mod4(n - strip_to_core(p, 2).weight()));
      CoreQuotient cq = phi1(p, 2);
      REQUIRE(mod4(s) == mod4(2 * (cq.quotient[0].weight() + cq.quotient[1].weight())));
    });
}

TEST_CASE("rank and crank") {
  CHECK(dyson_rank(P({4, 1})) == 2);
  CHECK(dyson_rank(P({1, 1, 1, 1})) == -3);
  CHECK(dyson_rank(P({7})) == 6);
  CHECK(dyson_rank(Partition{}) == 0);
  CHECK(ag_crank(P({9})) == 9);
  CHECK(ag_crank(P({1})) == -1);
  CHECK(ag_crank(P({2, 1, 1})) == -2);
  CHECK(ag_crank(P({4, 3, 1})) == 1);
  CHECK(ag_crank(Partition{}) == 0);
}

TEST_CASE("bijection 1") {
  Partition big = P({6, 6, 5, 4, 3, 3, 2, 2, 2, 2, 1, 1});
  auto [p1, p2] = bijection1(big);
  CHECK(p1 == P({3, 1, 1}));
  CHECK(p2 == P({5, 4, 3, 3, 1, 1}));
  CHECK(bijection1_inv(p1, p2) == big);
  auto [e1, e2] = bijection1(P({5, 4, 3, 3, 1, 1}));
  CHECK(e1.empty());
  CHECK(e2 == P({5, 4, 3, 3, 1, 1}));
  auto [t1, t2] = bijection1(P({2, 2}));
  CHECK(t1 == P({1}));
  CHECK(t2.empty());
  CHECK(bijection1_inv(t1, t2) == P({2, 2}));
  CHECK_THROWS_AS(bijection1_inv(P({1}), P({2, 2})), Error);
  for (int n = 0; n <= 25; ++n)
    for_each_partition(n, [&](const Partition &p) {
      auto [a, b] = bijection1(p);
      REQUIRE(p.weight() == 4 * a.weight() + b.weight());
      REQUIRE(srank(p) == srank(b));
      for (int k = 2; k <= n; k += 2)
        REQUIRE(b.frequency(k) <= 1);
      REQUIRE(bijection1_inv(a, b) == p);
    });
}

TEST_CASE("bijection 2 and types") {
  CHECK(is_type_b(P({3, 1})));
  CHECK(is_type_b(P({5, 3, 1, 1})));
  CHECK(is_type_a(P({2, 2})));
  CHECK_FALSE(is_type_a(P({3, 1})));
  CHECK(bijection2(P({2, 2})) == P({3, 1}));
  CHECK(bijection2(P({3, 2, 2})) == P({5, 1, 1}));
  CHECK_THROWS_AS(bijection2(P({3, 1})), Error);
  for (int n = 0; n <= 20; ++n) {
    std::set<Partition> image, type_b;
    for_each_partition(n, [&](const Partition &p) {
      if (is_type_b(p))
        type_b.insert(p);
      if (!is_type_a(p))
        return;
      Partition b = bijection2(p);
      REQUIRE(b.weight() == n);
      REQUIRE(srank(b) == srank(p));
      REQUIRE(bijection2_inv(b) == p);
      REQUIRE(image.insert(b).second);
    });
    REQUIRE(image == type_b);
  }
}

TEST_CASE("St-crank") {
  CHECK(st_crank(P({6, 6, 5, 4, 3, 3, 2, 2, 2, 2, 1, 1})) == 1);
  CHECK(st_crank(P({5, 3, 1, 1})) == 2);
  CHECK(st_crank(P({5, 4, 1})) == 0);
  CHECK(st_crank(Partition{}) == 0);
  for (int n = 0; n <= 20; ++n)
    for_each_partition(n, [&](const Partition &p) {
      if (is_type_a(p))
        REQUIRE(st_crank(p) == -1 + srank(p) / 2);
      if (is_type_b(p))
        REQUIRE(st_crank(p) == 1 + srank(p) / 2);
    });
}

TEST_CASE("2-quotient-rank") {
  CHECK(two_quotient_rank(P({5, 4, 1})) == 1);
  for (int k = 0; k <= 6; ++k) {
    std::vector<int> stair;
    for (int j = k; j >= 1; --j)
      stair.push_back(j);
    CHECK(two_quotient_rank(Partition::from_parts(stair)) == 0);
  }
  // (2,2) has 2-core empty and quotient weight 2
  CoreQuotient cq = phi1(P({2, 2}), 2);
  CHECK(two_quotient_rank(P({2, 2})) == cq.quotient[0].length() - cq.quotient[1].length());
}

TEST_CASE("5-core crank") {
  CHECK(five_core_crank(P({5, 1, 1, 1, 1})) == 0);
  CHECK(five_core_crank(P({3, 3, 1, 1, 1})) == 1);
  CHECK(five_core_crank(P({5, 2, 2})) == 4);
  CHECK_THROWS_AS(five_core_crank(P({3})), Error);
  CHECK(evaluate(Statistic::five_core_crank, Partition{}) == 0);
}

TEST_CASE("BG-rank") {
  CHECK(bg_rank(P({3, 2, 1})) == 2);
  CHECK(bg_rank(P({2})) == 0);
  CHECK(bg_rank(Partition{}) == 0);
  for (int n = 0; n <= 25; ++n)
    for_each_partition(n, [&](const Partition &p) {
      auto r = residue_counts(p, 2);
      int n0 = bg_rank(p);
      REQUIRE(n0 == r[0] - r[1]);
      REQUIRE(n0 == phi2(strip_to_core(p, 2), 2).coords[0]);
      REQUIRE(mod4(srank(p)) == mod4(n - static_cast<long long>(n0) * (2 * n0 - 1)));
    });
}

TEST_CASE("g(t,n,i)") {
  for (int t = 2; t <= 9; ++t)
    for (int i = 0; i < t; ++i) {
      CHECK(g_tni(t, 0, i) == 0);
      for (int n = -20; n <= 20; ++n)
        REQUIRE(g_tni(t, n, i) + g_tni(t, -n, t - 1 - i) == 0);
    }
  CHECK(g_tni(5, 1, 0) == 0);
}

TEST_CASE("thm4_rhs and the srtq formulas") {
  CHECK(thm4_rhs(NVector::make({0, 0, 0, 0, 0})) == 0);
  CHECK(thm4_rhs(NVector::make({-1, 1})) == mod4(srank(P({2, 1}))));
  for (int t = 2; t <= 9; ++t) {
    for_each_n_vector(t, 30, [&](const NVector &n, long long) {
      REQUIRE(thm4_rhs(n) == mod4(srank(phi2_inv(n))));
    });
    for (int w = 0; w <= 16; ++w)
      for_each_partition(w, [&](const Partition &p) {
        CoreQuotient cq = phi1(p, t);
        REQUIRE(srtq_rhs(cq) == mod4(srank(p)));
      });
  }
  CoreQuotient empty_q{5, P({4}), std::vector<Partition>(5)};
  CHECK(srtq_rhs(empty_q) == mod4(srank(P({4}))));
}

TEST_CASE("statistic names") {
  for (auto s : {Statistic::srank, Statistic::dyson_rank, Statistic::ag_crank, Statistic::st_crank,
                 Statistic::two_quotient_rank, Statistic::five_core_crank, Statistic::bg_rank})
    CHECK(parse_statistic(statistic_name(s)) == s);
  CHECK_FALSE(parse_statistic("nope").has_value());
  CHECK(evaluate(Statistic::srank, P({5, 3, 1, 1})) == 2);
}
