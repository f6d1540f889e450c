#include <doctest.h>

#include <map>

#include "core/cores.hpp"
#include "core/error.hpp"
#include "core/statistics.hpp"

using namespace tcorelab;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition::from_parts(parts); }

std::vector<Partition> all_up_to(int n) {
  std::vector<Partition> out;
  for (int m = 0; m <= n; ++m)
    for_each_partition(m, [&](const Partition &p) { out.push_back(p); });
  return out;
}

} // namespace

TEST_CASE("words") {
  ColorWords w0 = words(Partition{}, 2);
  CHECK(w0.boundary(0) == 0);
  CHECK(w0.boundary(1) == 0);
  ColorWords w = words(P({2, 1}), 2);
  CHECK(w.boundary(0) == -1);
  CHECK(w.boundary(1) == 1);
  // on every t-core the word of color i is E...E N...N with the last E in region n_i
  for (int t = 2; t <= 6; ++t)
    for (const auto &p : all_up_to(16)) {
      if (!is_t_core(p, t))
        continue;
      NVector n = phi2(p, t);
      ColorWords cw = words(p, t);
      for (int i = 0; i < t; ++i)
        REQUIRE(cw.boundary(i) == n.coords[i]);
    }
  // words of non-cores are not of the boundary form for some color
  ColorWords nc = words(P({2}), 2);
  const bool all_boundary = nc.boundary(0).has_value() && nc.boundary(1).has_value();
  CHECK_FALSE(all_boundary);
}

TEST_CASE("phi1 examples") {
  CoreQuotient cq = phi1(P({5, 4, 1}), 2);
  CHECK(cq.quotient[0].length() - cq.quotient[1].length() == 1);
  CHECK(cq.core.weight() + 2 * cq.quotient_weight() == 10);

  CoreQuotient nine = phi1(P({9}), 5);
  CHECK(nine.core == P({4}));
  CHECK(nine.quotient[3] == P({1}));
  for (int i : {0, 1, 2, 4})
    CHECK(nine.quotient[i].empty());
  CHECK(phi1_inv(nine) == P({9}));

  CoreQuotient core_only = phi1(P({3, 1}), 5);
  CHECK(core_only.core == P({3, 1}));
  CHECK(core_only.quotient_weight() == 0);

  CoreQuotient bad{5, P({5}), std::vector<Partition>(5)};
  CHECK_THROWS_AS(phi1_inv(bad), Error);
}

TEST_CASE("phi1 round trip and oracle agreement") {
  for (const auto &p : all_up_to(20))
    for (int t : {2, 3, 4, 5, 7}) {
      CoreQuotient cq = phi1(p, t);
      REQUIRE(is_t_core(cq.core, t));
      REQUIRE(p.weight() == cq.core.weight() + t * cq.quotient_weight());
      REQUIRE(phi1_inv(cq) == p);
      if (p.weight() <= 18 && (t == 2 || t == 3 || t == 5))
        REQUIRE(strip_to_core(p, t) == cq.core);
    }
}

TEST_CASE("phi2") {
  NVector n = phi2(P({2, 1}), 2);
  CHECK(n.coords == std::vector<int>{-1, 1});
  CHECK(n.encoded_weight() == 3);
  CHECK(phi2(Partition{}, 4).coords == std::vector<int>(4, 0));
  CHECK_THROWS_AS(phi2(P({2}), 2), Error);
  CHECK(phi2_inv(NVector::make({-1, 1})) == P({2, 1}));
  CHECK(phi2_inv(NVector::make({0, 0, 0})).empty());
  CHECK(phi2_inv(NVector::make({1, 1, 0, -1, -1})).weight() == 4);
  CHECK_THROWS_AS(NVector::make({1, 1}), Error);
  for (int t = 2; t <= 7; ++t)
    for (const auto &p : all_up_to(25)) {
      if (!is_t_core(p, t))
        continue;
      NVector v = phi2(p, t);
      REQUIRE(v.encoded_weight() == p.weight());
      REQUIRE(phi2_inv(v) == p);
      NVector vc = phi2(conjugate(p), t);
      for (int i = 0; i < t; ++i)
        REQUIRE(vc.coords[i] == -v.coords[t - 1 - i]);
    }
}

TEST_CASE("alpha vectors") {
  CHECK(n_from_alpha(AlphaVector::make({1, 0, 0, 0, 0})).coords == std::vector<int>{1, -1, 0, 0, 0});
  CHECK(n_from_alpha(AlphaVector::make({0, 0, 0, 0, 1})).coords == std::vector<int>{1, 1, 0, -1, -1});
  CHECK(alpha_from_n(NVector::make({1, 1, 0, -1, -1})).coords == std::array<int, 5>{0, 0, 0, 0, 1});
  CHECK_THROWS_AS(alpha_from_n(NVector::make({0, 0, 0, 0, 0})), Error);
  CHECK_THROWS_AS(AlphaVector::make({1, 1, 0, 0, 0}), Error);
  CHECK(q_alpha(AlphaVector::make({1, 0, 0, 0, 0})) == 1);
  CHECK(q_alpha(AlphaVector::make({1, 1, -1, 0, 0})) == 3);
  int box = 0;
  for (int a0 = -2; a0 <= 2; ++a0)
    for (int a1 = -2; a1 <= 2; ++a1)
      for (int a2 = -2; a2 <= 2; ++a2)
        for (int a3 = -2; a3 <= 2; ++a3) {
          int a4 = 1 - a0 - a1 - a2 - a3;
          if (a4 < -2 || a4 > 2)
            continue;
          ++box;
          AlphaVector a = AlphaVector::make({a0, a1, a2, a3, a4});
          NVector n = n_from_alpha(a);
          REQUIRE(((n.dot_b() % 5) + 5) % 5 == 4);
          REQUIRE(alpha_from_n(n) == a);
          REQUIRE(n.encoded_weight() == 5 * q_alpha(a) - 1);
        }
  CHECK(box > 100);
}

TEST_CASE("q3") {
  CHECK(q3(0, 0) == 0);
  CHECK(q3(0, -1) == 1);
  CHECK(q3(1, 0) == 4);
  for (int n1 = -6; n1 <= 6; ++n1)
    for (int n2 = -6; n2 <= 6; ++n2)
      REQUIRE(q3(n1, n2) == NVector::make({-n1 - n2, n1, n2}).encoded_weight());
}

TEST_CASE("capital phi") {
  PhiImage four = capital_phi(P({4}));
  CHECK(n_from_alpha(four.alpha) == phi2(P({4}), 5));
  for (const auto &q : four.quotient)
    CHECK(q.empty());
  PhiImage nine = capital_phi(P({9}));
  CHECK(nine.alpha == four.alpha);
  CHECK(nine.quotient[3] == P({1}));
  CHECK_THROWS_AS(capital_phi(P({5})), Error);
  for (int n : {9, 14, 19})
    for_each_partition(n, [&](const Partition &p) {
      PhiImage im = capital_phi(p);
      long long qw = 0;
      for (const auto &q : im.quotient)
        qw += q.weight();
      REQUIRE(n == 5 * q_alpha(im.alpha) - 1 + 5 * qw);
      REQUIRE(capital_phi_inv(im) == p);
    });
}

TEST_CASE("t-core counts") {
  auto a2 = t_core_counts(2, 60);
  for (int n = 0; n <= 60; ++n) {
    bool triangular = false;
    for (int k = 0; k * (k + 1) / 2 <= n; ++k)
      triangular |= k * (k + 1) / 2 == n;
    CHECK(a2[n] == (triangular ? 1 : 0));
  }
  CHECK(count_t_cores(4, 5) == 5);
  CHECK(count_t_cores(9, 5) == 5);
  for (int t = 2; t <= 7; ++t) {
    auto counts = t_core_counts(t, 30);
    for (int n = 0; n <= 30; ++n) {
      long long brute = 0;
      for_each_partition(n, [&](const Partition &p) { brute += is_t_core(p, t); });
      REQUIRE(counts[n] == brute);
    }
  }
}

TEST_CASE("n-vector radius is safe") {
  // (3,-3) has weight 15 and squared norm 18, beyond 2n/t + t = 17
  NVector v = NVector::make({3, -3});
  CHECK(v.encoded_weight() == 15);
  CHECK(n_vector_radius(2, 15) >= 3);
  for (int t = 2; t <= 6; ++t) {
    long long W = 40;
    int R = n_vector_radius(t, W);
    // every vector in a box twice as wide with weight <= W stays within R
    std::vector<int> c(t);
    std::function<void(int, int)> rec = [&](int i, int sum) {
      if (i == t - 1) {
        c[i] = -sum;
        NVector n = NVector::make(c);
        if (n.encoded_weight() <= W)
          for (int x : c)
            REQUIRE(std::abs(x) <= R);
        return;
      }
      for (int x = -2 * R - 2; x <= 2 * R + 2; ++x) {
        c[i] = x;
        rec(i + 1, sum + x);
      }
    };
    if (t <= 4)
      rec(0, 0);
  }
}
