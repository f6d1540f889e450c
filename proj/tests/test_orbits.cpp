#include <doctest.h>

#include <map>
#include <set>

#include "core/error.hpp"
#include "core/orbits.hpp"
#include "core/statistics.hpp"

using namespace tcorelab;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition::from_parts(parts); }

int mod4(long long v) { return static_cast<int>(((v % 4) + 4) % 4); }

} // namespace

TEST_CASE("shifts") {
  CHECK(c1_shift(AlphaVector::make({1, 0, 0, 0, 0})) == AlphaVector::make({0, 1, 0, 0, 0}));
  std::array<Partition, 5> q{P({1}), P({2}), P({3}), P({4}), P({5})};
  std::array<Partition, 5> expect{P({5}), P({3}), P({4}), P({1}), P({2})};
  CHECK(c2_shift(q) == expect);
  auto r = q;
  AlphaVector a = AlphaVector::make({2, -1, 0, 1, -1});
  AlphaVector b = a;
  for (int k = 0; k < 5; ++k) {
    r = c2_shift(r);
    b = c1_shift(b);
    CHECK(q_alpha(b) == q_alpha(a));
  }
  CHECK(r == q);
  CHECK(b == a);
  std::array<Partition, 5> none{};
  CHECK(c2_shift(none) == none);
}

TEST_CASE("orbit maps on small weights") {
  CHECK(orbit_map(P({5, 1, 1, 1, 1})) == P({3, 3, 1, 1, 1}));
  CHECK(orbit_map_s(P({2, 2, 1, 1, 1, 1, 1})) == P({3, 2, 2, 2}));
  CHECK_THROWS_AS(orbit_map(P({3})), Error);
  for (int n : {4, 9, 14, 19}) {
    std::set<Partition> seen_plain, seen_shift;
    for_each_partition(n, [&](const Partition &p) {
      Partition a = p, b = p;
      int c = five_core_crank(p);
      for (int k = 1; k <= 5; ++k) {
        a = orbit_map(a);
        b = orbit_map_s(b);
        REQUIRE(a.weight() == n);
        REQUIRE(five_core_crank(a) == (c + k) % 5);
        REQUIRE(five_core_crank(b) == (c + k) % 5);
        REQUIRE(mod4(srank(b)) == mod4(srank(p)));
      }
      REQUIRE(a == p);
      REQUIRE(b == p);
      REQUIRE(seen_plain.insert(orbit_map(p)).second);
      REQUIRE(seen_shift.insert(orbit_map_s(p)).second);
    });
  }
}

TEST_CASE("orbits of 9") {
  Orbit o = orbit(P({3, 3, 3}), true);
  CHECK(o.members[five_core_crank(P({3, 3, 3}))] == P({3, 3, 3}));
  std::set<Partition> all;
  int count = 0;
  for_each_partition(9, [&](const Partition &p) {
    Orbit ob = orbit(p, true);
    if (ob.members[0] != p)
      return;
    ++count;
    int s = mod4(srank(p));
    for (int k = 0; k < 5; ++k) {
      CHECK(five_core_crank(ob.members[k]) == k);
      CHECK(mod4(srank(ob.members[k])) == s);
      all.insert(ob.members[k]);
    }
  });
  CHECK(count == 6);
  CHECK(all.size() == 30);
}

TEST_CASE("theta") {
  CHECK(phi2(theta(Partition{}), 5).coords == std::vector<int>{1, 1, 0, -1, -1});
  CHECK_THROWS_AS(theta(P({5})), Error);
  for (long long n = 0; n <= 20; ++n) {
    std::set<Partition> image;
    long long count = 0;
    for_each_n_vector(5, n, [&](const NVector &v, long long w) {
      if (w != n)
        return;
      ++count;
      Partition c = phi2_inv(v);
      Partition img = theta(c);
      REQUIRE(img.weight() == 5 * n + 4);
      REQUIRE(is_t_core(img, 5));
      REQUIRE(five_core_crank(img) == 0);
      REQUIRE(mod4(srank(img)) == mod4(srank(c)));
      REQUIRE(image.insert(img).second);
    });
    REQUIRE(static_cast<long long>(image.size()) == count);
  }
}

TEST_CASE("4n+3 map") {
  CHECK(phi2(map_4n_plus_3(Partition{}), 5).coords == std::vector<int>{0, 1, 0, -1, 0});
  CHECK(map_4n_plus_3(Partition{}).weight() == 3);
  for (long long n = 0; n <= 25; ++n)
    for_each_n_vector(5, n, [&](const NVector &v, long long w) {
      if (w != n)
        return;
      Partition img = map_4n_plus_3(phi2_inv(v));
      REQUIRE(img.weight() == 4 * n + 3);
      REQUIRE(mod4(srank(img)) == 0);
      NVector m = phi2(img, 5);
      for (int i = 0; i < 5; ++i)
        REQUIRE(((m.coords[i] % 2) + 2) % 2 == (i == 1 || i == 3 ? 1 : 0));
    });
}
