#include <doctest.h>

#include <set>

#include "core/error.hpp"
#include "core/partition.hpp"

using namespace tcorelab;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition::from_parts(parts); }

// Euler recurrence with pentagonal numbers; independent of the enumerator.
long long euler_p(int n) {
  std::vector<long long> p(n + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m)
        break;
      long long sign = (k % 2) ? 1 : -1;
      p[m] += sign * p[m - g1];
      if (g2 <= m)
        p[m] += sign * p[m - g2];
    }
  return p[n];
}

// Cells of the diagram as a set, for strip checks.
std::set<std::pair<int, int>> cells(const Partition &p) {
  std::set<std::pair<int, int>> s;
  for (int i = 1; i <= p.length(); ++i)
    for (int j = 1; j <= p.row(i); ++j)
      s.insert({i, j});
  return s;
}

} // namespace

TEST_CASE("from_parts canonicalizes") {
  std::vector<int> raw{1, 4, 0, 1};
  CHECK(Partition::from_parts(raw).parts() == std::vector<int>{4, 1, 1});
  CHECK(Partition::from_parts(std::span<const int>{}).empty());
  CHECK(P({3, 3, 3}).parts() == std::vector<int>{3, 3, 3});
  CHECK(P({3, 3, 3}).weight() == 9);
  std::vector<int> bad{2, -1};
  CHECK_THROWS_AS(Partition::from_parts(bad), Error);
}

TEST_CASE("text forms") {
  CHECK(parse_partition("5,4,1") == P({5, 4, 1}));
  CHECK(parse_partition("") == Partition{});
  CHECK(parse_partition(" 1, 4 ,1") == P({4, 1, 1}));
  CHECK_THROWS_AS(parse_partition("3,x"), Error);
  CHECK_THROWS_AS(parse_partition("3,-2"), Error);
  CHECK(P({5, 4, 1}).to_csv() == "5,4,1");
  CHECK(P({3, 1, 1}).to_frequency_notation() == "(1^2,3^1)");
  CHECK(Partition{}.to_frequency_notation() == "()");
}

TEST_CASE("conjugate") {
  CHECK(conjugate(P({3, 2, 1})) == P({3, 2, 1}));
  CHECK(conjugate(P({4, 1})) == P({2, 1, 1, 1}));
  CHECK(conjugate(P({5, 4, 3, 3, 1, 1})) == P({6, 4, 4, 2, 1}));
  CHECK(conjugate(Partition{}).empty());
  for (int n = 0; n <= 30; ++n)
    for_each_partition(n, [](const Partition &p) {
      Partition c = conjugate(p);
      REQUIRE(c.weight() == p.weight());
      REQUIRE(conjugate(c) == p);
    });
}

TEST_CASE("odd parts and Durfee square") {
  CHECK(odd_part_count(P({5, 4, 3, 3, 1, 1})) == 5);
  CHECK(odd_part_count(Partition{}) == 0);
  CHECK(odd_part_count(P({2, 2})) == 0);
  CHECK(durfee_size(P({3, 3, 3})) == 3);
  CHECK(durfee_size(Partition{}) == 0);
  CHECK(durfee_size(P({4, 1})) == 1);
}

TEST_CASE("enumeration") {
  CHECK(enumerate_partitions(9).size() == 30);
  auto zero = enumerate_partitions(0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].empty());
  auto four = enumerate_partitions(4);
  REQUIRE(four.size() == 5);
  CHECK(four[0] == P({4}));
  CHECK(four[1] == P({3, 1}));
  CHECK(four[2] == P({2, 2}));
  CHECK(four[4] == P({1, 1, 1, 1}));
  for (int n = 0; n <= 40; ++n) {
    long long count = 0;
    std::optional<Partition> prev;
    for_each_partition(n, [&](const Partition &p) {
      ++count;
      REQUIRE(p.weight() == n);
      if (prev)
        REQUIRE(p < *prev);
      prev = p;
    });
    CHECK(count == euler_p(n));
  }
  CHECK_THROWS_AS(PartitionStream(default_enumeration_bound + 1), Error);
}

TEST_CASE("enumeration bound override") {
  set_enumeration_bound(5);
  CHECK_THROWS_AS(enumerate_partitions(6), Error);
  set_enumeration_bound(default_enumeration_bound);
  CHECK(enumerate_partitions(6).size() == 11);
}

TEST_CASE("residue counts") {
  CHECK(residue_counts(P({2, 1}), 2) == std::vector<long long>{1, 2});
  CHECK(residue_counts(Partition{}, 5) == std::vector<long long>(5, 0));
  CHECK(residue_counts(P({3, 3, 3}), 3) == std::vector<long long>{3, 3, 3});
  CHECK_THROWS_AS(residue_counts(P({1}), 1), Error);
  for (int n = 0; n <= 25; ++n)
    for_each_partition(n, [&](const Partition &p) {
      for (int t = 2; t <= 9; ++t) {
        auto r = residue_counts(p, t);
        long long s = 0;
        for (auto v : r)
          s += v;
        REQUIRE(s == n);
      }
    });
}

TEST_CASE("add_cell") {
  CHECK(add_cell(P({2, 1}), {1, 3}) == P({3, 1}));
  CHECK(add_cell(Partition{}, {1, 1}) == P({1}));
  CHECK(add_cell(P({2, 1}), {3, 1}) == P({2, 1, 1}));
  CHECK_THROWS_AS(add_cell(P({2, 1}), {2, 3}), Error);
  CHECK_THROWS_AS(add_cell(P({2, 1}), {1, 1}), Error);
}

TEST_CASE("rim hook removals") {
  auto a = rim_hook_removals(P({5}), 5);
  REQUIRE(a.size() == 1);
  CHECK(a[0].result.empty());
  CHECK(a[0].head == Cell{1, 5});
  // the largest hook of (3,2) is 4: it is a 5-core
  CHECK(rim_hook_removals(P({3, 2}), 5).empty());
  auto c = rim_hook_removals(P({3, 2}), 4);
  REQUIRE(c.size() == 1);
  CHECK(c[0].result == P({1}));
  CHECK(c[0].head == Cell{1, 3});
  CHECK(rim_hook_removals(P({1}), 2).empty());
}

// Brute-force oracle: a removal is valid iff the removed cells form a connected
// skew shape with no 2x2 square and the remainder is a partition.
TEST_CASE("rim hook removals agree with brute force") {
  for (int n = 1; n <= 12; ++n)
    for_each_partition(n, [&](const Partition &p) {
      for (int len = 1; len <= n; ++len) {
        auto got = rim_hook_removals(p, len);
        std::set<std::vector<int>> found;
        for (const auto &r : got) {
          REQUIRE(r.result.weight() == n - len);
          found.insert(r.result.parts());
          auto order = strip_attachment_order(p, r);
          REQUIRE(static_cast<int>(order.size()) == len);
          Partition q = r.result;
          for (Cell cell : order)
            q = add_cell(q, cell);
          REQUIRE(q == p);
          // the head is the North-East-most removed cell
          auto diff = cells(p);
          for (auto cc : cells(r.result))
            diff.erase(cc);
          int minrow = n + 1, maxcol = 0;
          for (auto [i, j] : diff) {
            minrow = std::min(minrow, i);
            maxcol = std::max(maxcol, j);
          }
          REQUIRE(r.head == Cell{minrow, maxcol});
        }
        std::set<std::vector<int>> expect;
        for (const auto &q : enumerate_partitions(n - len)) {
          auto big = cells(p), small = cells(q);
          bool inside = true;
          for (auto cc : small)
            if (!big.count(cc))
              inside = false;
          if (!inside)
            continue;
          for (auto cc : small)
            big.erase(cc);
          bool square = false;
          for (auto [i, j] : big)
            if (big.count({i + 1, j}) && big.count({i, j + 1}) && big.count({i + 1, j + 1}))
              square = true;
          // connectivity by flood fill
          std::set<std::pair<int, int>> seen{*big.begin()};
          std::vector<std::pair<int, int>> todo{*big.begin()};
          while (!todo.empty()) {
            auto [i, j] = todo.back();
            todo.pop_back();
            for (auto nb : {std::pair{i + 1, j}, std::pair{i - 1, j}, std::pair{i, j + 1}, std::pair{i, j - 1}})
              if (big.count(nb) && seen.insert(nb).second)
                todo.push_back(nb);
          }
          if (!square && seen.size() == big.size())
            expect.insert(q.parts());
        }
        REQUIRE(found == expect);
        REQUIRE(got.size() == expect.size());
      }
    });
}

TEST_CASE("strip_to_core") {
  CHECK(strip_to_core(P({5}), 5).empty());
  CHECK(strip_to_core(P({3, 2}), 5) == P({3, 2}));
  CHECK(strip_to_core(P({4, 2}), 5) == P({1}));
  for (int n = 0; n <= 18; ++n)
    for_each_partition(n, [&](const Partition &p) {
      for (int t : {2, 3, 5}) {
        Partition a = strip_to_core(p, t, StripOrder::first_head);
        Partition b = strip_to_core(p, t, StripOrder::last_head);
        REQUIRE(a == b);
        REQUIRE(is_t_core(a, t));
        REQUIRE((n - a.weight()) % t == 0);
      }
    });
}
