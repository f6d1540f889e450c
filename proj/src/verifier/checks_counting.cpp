#include <set>

#include "../core/cores.hpp"
#include "../core/statistics.hpp"
#include "check_util.hpp"
#include "registry.hpp"
#include "tables.hpp"
#include "tally.hpp"

namespace tcorelab::verify {
namespace {

using qs::Integer;
using IS = qs::Series<Integer>;

bool divisible(const Integer &v, unsigned long m) { return mpz_divisible_ui_p(v.get_mpz_t(), m) != 0; }

// p(mn+r) = 0 (mod m) by enumeration and by sifting the partition series.
void ramanujan(CheckContext &ctx, int m, int r) {
  const long long max_n = ctx.param("max_n");
  const int order = static_cast<int>(ctx.param("order"));
  IS part = partition_series(m * order + r);
  for (int w : progression(m, r, max_n)) {
    long long c = count_partitions(w);
    ctx.expect("enumeration-divisible", c % m == 0, {{"n", w}, {"count", c}});
    ctx.expect_eq("enumeration-matches-series", c, part.coeff(w).get_si(), {{"n", w}});
  }
  IS sifted = sift(part, m, r);
  for (int n = 0; n < order; ++n)
    ctx.expect("series-sift-divisible", divisible(sifted.coeff(n), m),
               {{"n", m * n + r}, {"p", coeff_json(sifted.coeff(n))}});
}

void ram5(CheckContext &ctx) {
  ramanujan(ctx, 5, 4);
  // sum p(5n+4) q^n = 5 (q^5;q^5)^5 / (q;q)^6
  const int N = static_cast<int>(ctx.param("rambest_order"));
  IS lhs = sift(partition_series(5 * N + 4), 5, 4).truncated(N);
  IS rhs = (qs::poch<Integer>(1, 5, 5, 5, N) * qs::poch<Integer>(1, 1, 1, -6, N)).scaled(Integer(5));
  expect_series(ctx, "rambest", lhs, rhs, N);
}

// Every residue class of `stat` mod m has p(w)/m members.
void equidistributed(CheckContext &ctx, const std::string &claim, Statistic stat, int m, int r, long long max_n) {
  for (int w : progression(m, r, max_n)) {
    auto counts = class_counts(w, stat, m);
    long long total = 0;
    for (auto [k, c] : counts)
      total += c;
    nlohmann::json arr = nlohmann::json::array();
    bool equal = total % m == 0;
    for (auto [k, c] : counts) {
      arr.push_back(c);
      equal &= c * m == total;
    }
    ctx.expect(claim, equal, {{"n", w}, {"counts", arr}});
  }
}

void dyson(CheckContext &ctx) {
  equidistributed(ctx, "rank-mod5", Statistic::dyson_rank, 5, 4, ctx.param("max_n"));
  equidistributed(ctx, "rank-mod7", Statistic::dyson_rank, 7, 5, ctx.param("max_n7"));
}

void andrews_garvan(CheckContext &ctx) {
  equidistributed(ctx, "crank-mod5", Statistic::ag_crank, 5, 4, ctx.param("max_n"));
  equidistributed(ctx, "crank-mod7", Statistic::ag_crank, 7, 5, ctx.param("max_n7"));
  equidistributed(ctx, "crank-mod11", Statistic::ag_crank, 11, 6, ctx.param("max_n11"));
}

void garvan_refinement(CheckContext &ctx) {
  for (int w : progression(5, 4, ctx.param("max_n"))) {
    auto m2 = class_counts(w, Statistic::ag_crank, 2);
    auto m10 = class_counts(w, Statistic::ag_crank, 10);
    for (int a = 0; a < 2; ++a) {
      ctx.expect("crank-mod2-divisible", m2[a] % 5 == 0, {{"n", w}, {"alpha", a}, {"count", m2[a]}});
      for (int k = 0; k < 5; ++k)
        ctx.expect("crank-mod10-split", 5 * m10[2 * k + a] == m2[a],
                   {{"n", w}, {"k", k}, {"alpha", a}, {"mod10", m10[2 * k + a]}, {"mod2", m2[a]}});
    }
  }
}

void andrews_refinement(CheckContext &ctx) {
  for (int w : progression(5, 4, ctx.param("max_n"))) {
    long long p0 = 0, p2 = 0, self_conj_2 = 0;
    for_each_partition(w, [&](const Partition &p) {
      int s = mod4(srank(p));
      (s == 0 ? p0 : p2)++;
      if (s == 2 && conjugate(p) == p)
        ++self_conj_2;
    });
    nlohmann::json where{{"n", w}, {"p0", p0}, {"p2", p2}};
    ctx.expect("p0-divisible-by-5", p0 % 5 == 0, where);
    ctx.expect("p2-divisible-by-5", p2 % 5 == 0, where);
    ctx.expect("p2-divisible-by-10", p2 % 10 == 0, where);
    ctx.expect("srank2-has-no-self-conjugate", self_conj_2 == 0, where);
  }
}

// Within each srank class mod 4, every residue of `stat` mod 5 holds p_i(w)/5 partitions.
void split_equidistribution(CheckContext &ctx, Statistic stat) {
  for (int w : progression(5, 4, ctx.param("max_n"))) {
    auto counts = srank_split_counts(w, stat, 5);
    for (int i : {0, 2}) {
      long long total = 0;
      for (long long c : counts[i])
        total += c;
      bool equal = true;
      for (long long c : counts[i])
        equal &= 5 * c == total;
      ctx.expect("classes-equal-srank" + std::to_string(i), equal,
                 {{"n", w}, {"srank_class", i}, {"counts", counts[i]}});
    }
    ctx.expect("no-odd-srank", counts[1] == std::vector<long long>(5, 0) && counts[3] == std::vector<long long>(5, 0),
               {{"n", w}});
    if (w == 9) {
      for (int k = 0; k < 5; ++k) {
        ctx.expect_eq("n9-srank0-class-size", counts[0][k], 4LL, {{"class", k}});
        ctx.expect_eq("n9-srank2-class-size", counts[2][k], 2LL, {{"class", k}});
      }
    }
  }
}

void theorem1(CheckContext &ctx) {
  split_equidistribution(ctx, Statistic::st_crank);
  nlohmann::json diff;
  ctx.expect("table1-transcription", table1_matches_published(diff), diff);
}

void theorem2(CheckContext &ctx) { split_equidistribution(ctx, Statistic::two_quotient_rank); }

void theorem3(CheckContext &ctx) {
  split_equidistribution(ctx, Statistic::five_core_crank);
  nlohmann::json diff;
  ctx.expect("table2-transcription", table2_matches_published(diff), diff);
}

// Joint distribution of (srank mod 4, statistic value) agrees for St-crank and 2-quotient-rank.
void stctqr(CheckContext &ctx) {
  for (int n = 0; n <= ctx.param("max_n"); ++n) {
    std::map<std::pair<int, int>, long long> st, tq;
    for_each_partition(n, [&](const Partition &p) {
      int s = mod4(srank(p));
      ++st[{s, st_crank(p)}];
      ++tq[{s, two_quotient_rank(p)}];
    });
    if (st == tq) {
      ctx.expect("joint-distribution", true);
      continue;
    }
    nlohmann::json w{{"n", n}};
    for (const auto &[key, c] : st)
      if (tq[key] != c) {
        w["srank_class"] = key.first;
        w["value"] = key.second;
        w["st_crank_count"] = c;
        w["two_quotient_rank_count"] = tq[key];
        break;
      }
    ctx.expect("joint-distribution", false, w);
  }
}

// counts[j][m mod 5] for partitions of w with BG-rank j and 2-quotient-rank m.
std::map<int, std::array<long long, 5>> bg_tally(int w) {
  std::map<int, std::array<long long, 5>> out;
  for_each_partition(w, [&](const Partition &p) {
    auto &row = out.try_emplace(bg_rank(p), std::array<long long, 5>{}).first->second;
    ++row[mod5(two_quotient_rank(p))];
  });
  return out;
}

void theorem5(CheckContext &ctx, bool corollary_only) {
  const long long max_n = ctx.param("max_n");
  std::set<int> attained;
  for (int w = 0; w <= max_n; ++w) {
    const int r = w % 5;
    for (const auto &[j, row] : bg_tally(w)) {
      attained.insert(j);
      if (!bg_condition(r, j))
        continue;
      long long total = 0;
      for (long long c : row)
        total += c;
      const std::string suffix = "-r" + std::to_string(r);
      nlohmann::json where{{"n", w}, {"j", j}, {"counts", row}, {"total", total}};
      if (corollary_only) {
        ctx.expect("pbar-divisible" + suffix, total % 5 == 0, where);
        continue;
      }
      bool equal = true;
      for (long long c : row)
        equal &= 5 * c == total;
      ctx.expect("classes-equal" + suffix, equal, where);
    }
  }
  ctx.findings()["bg_ranks_attained"] = std::vector<int>(attained.begin(), attained.end());
}

void stanley(CheckContext &ctx) {
  for_each_partition_upto(static_cast<int>(ctx.param("max_n")), [&](const Partition &p) {
    const int s = srank(p);
    nlohmann::json where{{"partition", parts_json(p)}};
    ctx.expect("srank-even", s % 2 == 0, where);
    ctx.expect("srank-conjugate", srank(conjugate(p)) == -s, where);
    ctx.expect("srank-criterion", srank_crit_mod4(p) == mod4(s), where);
    long long alt = 0;
    for (int j = 1; j <= p.length(); ++j)
      alt += static_cast<long long>(p.row(j)) * p.row(j) + static_cast<long long>(2 * j - 3) * p.row(j);
    ctx.expect("srank-criterion-b", mod4(alt) == mod4(s), where);
    CoreQuotient cq = phi1(p, 2);
    ctx.expect("srank-2core", mod4(p.weight() - cq.core.weight()) == mod4(s), where);
    ctx.expect("srank-2quotient", mod4(2LL * cq.quotient_weight()) == mod4(s), where);
    if (conjugate(p) == p)
      ctx.expect("self-conjugate-srank-zero", s == 0, where);
  });
}

void bijections(CheckContext &ctx) {
  for_each_partition_upto(static_cast<int>(ctx.param("max_n")), [&](const Partition &p) {
    nlohmann::json where{{"partition", parts_json(p)}};
    auto [p1, p2] = bijection1(p);
    ctx.expect("bij1-round-trip", bijection1_inv(p1, p2) == p, where);
    ctx.expect("bij1-weight", p.weight() == 4 * p1.weight() + p2.weight(), where);
    ctx.expect("bij1-srank", srank(p) == srank(p2), where);
    bool distinct_even = true;
    for (int v : p2.parts())
      distinct_even &= v % 2 == 1 || p2.frequency(v) == 1;
    ctx.expect("bij1-no-repeated-even", distinct_even, where);
  });
  for (int n = 0; n <= ctx.param("max_n_type"); ++n) {
    std::set<Partition> image, type_b;
    for_each_partition(n, [&](const Partition &p) {
      nlohmann::json where{{"partition", parts_json(p)}};
      if (is_type_b(p)) {
        type_b.insert(p);
        ctx.expect("stcrank-type-b", st_crank(p) == 1 + srank(p) / 2, where);
      }
      if (!is_type_a(p))
        return;
      ctx.expect("stcrank-type-a", st_crank(p) == -1 + srank(p) / 2, where);
      Partition b = bijection2(p);
      ctx.expect("bij2-weight", b.weight() == n, where);
      ctx.expect("bij2-srank", srank(b) == srank(p), where);
      ctx.expect("bij2-round-trip", bijection2_inv(b) == p, where);
      ctx.expect("bij2-injective", image.insert(b).second, where);
    });
    ctx.expect("bij2-onto-type-b", image == type_b, {{"n", n}});
  }
}

} // namespace

void register_counting_checks(std::vector<CheckSpec> &out) {
  out.push_back({"CHK-RAM5", "p(5n+4) = 0 mod 5; Ramanujan's product for the sifted series",
                 {{"max_n", 49}, {"order", 200}, {"rambest_order", 30}}, ram5});
  out.push_back({"CHK-RAM7", "p(7n+5) = 0 mod 7", {{"max_n", 47}, {"order", 200}},
                 [](CheckContext &c) { ramanujan(c, 7, 5); }});
  out.push_back({"CHK-RAM11", "p(11n+6) = 0 mod 11", {{"max_n", 50}, {"order", 200}},
                 [](CheckContext &c) { ramanujan(c, 11, 6); }});
  out.push_back({"CHK-DYSON", "Dyson rank splits p(5n+4) and p(7n+5) evenly", {{"max_n", 49}, {"max_n7", 47}}, dyson});
  out.push_back({"CHK-AG", "crank splits p(5n+4), p(7n+5), p(11n+6) evenly",
                 {{"max_n", 49}, {"max_n7", 47}, {"max_n11", 50}}, andrews_garvan});
  out.push_back({"CHK-GREF5", "crank mod 2 and mod 10 refinement at 5n+4", {{"max_n", 49}}, garvan_refinement});
  out.push_back({"CHK-ANDREWS", "p0(5n+4), p2(5n+4) = 0 mod 5 and p2(5n+4) = 0 mod 10", {{"max_n", 49}},
                 andrews_refinement});
  out.push_back({"CHK-STANLEY", "srank parity, conjugation and mod 4 criteria", {{"max_n", 25}}, stanley});
  out.push_back({"CHK-BIJ", "even-pair extraction and the type A to type B map", {{"max_n", 25}, {"max_n_type", 20}},
                 bijections});
  out.push_back({"CHK-THM1", "St-crank mod 5 splits each srank class at 5n+4 evenly", {{"max_n", 49}}, theorem1});
  out.push_back({"CHK-THM2", "2-quotient-rank mod 5 splits each srank class at 5n+4 evenly", {{"max_n", 49}}, theorem2});
  out.push_back({"CHK-STCTQR", "St-crank and 2-quotient-rank have the same joint law with srank mod 4",
                 {{"max_n", 30}}, stctqr});
  out.push_back({"CHK-THM3", "5-core crank mod 5 splits each srank class at 5n+4 evenly", {{"max_n", 49}}, theorem3});
  out.push_back({"CHK-THM5", "2-quotient-rank mod 5 splits BG-rank classes evenly", {{"max_n", 45}},
                 [](CheckContext &c) { theorem5(c, false); }});
  out.push_back({"CHK-COR5", "BG-rank class sizes are divisible by 5", {{"max_n", 45}},
                 [](CheckContext &c) { theorem5(c, true); }});
}

} // namespace tcorelab::verify
