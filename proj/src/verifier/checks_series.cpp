#include <algorithm>
#include <map>

#include "../core/cores.hpp"
#include "../core/statistics.hpp"
#include "check_util.hpp"
#include "products.hpp"
#include "registry.hpp"

namespace tcorelab::verify {
namespace {

using qs::Gaussian;
using qs::is_zero;
using qs::poch;
using qs::poch_inf;
using qs::Series;

int order_param(CheckContext &ctx, const char *name) {
  long long v = ctx.param(name);
  if (v < 1 || v > 100000)
    fail(ErrorCode::invalid_argument, std::string(name) + " out of range");
  return static_cast<int>(v);
}

bool no_repeated_even_parts(const Partition &p) {
  for (int k = 2; k <= p.largest(); k += 2)
    if (p.frequency(k) > 1)
      return false;
  return true;
}

// sum over partitions of weight < order of q^|p| * term(p)
template <class R, class F> Series<R> tally(int order, F term) {
  Series<R> s(order);
  for_each_partition_upto(order - 1, [&](const Partition &p) { s.add_to(p.weight(), term(p)); });
  return s;
}

// ---------------------------------------------------------------------------

void jtpa(CheckContext &ctx) {
  const int N = order_param(ctx, "order");
  IS lhs = jtpa_product(N);
  IS mid = poch<Integer>(1, 4, 4, 1, N) * poch<Integer>(-1, 3, 4, 1, N) * poch<Integer>(-1, 1, 4, 1, N);
  IS quad(N);
  for (long long n = -N; n <= N; ++n)
    if (2 * n * n + n < N)
      quad.add_to(static_cast<int>(2 * n * n + n), Integer(1));
  expect_series(ctx, "jtpa-base-q4", lhs, mid, N);
  expect_series(ctx, "jtpa-quadratic", lhs, quad, N);
  expect_series(ctx, "jtpa-triangular", lhs, triangular_sum(N), N);

  // sum z^n q^{n^2} = (q^2, -qz, -q/z; q^2)
  const int J = order_param(ctx, "jtp_order");
  LS theta = qs::theta_jtp(J, kZ);
  LS prod = poch<LZ>(1, 2, 2, 1, J) * poch_inf(LZ(-mono(0, 0, 1)), 1, 2, 1, J) *
            poch_inf(LZ(-mono(0, 0, -1)), 1, 2, 1, J);
  expect_series(ctx, "jtp-symbolic", theta, prod, J);
  for (int z : {1, -1}) {
    IS lhs_z(J);
    for (long long n = -J; n <= J; ++n)
      if (n * n < J)
        lhs_z.add_to(static_cast<int>(n * n), Integer((n % 2 != 0 && z == -1) ? -1 : 1));
    IS rhs_z = poch<Integer>(1, 2, 2, 1, J) * poch<Integer>(-z, 1, 2, 1, J) * poch<Integer>(-z, 1, 2, 1, J);
    expect_series(ctx, z == 1 ? "jtp-z=1" : "jtp-z=-1", lhs_z, rhs_z, J);
  }

  // (1 - xi^2) (q^2 xi^2, q^2/xi^2, q^2; q^2) = sum (-1)^m q^{2T_m} xi^{-2m} (1 - xi^{4m+2})
  const int B = order_param(ctx, "jtpb_order");
  Series<C5> lhs_b = poch_inf(C5::root_power(2), 2, 2, 1, B) * poch_inf(C5::root_power(-2), 2, 2, 1, B) *
                     poch<C5>(1, 2, 2, 1, B);
  lhs_b = lhs_b.scaled(C5(1) - C5::root_power(2));
  Series<C5> rhs_b(B);
  for (long long m = 0; m * (m + 1) < B; ++m) {
    C5 c = C5::root_power(-2 * m) * (C5(1) - C5::root_power(4 * m + 2));
    rhs_b.add_to(static_cast<int>(m * (m + 1)), m % 2 ? C5(-c) : c);
  }
  expect_series(ctx, "jtpb", lhs_b, rhs_b, B);
}

void crank_gf(CheckContext &ctx) {
  const int N = order_param(ctx, "order");
  LS lhs = tally<LZ>(N, [](const Partition &p) { return p.weight() == 1 ? LZ(0) : mono(ag_crank(p)); });
  if (N > 1)
    lhs.add_to(1, mono(1) + mono(-1) - LZ(1));
  expect_series(ctx, "crankgf", lhs, crank_product(N), N);
}

void rsgf(CheckContext &ctx) {
  const int N = order_param(ctx, "order");
  LS lhs = tally<LZ>(N, [](const Partition &p) { return mono(0, odd_part_count(conjugate(p)), odd_part_count(p)); });
  expect_series(ctx, "rsgf", lhs, rsgf_product(N), N);
}

void p02prod(CheckContext &ctx) {
  const int N = order_param(ctx, "order");
  IS lhs = tally<Integer>(N, [](const Partition &p) { return Integer(mod4(srank(p)) == 0 ? 1 : -1); });
  expect_series(ctx, "p02prod", lhs, p02_product(N), N);
}

void srank_prod(CheckContext &ctx) {
  const int N = order_param(ctx, "order");
  LS restricted = tally<LZ>(N, [](const Partition &p) { return no_repeated_even_parts(p) ? mono(0, srank(p)) : LZ(0); });
  expect_series(ctx, "srankprodid", restricted, srank_product(N), N);
  LS full = tally<LZ>(N, [](const Partition &p) { return mono(0, srank(p)); });
  expect_series(ctx, "bij1gf", full, restricted * poch<LZ>(1, 4, 4, -1, N), N);
}

void lemma1(CheckContext &ctx) {
  const int N = order_param(ctx, "order");
  LS lhs = tally<LZ>(N, [](const Partition &p) { return mono(st_crank(p), srank(p)); });
  expect_series(ctx, "lemma1", lhs, lemma1_product(N), N);

  LS first(N), second(N);
  for_each_partition_upto((N - 1) / 4, [&](const Partition &p1) {
    LZ w = p1 == Partition::from_parts({1}) ? mono(1) + mono(-1) - LZ(1) : mono(ag_crank(p1));
    first.add_to(4 * p1.weight(), w);
  });
  for_each_partition_upto(N - 1, [&](const Partition &p2) {
    if (no_repeated_even_parts(p2)) {
      int h = srank(p2) / 2;
      second.add_to(p2.weight(), mono(h, 2 * h));
    }
  });
  expect_series(ctx, "stcrankgfid", lhs, first * second, N);
}

// ---------------------------------------------------------------------------

C5G xi_pow(long long k) { return C5G::root_power(k); }

void coeffz(CheckContext &ctx) {
  const int N = order_param(ctx, "order");
  const int T = order_param(ctx, "tally_order");
  Series<C5G> g1 = g_at_xi(false, N), gi = g_at_xi(true, N);
  for (int w = 4; w < N; w += 5) {
    ctx.expect("coeffz1", is_zero(g1.coeff(w)), {{"n", w}, {"coeff", coeff_json(g1.coeff(w))}});
    ctx.expect("coeffzi", is_zero(gi.coeff(w)), {{"n", w}, {"coeff", coeff_json(gi.coeff(w))}});
  }

  Series<C5G> tri(N);
  for (long long k = 0; k * (k + 1) / 2 < N; ++k)
    tri.add_to(static_cast<int>(k * (k + 1) / 2), C5G(1));
  Series<C5G> den = poch_inf(xi_pow(1), 4, 4, 1, N) * poch_inf(xi_pow(-1), 4, 4, 1, N) *
                    poch_inf(xi_pow(1), 2, 4, 1, N) * poch_inf(xi_pow(-1), 2, 4, 1, N);
  expect_series(ctx, "gz1id-triangular", g1 * den, tri, N);
  Series<C5G> q10 = poch<C5G>(1, 10, 10, 1, N);
  Series<C5G> jb = poch_inf(xi_pow(2), 2, 2, 1, N) * poch_inf(xi_pow(-2), 2, 2, 1, N) * poch<C5G>(1, 2, 2, 1, N);
  expect_series(ctx, "gz1id-jtpb", g1 * q10, jb * tri, N);
  Series<C5G> dbl(N);
  for (long long m = 0; m * (m + 1) < N; ++m)
    for (long long k = 0; m * (m + 1) + k * (k + 1) / 2 < N; ++k) {
      C5G c = xi_pow(-2 * m) * (C5G(1) - xi_pow(4 * m + 2));
      dbl.add_to(static_cast<int>(m * (m + 1) + k * (k + 1) / 2), m % 2 ? C5G(-c) : c);
    }
  expect_series(ctx, "gz1id-double-sum", (g1 * q10).scaled(C5G(1) - xi_pow(2)), dbl, N);

  // 2 sum_k xi^k P_i(k,5,n) q^n = g(xi,1,q) +- g(xi,sqrt(-1),q)
  Series<C5G> p0(T), p2(T);
  for_each_partition_upto(T - 1, [&](const Partition &p) {
    (mod4(srank(p)) == 0 ? p0 : p2).add_to(p.weight(), xi_pow(st_crank(p)));
  });
  expect_series(ctx, "P0gf", p0.scaled(C5G(2)), g1 + gi, T);
  expect_series(ctx, "P2gf", p2.scaled(C5G(2)), g1 - gi, T);
}

// ---------------------------------------------------------------------------

void tcoregf(CheckContext &ctx) {
  const int N = order_param(ctx, "order");
  const int E = static_cast<int>(ctx.param("max_n_enum"));
  const int S = order_param(ctx, "psift_order");
  const int tmax = static_cast<int>(ctx.param("max_t"));
  std::map<int, std::vector<long long>> by_t;
  for (int t = 2; t <= tmax; ++t) {
    IS series = tcore_product(t, N);
    IS nsum(N);
    std::vector<IS> sifted(t, IS(N));
    for_each_n_vector(t, N - 1, [&](const NVector &nv, long long w) {
      nsum.add_to(static_cast<int>(w), Integer(1));
      int delta = static_cast<int>(mod(nv.dot_b(), t));
      ctx.expect("tcoresift-residue", delta == mod(w, t), {{"t", t}, {"n_vector", to_json(nv)}});
      sifted[delta].add_to(static_cast<int>(w), Integer(1));
    });
    expect_series(ctx, "tcoregfid-t" + std::to_string(t), nsum, series, N);
    for (int d = 0; d < t; ++d)
      for (int w = 0; w < N; ++w)
        if (w % t == d)
          ctx.expect("tcoresift", sifted[d].coeff(w) == series.coeff(w), {{"t", t}, {"n", w}});
        else
          ctx.expect("tcoresift", is_zero(sifted[d].coeff(w)), {{"t", t}, {"n", w}, {"delta", d}});
    for (int w = 0; w <= E; ++w) {
      long long c = 0;
      for_each_partition(w, [&](const Partition &p) { c += is_t_core(p, t); });
      ctx.expect("enumeration-t" + std::to_string(t), Integer(static_cast<long>(c)) == series.coeff(w),
                 {{"n", w}, {"enumerated", c}, {"series", coeff_json(series.coeff(w))}});
    }
    // sum p(tn+d) q^n = (q)^{-t} sum a_t(tn+d) q^n
    IS part = partition_series(t * S + t);
    IS cores = tcore_product(t, t * S + t);
    IS inv_t = poch<Integer>(1, 1, 1, -t, S);
    for (int d = 0; d < t; ++d)
      expect_series(ctx, "psift", sift(part, t, d).truncated(S), inv_t * sift(cores, t, d).truncated(S), S);
  }
}

// ---------------------------------------------------------------------------

LG lg_mono(const Gaussian &c, int xexp) { return LG::monomial(c, qs::Monomial{xexp, 0, 0}); }

// Laurent<Integer> in x, y with y replaced by omega = sqrt(-1)^k.
LG at_y(const LZ &v, int k) {
  LG out;
  for (const auto &[m, c] : v.terms())
    out.accumulate(qs::Monomial{m[0], 0, m[2]},
                   Gaussian::root_power(static_cast<long long>(k) * m[1]) * Gaussian(Gaussian::Coeffs{c, Integer(0)}));
  return out;
}

void g2(CheckContext &ctx) {
  const int N = order_param(ctx, "order");
  LS lemma = lemma1_product(N);
  for (int k : {0, 1}) {
    const std::string tag = k ? "-w=i" : "-w=1";
    const Gaussian w2 = Gaussian::root_power(2 * k);
    Series<LG> lhs = tally<LG>(N, [&](const Partition &p) {
      return lg_mono(Gaussian::root_power(static_cast<long long>(k) * srank(p)), two_quotient_rank(p));
    });
    // 2-cores are staircases; quotients contribute q^{2|p|} x^{+-len} w^{2|p|}
    Series<LG> tri(N), a(N), b(N);
    for (long long m = 0; m * (m + 1) / 2 < N; ++m)
      tri.add_to(static_cast<int>(m * (m + 1) / 2), LG(1));
    for_each_partition_upto((N - 1) / 2, [&](const Partition &p) {
      Gaussian c = Gaussian::root_power(2LL * k * p.weight());
      a.add_to(2 * p.weight(), lg_mono(c, p.length()));
      b.add_to(2 * p.weight(), lg_mono(c, -p.length()));
    });
    Series<LG> sum_form = tri * a * b;
    expect_series(ctx, "G2def" + tag, lhs, sum_form, N);
    Series<LG> prod = tri * qs::poch_geom(lg_mono(w2, 1), LG(lg_mono(w2, 0)), 2, 2, -1, N) *
                      qs::poch_geom(lg_mono(w2, -1), LG(lg_mono(w2, 0)), 2, 2, -1, N);
    expect_series(ctx, "G2prod" + tag, sum_form, prod, N);
    Series<LG> jt = poch<LG>(1, 4, 4, 1, N) * poch<LG>(-1, 1, 2, 1, N);
    Series<LG> prod2 = jt * poch_inf(lg_mono(w2, 1), 2, 4, -1, N) * poch_inf(lg_mono(1, 1), 4, 4, -1, N) *
                       poch_inf(lg_mono(w2, -1), 2, 4, -1, N) * poch_inf(lg_mono(1, -1), 4, 4, -1, N);
    expect_series(ctx, "G2prod2" + tag, prod, prod2, N);
    Series<LG> g(N);
    for (int n = 0; n < N; ++n)
      g.add_to(n, at_y(lemma.coeff(n), k));
    expect_series(ctx, "G2gid" + tag, prod2, g, N);
  }
}

void g3(CheckContext &ctx) {
  const int N = order_param(ctx, "order");
  const int T = order_param(ctx, "tally_order");
  // quad: exponent n^2+nm+m^2+n+m, the image of Q3 under the substitutions;
  // printed: the exponent without +n+m
  LS s123(N), quad(N), printed(N);
  const int R = N;
  for (int n1 = -R; n1 <= R; ++n1)
    for (int n2 = -R; n2 <= R; ++n2) {
      long long e = q3(n1, n2);
      if (e < N)
        s123.add_to(static_cast<int>(e), mono(3 * n1) + mono(3 * n2 + 1) + mono(-3 * n2 - 1));
      long long e2 = static_cast<long long>(n1) * n1 + static_cast<long long>(n1) * n2 + static_cast<long long>(n2) * n2;
      if (e2 < N)
        printed.add_to(static_cast<int>(e2), mono(n1 - n2));
      if (e2 + n1 + n2 < N)
        quad.add_to(static_cast<int>(e2 + n1 + n2), mono(n1 - n2));
    }
  LS cube = poch_inf(mono(3), 3, 3, 1, N) * poch_inf(mono(-3), 3, 3, 1, N);
  LS den = poch<LZ>(1, 3, 3, 1, N) * cube;
  LS g3_series = s123 * den.inverse();
  expect_series(ctx, "G3id2", s123, quad, N);
  LS hgb = (poch<LZ>(1, 1, 1, 1, N) * poch<LZ>(1, 3, 3, 1, N) * cube * poch_inf(mono(1), 1, 1, -1, N) *
            poch_inf(mono(-1), 1, 1, -1, N))
               .scaled(mono(1) + LZ(1) + mono(-1));
  expect_series(ctx, "HGBid", quad, hgb, N);
  expect_series(ctx, "G3id3", g3_series, g3_product(N), N);
  int printed_diff = printed.first_difference(hgb, N);
  ctx.findings()["HGBid_printed_exponent"] = {{"first_mismatch_index", printed_diff},
                                              {"lhs", coeff_json(printed.coeff(std::max(printed_diff, 0)))},
                                              {"rhs", coeff_json(hgb.coeff(std::max(printed_diff, 0)))}};

  LS lhs = tally<LZ>(T, [](const Partition &p) {
    CoreQuotient cq = phi1(p, 3);
    NVector nv = phi2(cq.core, 3);
    const int n1 = nv.coords[1], n2 = nv.coords[2];
    LZ f = mono(3 * n1) + mono(3 * n2 + 1) + mono(-3 * n2 - 1);
    return f * mono(3 * (cq.quotient[1].length() - cq.quotient[2].length()));
  });
  expect_series(ctx, "G3def", lhs, g3_series, T);
}

// ---------------------------------------------------------------------------

void fj(CheckContext &ctx) {
  const int N = order_param(ctx, "order");
  const int X = order_param(ctx, "xi_order");
  std::map<int, LS> by_j;
  std::map<int, Series<C5>> by_j_xi;
  for_each_partition_upto(N - 1, [&](const Partition &p) {
    int j = bg_rank(p), m = two_quotient_rank(p);
    by_j.try_emplace(j, N).first->second.add_to(p.weight(), mono(m));
    by_j_xi.try_emplace(j, N).first->second.add_to(p.weight(), C5::root_power(m));
  });
  LS a(N), b(N);
  for_each_partition_upto((N - 1) / 2, [&](const Partition &p) {
    a.add_to(2 * p.weight(), mono(p.length()));
    b.add_to(2 * p.weight(), mono(-p.length()));
  });
  LS quotients = a * b;
  for (int j = -8; j <= 8; ++j) {
    const long long e = static_cast<long long>(2 * j - 1) * j;
    if (e >= N) {
      ctx.expect("bg-rank-out-of-range-absent", !by_j.count(j), {{"j", j}});
      continue;
    }
    LS tallied = by_j.count(j) ? by_j.at(j) : LS(N);
    expect_series(ctx, "fjdef-tally", tallied, quotients.shifted(static_cast<int>(e)), N);
    expect_series(ctx, "fjdef-product", tallied, fj_product(j, N), N);
  }

  const C5 one_minus = C5(1) - C5::root_power(2);
  Series<C5> q10 = poch<C5>(1, 10, 10, 1, X);
  for (int j = -8; j <= 8; ++j) {
    const long long e = static_cast<long long>(2 * j - 1) * j;
    if (e >= X)
      continue;
    Series<C5> f = (poch_inf(C5::root_power(1), 2, 2, -1, X) * poch_inf(C5::root_power(-1), 2, 2, -1, X))
                       .shifted(static_cast<int>(e));
    Series<C5> rhs(X);
    for (long long n = 0; e + n * n + n < X; ++n) {
      C5 c = C5::root_power(-2 * n) * (C5(1) - C5::root_power(4 * n + 2));
      rhs.add_to(static_cast<int>(e + n * n + n), n % 2 ? C5(-c) : c);
    }
    expect_series(ctx, "fjxi", (f * q10).scaled(one_minus), rhs, X);
    if (e < N) {
      Series<C5> tallied = by_j_xi.count(j) ? by_j_xi.at(j) : Series<C5>(N);
      expect_series(ctx, "fjxi2", tallied, f.truncated(N), N);
    }
    for (int w = 0; w < X; ++w)
      if (bg_condition(w % 5, j))
        ctx.expect("Pjrel-vanishing", is_zero(f.coeff(w)), {{"j", j}, {"n", w}, {"coeff", coeff_json(f.coeff(w))}});
  }

  for (long long n = -100; n <= 100; ++n) {
    int r = mod5(n), v = mod5(n * n + n);
    int want = (r == 0 || r == 4) ? 0 : (r == 1 || r == 3) ? 2 : 1;
    ctx.expect_eq("trim5", v, want, {{"n", n}});
    int jv = mod5((2 * n - 1) * n);
    int jwant = (r == 0 || r == 3) ? 0 : (r == 1 || r == 2) ? 1 : 3;
    ctx.expect_eq("2cm5", jv, jwant, {{"j", n}});
  }
}

} // namespace

void register_series_checks(std::vector<CheckSpec> &out) {
  out.push_back({"CHK-JTPA", "Jacobi triple product specializations",
                 {{"order", 1000}, {"jtp_order", 100}, {"jtpb_order", 60}}, jtpa});
  out.push_back({"CHK-CRANKGF", "crank generating function", {{"order", 30}}, crank_gf});
  out.push_back({"CHK-RSGF", "odd parts of a partition and its conjugate, trivariate product", {{"order", 20}}, rsgf});
  out.push_back({"CHK-P02PROD", "p0(n) - p2(n) product formula", {{"order", 30}}, p02prod});
  out.push_back({"CHK-SRANKPROD", "srank product over partitions without repeated even parts", {{"order", 25}},
                 srank_prod});
  out.push_back({"CHK-LEMMA1", "St-crank and srank bivariate product", {{"order", 20}}, lemma1});
  out.push_back({"CHK-COEFFZ", "g(xi,1,q) and g(xi,i,q) vanish at q^{5n+4}", {{"order", 60}, {"tally_order", 40}},
                 coeffz});
  out.push_back({"CHK-TCOREGF", "t-core generating functions: product, n-vectors, enumeration",
                 {{"max_t", 7}, {"order", 200}, {"max_n_enum", 30}, {"psift_order", 40}}, tcoregf});
  out.push_back({"CHK-G2", "2-quotient-rank generating function at w = 1 and w = i", {{"order", 25}}, g2});
  out.push_back({"CHK-G3", "3-core generating function and the crank product", {{"order", 40}, {"tally_order", 20}},
                 g3});
  out.push_back({"CHK-FJ", "BG-rank and 2-quotient-rank generating functions", {{"order", 25}, {"xi_order", 40}}, fj});
}

} // namespace tcorelab::verify
