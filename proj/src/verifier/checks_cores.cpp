#include <cmath>
#include <map>
#include <set>

#include "../core/cores.hpp"
#include "../core/orbits.hpp"
#include "../core/statistics.hpp"
#include "check_util.hpp"
#include "products.hpp"
#include "registry.hpp"

namespace tcorelab::verify {
namespace {

using qs::poch;

int c5_of(const NVector &nv) {
  const AlphaVector a = alpha_from_n(nv);
  long long s = 1;
  for (int i = 0; i < 5; ++i)
    s += static_cast<long long>(i) * a.coords[i];
  return mod5(s);
}

long long cube_sum(const NVector &nv) {
  long long s = 0;
  for (int i = 0; i < nv.t; ++i) {
    long long v = nv.coords[i] + i;
    s += v * v * v;
  }
  return s;
}

CoreQuotient with_component(const CoreQuotient &cq, int i, const Partition &q) {
  CoreQuotient out = cq;
  out.quotient[i] = q;
  return out;
}

// ---------------------------------------------------------------------------

void phi_roundtrips(CheckContext &ctx) {
  const int max_n = static_cast<int>(ctx.param("max_n"));
  for_each_partition_upto(max_n, [&](const Partition &p) {
    for (int t : {2, 3, 4, 5, 7}) {
      CoreQuotient cq = phi1(p, t);
      nlohmann::json where{{"partition", parts_json(p)}, {"t", t}};
      ctx.expect("phi1-roundtrip", phi1_inv(cq) == p, where);
      ctx.expect("phi1-core-is-core", is_t_core(cq.core, t), where);
      ctx.expect("phi1a-weight", p.weight() == cq.core.weight() + t * cq.quotient_weight(), where);
    }
    if (p.weight() % 5 == 4) {
      PhiImage img = capital_phi(p);
      long long q = 0;
      for (const auto &c : img.quotient)
        q += c.weight();
      nlohmann::json where{{"partition", parts_json(p)}};
      ctx.expect("Phi-roundtrip", capital_phi_inv(img) == p, where);
      ctx.expect("Phi1-weight", p.weight() == 5 * q_alpha(img.alpha) - 1 + 5 * q, where);
    }
  });
  for (int w : {9, 14, 19}) {
    std::set<std::pair<std::array<int, 5>, std::vector<std::vector<int>>>> images;
    long long count = 0;
    for_each_partition(w, [&](const Partition &p) {
      PhiImage img = capital_phi(p);
      std::vector<std::vector<int>> qs;
      for (const auto &c : img.quotient)
        qs.push_back(c.parts());
      images.insert({img.alpha.coords, qs});
      ++count;
    });
    ctx.expect_eq("Phi-injective", static_cast<long long>(images.size()), count, {{"n", w}});
  }

  const int max_core = static_cast<int>(ctx.param("max_n_cores"));
  for (int t = 2; t <= 7; ++t)
    for_each_n_vector(t, max_core, [&](const NVector &nv, long long w) {
      Partition core = phi2_inv(nv);
      nlohmann::json where{{"n_vector", to_json(nv)}};
      ctx.expect("phi2-weight", core.weight() == w && nv.encoded_weight() == w, where);
      ctx.expect("phi2-roundtrip", phi2(core, t) == nv, where);
      auto r = residue_counts(core, t);
      bool rvec = true;
      for (int i = 0; i < t; ++i)
        rvec &= nv.coords[i] == r[i] - r[(i + 1) % t];
      ctx.expect("rvec2", rvec, where);
    });
  for (int t = 2; t <= 7; ++t)
    for (int w = 0; w <= max_core; ++w)
      for_each_partition(w, [&](const Partition &p) {
        if (is_t_core(p, t))
          ctx.expect("phi2-inverse-roundtrip", phi2_inv(phi2(p, t)) == p, {{"partition", parts_json(p)}, {"t", t}});
      });

  // alpha <-> n on the box |alpha_i| <= 2
  for (int a0 = -2; a0 <= 2; ++a0)
    for (int a1 = -2; a1 <= 2; ++a1)
      for (int a2 = -2; a2 <= 2; ++a2)
        for (int a3 = -2; a3 <= 2; ++a3) {
          int a4 = 1 - a0 - a1 - a2 - a3;
          if (a4 < -2 || a4 > 2)
            continue;
          AlphaVector a = AlphaVector::make({a0, a1, a2, a3, a4});
          NVector nv = n_from_alpha(a);
          nlohmann::json where{{"alpha", to_json(a)}};
          ctx.expect("alpha-n-roundtrip", alpha_from_n(nv) == a, where);
          ctx.expect("ntoa-residue", mod5(nv.dot_b()) == 4, where);
          ctx.expect("Qadef", nv.encoded_weight() == 5 * q_alpha(a) - 1, where);
        }
}

void oracle(CheckContext &ctx) {
  const int max_n = static_cast<int>(ctx.param("max_n"));
  for_each_partition_upto(max_n, [&](const Partition &p) {
    for (int t : {2, 3, 5}) {
      nlohmann::json where{{"partition", parts_json(p)}, {"t", t}};
      Partition core = phi1(p, t).core;
      ctx.expect("strip-first-head", strip_to_core(p, t, StripOrder::first_head) == core, where);
      ctx.expect("strip-last-head", strip_to_core(p, t, StripOrder::last_head) == core, where);
    }
  });
  const int max_enum = static_cast<int>(ctx.param("max_n_enum"));
  for (int t = 2; t <= 7; ++t) {
    IS series = tcore_product(t, max_enum + 1);
    auto counts = t_core_counts(t, max_enum);
    for (int w = 0; w <= max_enum; ++w) {
      long long enumerated = 0;
      for_each_partition(w, [&](const Partition &p) {
        if (!is_t_core(p, t))
          return;
        ++enumerated;
        ColorWords cw = words(p, t);
        NVector nv = phi2(p, t);
        bool ok = true;
        for (int i = 0; i < t; ++i)
          ok &= cw.boundary(i) == std::optional<long long>(nv.coords[i]);
        ctx.expect("word-boundary", ok, {{"partition", parts_json(p)}, {"t", t}});
      });
      nlohmann::json where{{"t", t}, {"n", w}, {"enumeration", enumerated}, {"n_vectors", counts[w]},
                           {"series", coeff_json(series.coeff(w))}};
      ctx.expect("a_t-triple-agreement", enumerated == counts[w] && series.coeff(w) == static_cast<long>(counts[w]), where);
    }
  }
}

// ---------------------------------------------------------------------------

void five_cores(CheckContext &ctx) {
  const int max_n = static_cast<int>(ctx.param("max_n"));
  const long long W = 5LL * max_n + 4;
  std::vector<long long> a5(W + 1, 0);
  std::vector<std::array<long long, 5>> a5j(W + 1, std::array<long long, 5>{});
  for_each_n_vector(5, W, [&](const NVector &nv, long long w) {
    ++a5[w];
    if (w % 5 == 4)
      ++a5j[w][c5_of(nv)];
  });

  // sum_alpha q^{Q(alpha)}, |alpha_i| bounded through Q >= (5/12)(max - min)^2
  const int order = max_n + 2;
  const int R = static_cast<int>(std::sqrt(12.0 * order / 5.0)) + 2;
  IS qsum(order);
  for (int a0 = -R; a0 <= R; ++a0)
    for (int a1 = -R; a1 <= R; ++a1)
      for (int a2 = -R; a2 <= R; ++a2)
        for (int a3 = -R; a3 <= R; ++a3) {
          int a4 = 1 - a0 - a1 - a2 - a3;
          long long q = q_alpha(AlphaVector{{a0, a1, a2, a3, a4}});
          if (q < order)
            qsum.add_to(static_cast<int>(q), Integer(1));
        }
  IS sifted(order);
  for (int n = 0; n + 1 < order; ++n)
    sifted.add_to(n + 1, Integer(static_cast<long>(a5[5 * n + 4])));
  expect_series(ctx, "5coresift", sifted, qsum, order);
  IS pser = partition_series(5 * order + 5);
  IS psifted(order);
  for (int n = 0; n + 1 < order; ++n)
    psifted.add_to(n + 1, pser.coeff(5 * n + 4));
  expect_series(ctx, "psift5", psifted, poch<Integer>(1, 1, 1, -5, order) * qsum, order);

  for (int n = 0; n <= max_n; ++n) {
    const int w = 5 * n + 4;
    nlohmann::json where{{"n", w}, {"a5", a5[w]}, {"by_c5", a5j[w]}};
    bool equal = true;
    for (long long c : a5j[w])
      equal &= 5 * c == a5[w];
    ctx.expect("5corerels2", equal, where);
    ctx.expect("5corecong", a5[w] % 5 == 0, where);
    ctx.expect_eq("5corerel", a5[w], 5 * a5[n], {{"n", n}});
    ctx.expect_eq("5corerel2", a5[n], a5j[w][0], {{"n", n}});
  }

  std::set<std::vector<int>> images;
  long long sources = 0;
  for_each_n_vector(5, max_n, [&](const NVector &nv, long long w) {
    NVector img = theta_n(nv);
    nlohmann::json where{{"n_vector", to_json(nv)}};
    ctx.expect("theta-weight", img.encoded_weight() == 5 * w + 4, where);
    ctx.expect("theta-c5-zero", c5_of(img) == 0, where);
    images.insert(img.coords);
    ++sources;
  });
  ctx.expect_eq("theta-injective", static_cast<long long>(images.size()), sources);

  const int E = static_cast<int>(ctx.param("max_n_enum"));
  for (int w = 0; w <= E; ++w) {
    long long c = 0;
    std::array<long long, 5> byc{};
    for_each_partition(w, [&](const Partition &p) {
      if (!is_t_core(p, 5))
        return;
      ++c;
      if (w % 5 == 4)
        ++byc[five_core_crank(p)];
      if (5 * w + 4 <= W)
        ctx.expect("theta-partition", theta(p) == phi2_inv(theta_n(phi2(p, 5))), {{"partition", parts_json(p)}});
    });
    ctx.expect_eq("enumeration-count", c, a5[w], {{"n", w}});
    if (w % 5 == 4)
      ctx.expect("enumeration-c5-classes", byc == a5j[w], {{"n", w}});
  }
}

void orbits(CheckContext &ctx) {
  for (int w : progression(5, 4, ctx.param("max_n")))
    for (bool shifted : {false, true}) {
      const std::string tag = shifted ? "-s" : "";
      std::set<Partition> seen;
      long long total = 0, orbit_count = 0;
      for_each_partition(w, [&](const Partition &p) {
        ++total;
        if (seen.count(p))
          return;
        ++orbit_count;
        std::array<Partition, 5> m;
        m[0] = p;
        for (int k = 1; k < 5; ++k)
          m[k] = shifted ? orbit_map_s(m[k - 1]) : orbit_map(m[k - 1]);
        Partition back = shifted ? orbit_map_s(m[4]) : orbit_map(m[4]);
        nlohmann::json where{{"partition", parts_json(p)}};
        ctx.expect("orb-closes" + tag, back == p, where);
        std::set<Partition> distinct(m.begin(), m.end());
        ctx.expect("orb-distinct" + tag, distinct.size() == 5, where);
        for (int k = 0; k < 5; ++k) {
          seen.insert(m[k]);
          ctx.expect("permprop1" + tag, m[k].weight() == w, where);
          ctx.expect("permprop2" + tag, five_core_crank(m[k]) == mod5(five_core_crank(p) + k), where);
          if (shifted)
            ctx.expect("srank-preserved", mod4(srank(m[k])) == mod4(srank(p)), where);
        }
      });
      ctx.expect_eq("orbit-count" + tag, 5 * orbit_count, total, {{"n", w}});
      ctx.expect_eq("orbits-partition-the-set" + tag, static_cast<long long>(seen.size()), total, {{"n", w}});
    }
}

// ---------------------------------------------------------------------------

int sravec2_rhs(const AlphaVector &a, const std::array<Partition, 5> &q) {
  const auto &al = a.coords;
  long long s = srank_alpha_mod4(a);
  for (const auto &c : q)
    s += srank(c);
  s += 2 * ((al[0] + al[4]) * q[0].weight() + (al[2] + al[3]) * q[1].weight() + (al[1] + al[2]) * q[2].weight() +
            (al[0] + al[1]) * q[3].weight() + (al[3] + al[4]) * q[4].weight());
  return mod4(s);
}

void elegant(CheckContext &ctx) {
  std::map<int, long long> r_form_offsets;
  long long r_form_cases = 0;
  nlohmann::json r_form_example;
  for_each_partition_upto(static_cast<int>(ctx.param("max_n")), [&](const Partition &p) {
    CoreQuotient cq = phi1(p, 5);
    NVector nv = phi2(cq.core, 5);
    const int s = mod4(srank(p)), sc = mod4(srank(cq.core));
    nlohmann::json where{{"partition", parts_json(p)}};
    ctx.expect("elegant1", sc == mod4(cube_sum(nv)), where);
    long long rhs = sc;
    for (int i = 0; i < 5; ++i)
      rhs += srank(cq.quotient[i]) + 2LL * cq.quotient[i].weight() * (nv.coords[i] + i);
    ctx.expect("elegant2", s == mod4(rhs), where);
    if (p.weight() % 5 != 4)
      return;
    PhiImage img = capital_phi(p);
    ctx.expect("sravec", sc == srank_alpha_mod4(img.alpha), where);
    ctx.expect("sravec2", s == sravec2_rhs(img.alpha, img.quotient), where);
    const int c5 = five_core_crank(p);
    const auto &n = nv.coords;
    ctx.expect("c5-n-form", c5 == mod5(2LL * (1 + n[0] - n[1] - n[2] + n[3])), where);
    // 2 + sum_{i=-2}^{2} i r_{2-i} with r the residue counts of the core
    auto r = residue_counts(cq.core, 5);
    long long rf = 2;
    for (int i = -2; i <= 2; ++i)
      rf += i * r[2 - i];
    ++r_form_cases;
    int offset = mod5(rf - c5);
    if (++r_form_offsets[offset] == 1 && offset != 0 && r_form_example.is_null())
      r_form_example = {{"partition", parts_json(p)}, {"c5", c5}, {"r_form", mod5(rf)}, {"residue_counts", r}};
  });
  nlohmann::json offsets = nlohmann::json::object();
  for (auto [k, c] : r_form_offsets)
    offsets[std::to_string(k)] = c;
  ctx.findings()["c5_r_form"] = {{"cases", r_form_cases},
                                 {"agree", r_form_offsets[0]},
                                 {"offset_counts", offsets},
                                 {"first_mismatch", r_form_example}};
}

void refine(CheckContext &ctx) {
  const int max_n = static_cast<int>(ctx.param("max_n"));
  const long long W = 5LL * max_n + 4;
  std::vector<std::array<long long, 2>> a5i(W + 1, std::array<long long, 2>{});
  std::vector<std::array<std::array<long long, 5>, 2>> a5ij(W + 1);
  for_each_n_vector(5, W, [&](const NVector &nv, long long w) {
    const int s = mod4(srank(phi2_inv(nv)));
    ctx.expect("elegant1-direct", s == mod4(cube_sum(nv)), {{"n_vector", to_json(nv)}});
    ++a5i[w][s / 2];
    if (w % 5 == 4)
      ++a5ij[w][s / 2][c5_of(nv)];
  });
  for (int n = 0; n <= max_n; ++n) {
    const int w = 5 * n + 4;
    for (int i = 0; i < 2; ++i) {
      nlohmann::json where{{"n", w}, {"srank_mod4", 2 * i}, {"total", a5i[w][i]}, {"by_c5", a5ij[w][i]}};
      bool equal = true;
      for (long long c : a5ij[w][i])
        equal &= 5 * c == a5i[w][i];
      ctx.expect("5corerelrefine", equal, where);
      ctx.expect_eq("5corerelrefine2", a5i[n][i], a5ij[w][i][0], {{"n", n}, {"srank_mod4", 2 * i}});
      ctx.expect_eq("5corerelrefine3", a5i[w][i], 5 * a5i[n][i], {{"n", n}, {"srank_mod4", 2 * i}});
    }
  }
  for_each_n_vector(5, max_n, [&](const NVector &nv, long long) {
    NVector img = theta_n(nv);
    const auto &n = nv.coords;
    long long lhs = cube_sum(nv) - cube_sum(img);
    long long mid = 2 * (static_cast<long long>(n[0]) * n[2] * (n[0] + n[2]) +
                         static_cast<long long>(n[1]) * n[3] * (n[1] + n[3]) +
                         static_cast<long long>(n[2]) * n[3] * (n[2] + n[3]) + static_cast<long long>(n[1]) * (n[1] + 1) +
                         static_cast<long long>(n[2]) * (n[2] + 1) + static_cast<long long>(n[3]) * (n[3] + 1));
    nlohmann::json where{{"n_vector", to_json(nv)}};
    ctx.expect("invarmod4-middle", mod4(lhs) == mod4(mid), where);
    ctx.expect("invarmod4-zero", mod4(mid) == 0, where);
    ctx.expect("theta-preserves-srank", mod4(srank(phi2_inv(img))) == mod4(srank(phi2_inv(nv))), where);
  });
}

void a50(CheckContext &ctx) {
  const int max_n = static_cast<int>(ctx.param("max_n"));
  const long long direct_max = ctx.param("direct_max");
  const long long W = 4LL * max_n + 3;
  std::vector<long long> a5(W + 1, 0), a50v(W + 1, 0);
  for_each_n_vector(5, W, [&](const NVector &nv, long long w) {
    const int s = thm4_rhs(nv);
    if (w <= direct_max)
      ctx.expect("thm4-direct", s == mod4(srank(phi2_inv(nv))), {{"n_vector", to_json(nv)}});
    ++a5[w];
    if (s == 0)
      ++a50v[w];
    if (w % 4 == 3) {
      bool pattern = true;
      for (int i = 0; i < 5; ++i)
        pattern &= mod(nv.coords[i], 2) == i % 2;
      ctx.expect("5csprop", (s == 0) == pattern, {{"n_vector", to_json(nv)}});
    }
  });
  for (long long w = 0; w <= W; ++w) {
    nlohmann::json where{{"n", w}, {"a5", a5[w]}, {"a50", a50v[w]}};
    switch (w % 4) {
    case 0:
      ctx.expect("a50form1", a50v[w] == a5[w], where);
      break;
    case 1:
      ctx.expect("a50form2", a50v[w] == a5[w], where);
      break;
    case 2:
      ctx.expect("a50form3", a50v[w] == 0, where);
      break;
    default:
      ctx.expect("a50form4", a50v[w] == a5[w / 4], where);
    }
  }
  std::set<std::vector<int>> images;
  long long sources = 0;
  for_each_n_vector(5, max_n, [&](const NVector &nv, long long w) {
    NVector img = map_4n_plus_3_n(nv);
    nlohmann::json where{{"n_vector", to_json(nv)}};
    const auto &n = nv.coords;
    ctx.expect("a50trans", img.coords == std::vector<int>{2 * n[1], 1 + 2 * n[4], 2 * n[2], -1 + 2 * n[0], 2 * n[3]},
               where);
    ctx.expect("transprop1", img.encoded_weight() == 4 * w + 3, where);
    ctx.expect("a50trans-srank0", thm4_rhs(img) == 0, where);
    images.insert(img.coords);
    ++sources;
  });
  ctx.expect_eq("a50trans-injective", static_cast<long long>(images.size()), sources);
}

// ---------------------------------------------------------------------------

// Case forms of the srank of a t-core mod 4.
int thm4_cases(const NVector &nv) {
  const int t = nv.t;
  long long s = 0;
  if (t % 2 == 1) {
    const int a = (t % 4 == 1) ? 0 : 1;
    for (int i = 0; i < t; ++i) {
      long long v = nv.coords[i] + static_cast<long long>(1 - 2 * a) * i + a;
      s += v * v * v;
    }
  } else {
    const int a = (t % 4 == 0) ? 0 : 1;
    for (int i = 0; i < t; ++i) {
      long long n = nv.coords[i];
      s += a * n * n + static_cast<long long>(i * i + i) * n;
    }
  }
  return mod4(s);
}

void theorem4(CheckContext &ctx) {
  const int max_t = static_cast<int>(ctx.param("max_t"));
  const long long max_n = ctx.param("max_n");
  for (int t = 2; t <= max_t; ++t)
    for_each_n_vector(t, max_n, [&](const NVector &nv, long long) {
      Partition core = phi2_inv(nv);
      const int s = mod4(srank(core));
      nlohmann::json where{{"n_vector", to_json(nv)}};
      ctx.expect("thm4", thm4_rhs(nv) == s, where);
      ctx.expect("thm4-cases", thm4_cases(nv) == s, where);
      long long gs = 0, durfee = 0;
      std::vector<int> conj(t);
      for (int i = 0; i < t; ++i) {
        gs += g_tni(t, nv.coords[i], i);
        if (nv.coords[i] > 0)
          durfee += nv.coords[i];
        conj[i] = -nv.coords[t - 1 - i];
      }
      ctx.expect("srtc2", mod4(gs) == s, where);
      ctx.expect("durfee", durfee == durfee_size(core), where);
      ctx.expect("nconj", phi2(conjugate(core), t).coords == conj, where);
    });
  const long long R = ctx.param("g_range");
  for (int t = 2; t <= max_t; ++t)
    for (long long n = -R; n <= R; ++n)
      for (int i = 0; i < t; ++i) {
        nlohmann::json where{{"t", t}, {"n", n}, {"i", i}};
        long long g = g_tni(t, n, i), h = g_tni(t, -n, t - 1 - i);
        ctx.expect("geven", g % 2 == 0, where);
        ctx.expect("gprop", g + h == 0, where);
        ctx.expect("gmod4", mod4(g) == mod4(h), where);
      }
}

int srtq_explicit(const Partition &p, int t) {
  CoreQuotient cq = phi1(p, t);
  long long s = srank(cq.core);
  if (t % 2 == 0) {
    const int a = (t % 4 == 0) ? 0 : 1;
    s += 2LL * a * cq.quotient_weight();
  } else {
    const int a = (t % 4 == 1) ? 0 : 1;
    NVector nv = phi2(cq.core, t);
    for (int i = 0; i < t; ++i)
      s += 2LL * (nv.coords[i] + i + a) * cq.quotient[i].weight() + srank(cq.quotient[i]);
  }
  return mod4(s);
}

void srtq(CheckContext &ctx) {
  const int max_t = static_cast<int>(ctx.param("max_t"));
  for_each_partition_upto(static_cast<int>(ctx.param("max_n")), [&](const Partition &p) {
    const int s = mod4(srank(p));
    for (int t = 2; t <= max_t; ++t) {
      nlohmann::json where{{"partition", parts_json(p)}, {"t", t}};
      ctx.expect(t % 2 == 0 ? "srtqa" : "srtqb", srtq_explicit(p, t) == s, where);
      ctx.expect("srtq-library", srtq_rhs(phi1(p, t)) == s, where);
    }
  });
}

// ---------------------------------------------------------------------------

void strips(CheckContext &ctx) {
  const int max_n = static_cast<int>(ctx.param("max_n"));
  long long printed_cases = 0, printed_misses = 0;
  nlohmann::json printed_example;
  for_each_partition_upto(max_n - 1, [&](const Partition &p) {
    for (int row = 1; row <= p.length() + 1; ++row) {
      const int col = p.row(row) + 1;
      if (row > 1 && p.row(row - 1) < col)
        continue;
      Partition star = add_cell(p, {row, col});
      ctx.expect("srpistar", mod4(srank(star) - srank(p)) == mod4(2LL * (row + col)),
                 {{"partition", parts_json(p)}, {"cell", {row, col}}});
    }
  });
  for_each_partition_upto(max_n, [&](const Partition &big) {
    for (int len = 1; len <= big.weight(); ++len)
      for (const auto &rm : rim_hook_removals(big, len)) {
        const long long x = rm.head.row, y = rm.head.col, l = len;
        const int diff = mod4(srank(big) - srank(rm.result));
        nlohmann::json where{{"partition", parts_json(big)}, {"length", len}, {"head", {x, y}}};
        ctx.expect("srpiss", diff == mod4(2 * l * (x + y) + l * l - l), where);
        Partition cur = rm.result;
        long long cell_sum = 0;
        for (const Cell &c : strip_attachment_order(big, rm)) {
          cur = add_cell(cur, c);
          cell_sum += 2LL * (c.row + c.col);
        }
        ctx.expect("srpiss-cellwise", cur == big && mod4(cell_sum) == diff, where);
        for (int t = 2; t <= len; ++t) {
          if (len % t != 0)
            continue;
          const long long lam = len / t;
          if (t % 2 == 0) {
            ctx.expect("srpissa", diff == mod4(2 * ((t % 4 == 0) ? 0 : 1) * lam), where);
            continue;
          }
          const int a = (t % 4 == 1) ? 0 : 1;
          ctx.expect("srpissb", diff == mod4(2 * lam * (x + y + a) + lam * lam - lam), where);
          ++printed_cases;
          if (diff != mod4(2 * a * lam * (x + y + a) + lam * lam - lam) && printed_misses++ == 0)
            printed_example = where;
        }
      }
  });

  // the form with the factor a on the linear term
  ctx.findings()["srpissb_printed"] = {
      {"cases", printed_cases}, {"mismatches", printed_misses}, {"first_mismatch", printed_example}};

  // Growing one quotient component part by part: each step attaches a single strip of
  // length t*lambda_k whose head satisfies x + y = n_i + i + k - 1 (mod 2).
  for (int t : {3, 5}) {
    const int a = (t % 4 == 1) ? 0 : 1;
    for_each_partition_upto(max_n, [&](const Partition &p) {
      CoreQuotient cq = phi1(p, t);
      NVector nv = phi2(cq.core, t);
      for (int i = 0; i < t; ++i) {
        const auto &lam = cq.quotient[i].parts();
        if (lam.empty())
          continue;
        Partition prev = phi1_inv(with_component(cq, i, Partition()));
        for (std::size_t k = 1; k <= lam.size(); ++k) {
          std::vector<int> head_parts(lam.begin(), lam.begin() + static_cast<long>(k));
          Partition cur = phi1_inv(with_component(cq, i, Partition::from_parts(head_parts)));
          const int len = t * lam[k - 1];
          nlohmann::json where{{"partition", parts_json(p)}, {"t", t}, {"color", i}, {"step", k}};
          const StripRemoval *found = nullptr;
          auto removals = rim_hook_removals(cur, len);
          for (const auto &rm : removals)
            if (rm.result == prev)
              found = &rm;
          ctx.expect("strip-exists", found != nullptr, where);
          if (found) {
            const long long shift = nv.coords[i] + i + static_cast<long long>(k) - 1;
            const long long xy = found->head.row + found->head.col;
            ctx.expect(k == 1 ? "bsh" : "bsh-iterated", mod(xy, 2) == mod(shift, 2), where);
            const long long l = lam[k - 1];
            ctx.expect("srq", mod4(srank(cur) - srank(prev)) == mod4(2 * l * (shift + a) + l * l - l), where);
          }
          prev = cur;
        }
      }
    });
  }
}

void bgralt(CheckContext &ctx) {
  for_each_partition_upto(static_cast<int>(ctx.param("max_n")), [&](const Partition &p) {
    const int b = bg_rank(p);
    CoreQuotient cq = phi1(p, 2);
    const int n0 = phi2(cq.core, 2).coords[0];
    auto r = residue_counts(p, 2);
    nlohmann::json where{{"partition", parts_json(p)}};
    ctx.expect("bgralt-n0", b == n0, where);
    ctx.expect("bgralt-residues", b == r[0] - r[1], where);
    ctx.expect("2core-weight", cq.core.weight() == static_cast<long long>(n0) * (2 * n0 - 1), where);
    ctx.expect("srn0", mod4(srank(p)) == mod4(p.weight() - static_cast<long long>(n0) * (2 * n0 - 1)), where);
  });
}

// ---------------------------------------------------------------------------

// abar[w][j]: 5-cores of w with BG-rank j.
std::vector<std::map<int, long long>> five_core_bg_tally(long long max_weight) {
  std::vector<std::map<int, long long>> out(static_cast<std::size_t>(max_weight + 1));
  for_each_n_vector(5, max_weight, [&](const NVector &nv, long long w) { ++out[w][bg_rank(phi2_inv(nv))]; });
  return out;
}

void ab5j4(CheckContext &ctx) {
  auto tally = five_core_bg_tally(ctx.param("max_n"));
  for (std::size_t w = 4; w < tally.size(); w += 5)
    for (auto [j, c] : tally[w])
      ctx.expect("ab5j4", c % 5 == 0, {{"n", w}, {"j", j}, {"count", c}});
}

void ab5jr(CheckContext &ctx) {
  CheckReport r = search_counterexample("ab5jr", ctx.param("max_weight"));
  ctx.report().status = r.status;
  ctx.report().witness = r.witness;
  ctx.report().claims = r.claims;
}

} // namespace

CheckReport search_counterexample(const std::string &family, long long max_weight) {
  if (family != "ab5jr")
    fail(ErrorCode::unknown_id, "unknown counterexample family: " + family);
  CheckReport rep;
  rep.id = "CHK-AB5JR";
  rep.params = {{"max_weight", max_weight}};
  rep.status = CheckStatus::not_found;
  if (max_weight < 0)
    return rep;
  auto tally = five_core_bg_tally(max_weight);
  // (n, r, j) in lexicographic order; j runs over BG-ranks carrying the claim in weight 5n+r
  for (long long n = 0; 5 * n <= max_weight; ++n)
    for (int r = 0; r < 4; ++r) {
      const long long w = 5 * n + r;
      if (w > max_weight)
        break;
      for (auto [j, c] : tally[w]) {
        if (!bg_condition(r, j))
          continue;
        ++rep.claims["ab5jr-cases-scanned"];
        if (c % 5 != 0) {
          rep.status = CheckStatus::counterexample_found;
          rep.witness = {{"n", n}, {"r", r}, {"j", j}, {"weight", w}, {"class_size", c}};
          return rep;
        }
      }
    }
  return rep;
}

void register_core_checks(std::vector<CheckSpec> &out) {
  out.push_back({"CHK-PHI", "Littlewood and n-vector bijections round trip",
                 {{"max_n", 20}, {"max_n_cores", 25}}, phi_roundtrips});
  out.push_back({"CHK-ORACLE", "strip removal and t-core counts agree across methods",
                 {{"max_n", 18}, {"max_n_enum", 30}}, oracle});
  out.push_back({"CHK-5CORE", "5-core counts at 5n+4, alpha sums and the theta map",
                 {{"max_n", 104}, {"max_n_enum", 30}}, five_cores});
  out.push_back({"CHK-ORBIT", "orbits of the 5-core crank maps", {{"max_n", 49}}, orbits});
  out.push_back({"CHK-ELEGANT", "srank of 5-cores and of partitions from core and quotient mod 4", {{"max_n", 29}},
                 elegant});
  out.push_back({"CHK-REFINE", "5-core counts refined by srank mod 4", {{"max_n", 104}}, refine});
  out.push_back({"CHK-A50", "5-cores with srank 0 mod 4 by weight mod 4", {{"max_n", 200}, {"direct_max", 300}}, a50});
  out.push_back({"CHK-THM4", "srank of t-cores mod 4 from n-vectors", {{"max_t", 9}, {"max_n", 30}, {"g_range", 20}},
                 theorem4});
  out.push_back({"CHK-SRTQ", "srank mod 4 from t-core and t-quotient", {{"max_t", 9}, {"max_n", 24}}, srtq});
  out.push_back({"CHK-STRIP", "srank change under cell and strip attachment", {{"max_n", 18}}, strips});
  out.push_back({"CHK-BGRALT", "BG-rank from the 2-core and from residue counts", {{"max_n", 25}}, bgralt});
  out.push_back({"CHK-AB5JR", "BG-rank classes of 5-cores off 5n+4 need not be divisible by 5",
                 {{"max_weight", 60}}, ab5jr});
  out.push_back({"CHK-AB5J4", "BG-rank classes of 5-cores of 5n+4 are divisible by 5", {{"max_n", 104}}, ab5j4});
}

} // namespace tcorelab::verify
