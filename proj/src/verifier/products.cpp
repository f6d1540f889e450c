#include "products.hpp"

#include <charconv>

#include "json_io.hpp"

namespace tcorelab::verify {

using qs::poch;
using qs::poch_inf;

LZ mono(int a, int b, int c) { return LZ::monomial(Integer(1), qs::Monomial{a, b, c}); }

IS triangular_sum(int order) {
  IS s(order);
  for (long long k = 0; k * (k + 1) / 2 < order; ++k)
    s.add_to(static_cast<int>(k * (k + 1) / 2), Integer(1));
  return s;
}

IS jtpa_product(int order) { return poch<Integer>(1, 4, 4, 1, order) * poch<Integer>(-1, 1, 2, 1, order); }

LS crank_product(int order) {
  return poch<LZ>(1, 1, 1, 1, order) * poch_inf(mono(1), 1, 1, -1, order) * poch_inf(mono(-1), 1, 1, -1, order);
}

LS rsgf_product(int order) {
  return poch_inf(LZ(-mono(0, 1, 1)), 1, 2, 1, order) * poch<LZ>(1, 4, 4, -1, order) *
         poch_inf(mono(0, 0, 2), 2, 4, -1, order) * poch_inf(mono(0, 2, 0), 2, 4, -1, order);
}

IS p02_product(int order) {
  return poch<Integer>(-1, 1, 2, 1, order) * poch<Integer>(1, 4, 4, -1, order) * poch<Integer>(-1, 2, 4, -2, order);
}

LS srank_product(int order) {
  return poch<LZ>(-1, 1, 2, 1, order) * poch_inf(mono(0, 2), 2, 4, -1, order) *
         poch_inf(mono(0, -2), 2, 4, -1, order);
}

LS lemma1_product(int order) {
  LS num = poch<LZ>(1, 4, 4, 1, order) * poch<LZ>(-1, 1, 2, 1, order);
  return num * poch_inf(mono(1), 4, 4, -1, order) * poch_inf(mono(-1), 4, 4, -1, order) *
         poch_inf(mono(1, 2), 2, 4, -1, order) * poch_inf(mono(-1, -2), 2, 4, -1, order);
}

IS tcore_product(int t, int order) {
  if (t < 1)
    fail(ErrorCode::invalid_argument, "t must be positive");
  return poch<Integer>(1, t, t, t, order) * poch<Integer>(1, 1, 1, -1, order);
}

LS g3_product(int order) {
  LZ pre = mono(1) + LZ(1) + mono(-1);
  return crank_product(order).scaled(pre);
}

LS fj_product(int j, int order) {
  long long e = static_cast<long long>(2 * j - 1) * j;
  LS den = poch_inf(mono(1), 2, 2, -1, order) * poch_inf(mono(-1), 2, 2, -1, order);
  LS out(order);
  if (e < order)
    out = den.shifted(static_cast<int>(e));
  return out;
}

qs::Series<C5G> g_at_xi(bool y_is_i, int order) {
  const C5G xi = C5G::root_power(1), xi_inv = C5G::root_power(-1);
  const C5G y = y_is_i ? C5G(C5G::Coeffs{qs::Gaussian::root_power(1), 0, 0, 0}) : C5G(1);
  const C5G y2 = y * y; // y^{-2} = y^2
  qs::Series<C5G> s = poch<C5G>(1, 4, 4, 1, order) * poch<C5G>(-1, 1, 2, 1, order);
  return s * poch_inf(xi, 4, 4, -1, order) * poch_inf(xi_inv, 4, 4, -1, order) *
         poch_inf(C5G(y2 * xi), 2, 4, -1, order) * poch_inf(C5G(y2 * xi_inv), 2, 4, -1, order);
}

namespace {

bool parse_suffix(const std::string &name, const std::string &prefix, int &value) {
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0)
    return false;
  const char *b = name.data() + prefix.size(), *e = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(b, e, value);
  return ec == std::errc() && ptr == e;
}

} // namespace

std::vector<std::string> series_expression_names() {
  return {"partitions", "rambest", "triangular", "jtpa", "crankgf", "rsgf", "p02prod", "srankprod",
          "lemma1",     "g3",      "g-xi-1",     "g-xi-i", "tcore<t>", "fj<j>"};
}

nlohmann::json series_expression(const std::string &name, int order) {
  if (order < 1)
    fail(ErrorCode::invalid_argument, "order must be positive");
  int k = 0;
  if (name == "partitions")
    return series_json(poch<Integer>(1, 1, 1, -1, order));
  if (name == "rambest")
    return series_json((poch<Integer>(1, 5, 5, 5, order) * poch<Integer>(1, 1, 1, -6, order)).scaled(Integer(5)));
  if (name == "triangular")
    return series_json(triangular_sum(order));
  if (name == "jtpa")
    return series_json(jtpa_product(order));
  if (name == "crankgf")
    return series_json(crank_product(order));
  if (name == "rsgf")
    return series_json(rsgf_product(order));
  if (name == "p02prod")
    return series_json(p02_product(order));
  if (name == "srankprod")
    return series_json(srank_product(order));
  if (name == "lemma1")
    return series_json(lemma1_product(order));
  if (name == "g3")
    return series_json(g3_product(order));
  if (name == "g-xi-1" || name == "g-xi-i")
    return series_json(g_at_xi(name == "g-xi-i", order));
  if (parse_suffix(name, "tcore", k)) {
    if (k < 2 || k > 12)
      fail(ErrorCode::invalid_argument, "tcore<t> needs 2 <= t <= 12");
    return series_json(tcore_product(k, order));
  }
  if (parse_suffix(name, "fj", k))
    return series_json(fj_product(k, order));
  fail(ErrorCode::unknown_id, "unknown series expression: " + name);
}

} // namespace tcorelab::verify
