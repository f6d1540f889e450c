#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "../qseries/series.hpp"

namespace tcorelab::verify {

using qs::Integer;
using LZ = qs::Laurent<Integer>;
using C5 = qs::Cyclo5;
using C5G = qs::Cyclotomic<5, qs::Gaussian>;
using LG = qs::Laurent<qs::Gaussian>;
using IS = qs::Series<Integer>;
using LS = qs::Series<LZ>;

inline constexpr int kX = 0, kY = 1, kZ = 2;

/// x^a y^b z^c
LZ mono(int a, int b = 0, int c = 0);

/// sum_{k>=0} q^{T_k}
IS triangular_sum(int order);
/// (q^4;q^4)(-q;q^2)
IS jtpa_product(int order);
/// (q;q) / ((xq;q)(q/x;q))
LS crank_product(int order);
/// (-zyq;q^2) / ((q^4;q^4)(z^2q^2;q^4)(y^2q^2;q^4))
LS rsgf_product(int order);
/// (-q;q^2) / ((q^4;q^4)(-q^2;q^4)^2)
IS p02_product(int order);
/// (-q;q^2) / ((y^2q^2;q^4)(q^2/y^2;q^4))
LS srank_product(int order);
/// (q^4;q^4)(-q;q^2) / ((q^4x, q^4/x, q^2y^2x, q^2/(y^2x); q^4))
LS lemma1_product(int order);
/// (q^t;q^t)^t / (q;q)
IS tcore_product(int t, int order);
/// (x + 1 + 1/x)(q;q) / ((xq;q)(q/x;q))
LS g3_product(int order);
/// q^{(2j-1)j} / ((q^2x, q^2/x; q^2))
LS fj_product(int j, int order);
/// g(xi, y, q) with xi a primitive fifth root of unity and y = 1 or sqrt(-1).
qs::Series<C5G> g_at_xi(bool y_is_i, int order);

/// Names accepted by series_expression.
std::vector<std::string> series_expression_names();
/// Coefficients of a named construction; throws unknown_id for other names.
nlohmann::json series_expression(const std::string &name, int order);

} // namespace tcorelab::verify
