#pragma once

#include <json.hpp>

#include "../core/cores.hpp"
#include "../core/orbits.hpp"
#include "../core/partition.hpp"
#include "../qseries/series.hpp"

namespace tcorelab::verify {

nlohmann::json parts_json(const Partition &p);
/// {"parts":[...],"weight":n}
nlohmann::json to_json(const Partition &p);
/// {"t":t,"core":...,"quotient":[...]}
nlohmann::json to_json(const CoreQuotient &cq);
nlohmann::json to_json(const NVector &n);
nlohmann::json to_json(const AlphaVector &a);
/// {"members":[...],"c5":[0,1,2,3,4],"srank_mod4":k}
nlohmann::json to_json(const Orbit &o);

/// JSON number when the value fits in 64 bits, decimal string otherwise.
nlohmann::json coeff_json(const qs::Integer &v);
template <int N, class Base> nlohmann::json coeff_json(const qs::Cyclotomic<N, Base> &v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto &c : v.coeffs())
    arr.push_back(coeff_json(c));
  return arr;
}
/// [{"monomial":{"x":e,...},"coeff":c}, ...] in monomial order.
template <class Base> nlohmann::json coeff_json(const qs::Laurent<Base> &v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto &[m, c] : v.terms()) {
    nlohmann::json mono = nlohmann::json::object();
    for (int k = 0; k < 3; ++k)
      if (m[k] != 0)
        mono[qs::kVariableNames[k]] = m[k];
    arr.push_back({{"monomial", mono}, {"coeff", coeff_json(c)}});
  }
  return arr;
}

template <class R> nlohmann::json series_json(const qs::Series<R> &s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto &c : s.coeffs())
    arr.push_back(coeff_json(c));
  return {{"order", s.order()}, {"coefficients", arr}};
}

} // namespace tcorelab::verify
