#include "json_io.hpp"

#include "../core/statistics.hpp"

namespace tcorelab::verify {

nlohmann::json parts_json(const Partition &p) { return p.parts(); }

nlohmann::json to_json(const Partition &p) { return {{"parts", p.parts()}, {"weight", p.weight()}}; }

nlohmann::json to_json(const CoreQuotient &cq) {
  nlohmann::json q = nlohmann::json::array();
  for (const auto &c : cq.quotient)
    q.push_back(to_json(c));
  return {{"t", cq.t}, {"core", to_json(cq.core)}, {"quotient", q}};
}

nlohmann::json to_json(const NVector &n) { return n.coords; }

nlohmann::json to_json(const AlphaVector &a) { return a.coords; }

nlohmann::json to_json(const Orbit &o) {
  nlohmann::json members = nlohmann::json::array();
  for (const auto &m : o.members)
    members.push_back(to_json(m));
  return {{"members", members},
          {"c5", {0, 1, 2, 3, 4}},
          {"srank_mod4", mod(srank(o.members[0]), 4)},
          {"shifted", o.shifted}};
}

nlohmann::json coeff_json(const qs::Integer &v) {
  if (v.fits_slong_p())
    return static_cast<long long>(v.get_si());
  return v.get_str();
}

} // namespace tcorelab::verify
