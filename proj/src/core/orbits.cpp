#include "orbits.hpp"

#include "error.hpp"
#include "statistics.hpp"

namespace tcorelab {

AlphaVector c1_shift(const AlphaVector &a) {
  const auto &x = a.coords;
  return AlphaVector::make({x[4], x[0], x[1], x[2], x[3]});
}

std::array<Partition, 5> c2_shift(const std::array<Partition, 5> &q) { return {q[4], q[2], q[3], q[0], q[1]}; }

Partition orbit_map(const Partition &p) {
  PhiImage image = capital_phi(p);
  image.alpha = c1_shift(image.alpha);
  return capital_phi_inv(image);
}

Partition orbit_map_s(const Partition &p) {
  PhiImage image = capital_phi(p);
  image.alpha = c1_shift(image.alpha);
  image.quotient = c2_shift(image.quotient);
  return capital_phi_inv(image);
}

namespace {
void require_5core(const Partition &p) {
  if (!is_t_core(p, 5))
    fail(ErrorCode::not_a_core, p.to_csv() + " is not a 5-core");
}
} // namespace

NVector theta_n(const NVector &n) {
  if (n.t != 5)
    fail(ErrorCode::invalid_argument, "theta acts on 5-component n-vectors");
  const auto &v = n.coords;
  return NVector::make({v[1] + 2 * v[2] + 2 * v[4] + 1, -v[1] - v[2] + v[3] + v[4] + 1, 2 * v[1] + v[2] + 2 * v[3],
                        -2 * v[2] - 2 * v[3] - v[4] - 1, -2 * v[1] - v[3] - 2 * v[4] - 1});
}

NVector map_4n_plus_3_n(const NVector &n) {
  if (n.t != 5)
    fail(ErrorCode::invalid_argument, "the 4n+3 map acts on 5-component n-vectors");
  const auto &v = n.coords;
  return NVector::make({2 * v[1], 1 + 2 * v[4], 2 * v[2], -1 + 2 * v[0], 2 * v[3]});
}

Partition theta(const Partition &core5) {
  require_5core(core5);
  return phi2_inv(theta_n(phi2(core5, 5)));
}

Partition map_4n_plus_3(const Partition &core5) {
  require_5core(core5);
  return phi2_inv(map_4n_plus_3_n(phi2(core5, 5)));
}

Orbit orbit(const Partition &p, bool shifted) {
  auto step = [shifted](const Partition &x) { return shifted ? orbit_map_s(x) : orbit_map(x); };
  Partition start = p;
  // walk to the member with five-core-crank 0
  for (int c = five_core_crank(p); c != 0; c = (c + 1) % 5)
    start = step(start);
  Orbit o;
  o.shifted = shifted;
  o.members[0] = start;
  for (int k = 1; k < 5; ++k)
    o.members[k] = step(o.members[k - 1]);
  return o;
}

} // namespace tcorelab
