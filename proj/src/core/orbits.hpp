#pragma once

#include <array>

#include "cores.hpp"
#include "partition.hpp"

namespace tcorelab {

/// (a0,a1,a2,a3,a4) -> (a4,a0,a1,a2,a3)
AlphaVector c1_shift(const AlphaVector &a);
/// (q0,q1,q2,q3,q4) -> (q4,q2,q3,q0,q1)
std::array<Partition, 5> c2_shift(const std::array<Partition, 5> &q);

/// Rotates the alpha-vector, keeping the 5-quotient.
Partition orbit_map(const Partition &p);
/// Rotates the alpha-vector and permutes the 5-quotient; preserves srank mod 4.
Partition orbit_map_s(const Partition &p);

NVector theta_n(const NVector &n);
NVector map_4n_plus_3_n(const NVector &n);
/// 5-core of weight n -> 5-core of weight 5n+4 with five-core-crank 0.
Partition theta(const Partition &core5);
/// 5-core of weight n -> 5-core of weight 4n+3 with srank 0 mod 4.
Partition map_4n_plus_3(const Partition &core5);

struct Orbit {
  /// members[k] has five-core-crank k; members[k+1] is the image of members[k].
  std::array<Partition, 5> members;
  bool shifted = false;
  friend bool operator==(const Orbit &, const Orbit &) = default;
};

Orbit orbit(const Partition &p, bool shifted);

} // namespace tcorelab
