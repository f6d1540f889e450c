#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "partition.hpp"

namespace tcorelab {

/// Integer t-tuple with zero sum; encodes a t-core.
struct NVector {
  int t = 0;
  std::vector<int> coords;

  /// Throws invalid_vector unless t >= 2, coords.size() == t and the sum is zero.
  static NVector make(std::vector<int> coords);
  /// (t/2)|n|^2 + sum i*n_i, the weight of the encoded core.
  long long encoded_weight() const;
  /// sum i*n_i
  long long dot_b() const;
  friend bool operator==(const NVector &, const NVector &) = default;
};

/// Integer 5-tuple with coordinate sum 1.
struct AlphaVector {
  std::array<int, 5> coords{};
  static AlphaVector make(std::array<int, 5> coords);
  friend bool operator==(const AlphaVector &, const AlphaVector &) = default;
};

struct CoreQuotient {
  int t = 0;
  Partition core;
  /// quotient[i] is the component attached to color i.
  std::vector<Partition> quotient;
  friend bool operator==(const CoreQuotient &, const CoreQuotient &) = default;
  long long quotient_weight() const;
};

/// Exposure words of the extended t-residue diagram. window[i][k] is the letter
/// ('E' or 'N') of color i in region base_region + k. Left of the window every
/// word reads E, right of it N.
struct ColorWords {
  int t = 0;
  long long base_region = 0;
  std::vector<std::string> window;

  char letter(int color, long long region) const;
  /// Region of the last E when the word has the form ...EEN N..., else no value.
  std::optional<long long> boundary(int color) const;
};

ColorWords words(const Partition &p, int t);

/// Littlewood decomposition via beta-sets split by residue class.
CoreQuotient phi1(const Partition &p, int t);
/// Inverse of phi1; throws not_a_core when cq.core has a t-hook.
Partition phi1_inv(const CoreQuotient &cq);

/// n-vector of a t-core from its residue counts; throws not_a_core otherwise.
NVector phi2(const Partition &core, int t);
Partition phi2_inv(const NVector &n);

/// Throws wrong_residue when n.b_5 is not 4 mod 5.
AlphaVector alpha_from_n(const NVector &n);
NVector n_from_alpha(const AlphaVector &a);

/// |a|^2 - (a0a1 + a1a2 + a2a3 + a3a4 + a4a0)
long long q_alpha(const AlphaVector &a);
long long q3(long long n1, long long n2);

struct PhiImage {
  AlphaVector alpha;
  std::array<Partition, 5> quotient;
};

/// Combined 5-core/5-quotient map for weights 4 mod 5.
PhiImage capital_phi(const Partition &p);
Partition capital_phi_inv(const PhiImage &image);

/// Visits every n-vector of length t whose encoded weight is at most max_weight.
void for_each_n_vector(int t, long long max_weight, const std::function<void(const NVector &, long long)> &visit);

/// a_t(0..max_weight) by n-vector enumeration.
std::vector<long long> t_core_counts(int t, long long max_weight);
long long count_t_cores(long long n, int t);

/// Largest |n_i| any n-vector of encoded weight <= max_weight can have.
int n_vector_radius(int t, long long max_weight);

} // namespace tcorelab
