#pragma once

#include <string>
#include <vector>

#include "../core/error.hpp"
#include "../core/partition.hpp"
#include "../qseries/series.hpp"
#include "json_io.hpp"
#include "report.hpp"

namespace tcorelab::verify {

inline int mod4(long long v) { return static_cast<int>(mod(v, 4)); }
inline int mod5(long long v) { return static_cast<int>(mod(v, 5)); }

/// m*n + r for n >= 0, up to max.
inline std::vector<int> progression(int m, int r, long long max) {
  std::vector<int> out;
  for (long long w = r; w <= max; w += m)
    out.push_back(static_cast<int>(w));
  return out;
}

inline long long count_partitions(int n) {
  long long c = 0;
  for_each_partition(n, [&](const Partition &) { ++c; });
  return c;
}

inline void for_each_partition_upto(int max_n, const std::function<void(const Partition &)> &visit) {
  for (int n = 0; n <= max_n; ++n)
    for_each_partition(n, visit);
}

inline qs::Series<qs::Integer> partition_series(int order) { return qs::poch<qs::Integer>(1, 1, 1, -1, order); }

/// Which BG-ranks j carry the mod 5 claim in weights 5n + r.
inline bool bg_condition(int r, long long j) {
  int jj = mod5(j);
  switch (r) {
  case 0:
    return jj == 1 || jj == 2;
  case 1:
    return !(jj == 1 || jj == 2);
  case 2:
    return !(jj == 0 || jj == 3);
  case 3:
    return jj == 0 || jj == 3;
  default:
    return true;
  }
}

/// Records a series identity as one case per compared coefficient; the first
/// mismatching coefficient becomes the witness.
template <class R>
void expect_series(CheckContext &ctx, const std::string &claim, const qs::Series<R> &lhs, const qs::Series<R> &rhs,
                   int order) {
  if (order > lhs.order() || order > rhs.order())
    fail(ErrorCode::internal, claim + ": comparison beyond truncation order");
  int diff = lhs.first_difference(rhs, order);
  if (diff < 0) {
    ctx.report().claims[claim] += order;
    return;
  }
  ctx.report().claims[claim] += diff;
  ctx.expect(claim, false,
             {{"order", order}, {"index", diff}, {"lhs", coeff_json(lhs.coeff(diff))}, {"rhs", coeff_json(rhs.coeff(diff))}});
}

} // namespace tcorelab::verify
