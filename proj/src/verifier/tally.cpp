#include "tally.hpp"

#include <array>
#include <vector>

#include "../core/error.hpp"

namespace tcorelab::verify {

std::optional<Filter> parse_filter(std::string_view name) {
  if (name == "none" || name.empty())
    return Filter::none;
  if (name == "srank0")
    return Filter::srank0;
  if (name == "srank2")
    return Filter::srank2;
  if (name == "5-core")
    return Filter::five_core;
  return std::nullopt;
}

std::string_view filter_name(Filter f) {
  switch (f) {
  case Filter::none:
    return "none";
  case Filter::srank0:
    return "srank0";
  case Filter::srank2:
    return "srank2";
  case Filter::five_core:
    return "5-core";
  }
  return "?";
}

bool passes(Filter f, const Partition &p) {
  switch (f) {
  case Filter::none:
    return true;
  case Filter::srank0:
    return mod(srank(p), 4) == 0;
  case Filter::srank2:
    return mod(srank(p), 4) == 2;
  case Filter::five_core:
    return is_t_core(p, 5);
  }
  return false;
}

std::map<long long, long long> class_counts(int n, Statistic stat, int modulus, Filter filter) {
  if (modulus < 1)
    fail(ErrorCode::invalid_argument, "modulus must be positive");
  std::vector<long long> counts(modulus, 0);
  for_each_partition(n, [&](const Partition &p) {
    if (!passes(filter, p))
      return;
    long long &slot = counts[mod(evaluate(stat, p), modulus)];
    slot = checked_add(slot, 1);
  });
  std::map<long long, long long> out;
  for (int k = 0; k < modulus; ++k)
    out[k] = counts[k];
  return out;
}

std::array<std::vector<long long>, 4> srank_split_counts(int n, Statistic stat, int modulus) {
  std::array<std::vector<long long>, 4> counts;
  for (auto &row : counts)
    row.assign(modulus, 0);
  for_each_partition(n, [&](const Partition &p) {
    long long &slot = counts[mod(srank(p), 4)][mod(evaluate(stat, p), modulus)];
    slot = checked_add(slot, 1);
  });
  return counts;
}

} // namespace tcorelab::verify
