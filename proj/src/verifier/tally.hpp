#pragma once

#include <array>
#include <map>
#include <vector>
#include <optional>
#include <string_view>

#include "../core/statistics.hpp"

namespace tcorelab::verify {

enum class Filter { none, srank0, srank2, five_core };

std::optional<Filter> parse_filter(std::string_view name);
std::string_view filter_name(Filter f);
bool passes(Filter f, const Partition &p);

/// Residue (0..modulus-1) -> number of partitions of n passing the filter whose
/// statistic falls in that residue class. Every residue is present.
std::map<long long, long long> class_counts(int n, Statistic stat, int modulus, Filter filter = Filter::none);

/// counts[s][k]: partitions of n with srank = s (mod 4) and statistic = k (mod modulus);
/// only s = 0 and s = 2 occur.
std::array<std::vector<long long>, 4> srank_split_counts(int n, Statistic stat, int modulus);

} // namespace tcorelab::verify
