#pragma once

#include <string>

#include <json.hpp>

namespace tcorelab::verify {

/// Partitions of 9 by srank mod 4 and St-crank mod 5; each cell in ascending
/// lexicographic order of part sequences.
std::string table1_text();
nlohmann::json table1_json();

/// Partitions of 9 in orbits of the srank-preserving orbit map, one row per orbit,
/// column k holding the member with 5-core crank k. Rows are grouped by srank class
/// and ordered by quotient weight, then by the crank-0 member.
std::string table2_text();
nlohmann::json table2_json();

/// Compare the computed tables with the published ones; on mismatch `diff` names
/// the first differing cell.
bool table1_matches_published(nlohmann::json &diff);
bool table2_matches_published(nlohmann::json &diff);

} // namespace tcorelab::verify
