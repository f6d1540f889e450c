#include "tables.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <vector>

#include "../core/error.hpp"
#include "../core/orbits.hpp"
#include "../core/statistics.hpp"
#include "json_io.hpp"
#include "registry.hpp"

namespace tcorelab::verify {
namespace {

constexpr int kWeight = 9;

// Published Table 1, row-major: srank class 0 then 2, St-crank columns 0..4.
const std::array<std::array<std::vector<std::string>, 5>, 2> kPublishedTable1{{
    {{{"(3^3)", "(1^3,2^1,4^1)", "(1^1,3^1,5^1)", "(4^1,5^1)"},
      {"(1^5,2^2)", "(1^4,5^1)", "(1^2,2^1,5^1)", "(9^1)"},
      {"(1^4,2^1,3^1)", "(1^3,3^2)", "(1^1,4^2)", "(2^2,5^1)"},
      {"(1^1,2^4)", "(1^6,3^1)", "(1^1,2^1,6^1)", "(2^1,7^1)"},
      {"(1^9)", "(1^2,2^2,3^1)", "(2^3,3^1)", "(1^2,7^1)"}}},
    {{{"(1^3,2^3)", "(1^3,6^1)"},
      {"(1^1,2^1,3^2)", "(1^2,3^1,4^1)"},
      {"(1^5,4^1)", "(1^1,8^1)"},
      {"(1^7,2^1)", "(1^1,2^2,4^1)"},
      {"(2^1,3^1,4^1)", "(3^1,6^1)"}}},
}};

struct PublishedRow {
  int srank_class;
  std::array<const char *, 5> entries;
};

// Published Table 2, rows in printed order.
const std::vector<PublishedRow> kPublishedTable2{
    {0, {"(1^4,5^1)", "(1^3,3^2)", "(1^4,2^1,3^1)", "(1^1,2^1,6^1)", "(2^2,5^1)"}},
    {0,
     {"(1^5,2^2) -> ((2^2),3)", "(2^3,3^1) -> ((1^4),2)", "(1^2,7^1) -> ((1^2,2^1),1)", "(4^1,5^1) -> ((1^1,3^1),4)",
      "(1^3,2^1,4^1) -> ((4^1),0)"}},
    {0,
     {"(3^3) -> ((2^2),2)", "(1^9) -> ((1^4),1)", "(1^1,3^1,5^1) -> ((1^2,2^1),4)", "(1^2,2^2,3^1) -> ((1^1,3^1),0)",
      "(9^1) -> ((4^1),3)"}},
    {0,
     {"(2^1,7^1) -> ((2^2),1)", "(1^2,2^1,5^1) -> ((1^4),4)", "(1^1,2^4) -> ((1^2,2^1),0)",
      "(1^6,3^1) -> ((1^1,3^1),3)", "(1^1,4^2) -> ((4^1),2)"}},
    {2,
     {"(1^3,2^3) -> ((2^2),4)", "(1^3,6^1) -> ((1^4),0)", "(2^1,3^1,4^1) -> ((1^2,2^1),3)",
      "(1^1,8^1) -> ((1^1,3^1),2)", "(1^2,3^1,4^1) -> ((4^1),1)"}},
    {2,
     {"(3^1,6^1) -> ((2^2),0)", "(1^1,2^2,4^1) -> ((1^4),3)", "(1^7,2^1) -> ((1^2,2^1),2)",
      "(1^1,2^1,3^2) -> ((1^1,3^1),1)", "(1^5,4^1) -> ((4^1),4)"}},
};

// cells[s/2][k]: partitions with srank = s (mod 4) and St-crank = k (mod 5).
std::array<std::array<std::vector<Partition>, 5>, 2> table1_cells() {
  std::array<std::array<std::vector<Partition>, 5>, 2> cells;
  for_each_partition(kWeight, [&](const Partition &p) {
    cells[mod(srank(p), 4) / 2][mod(st_crank(p), 5)].push_back(p);
  });
  for (auto &row : cells)
    for (auto &cell : row)
      std::sort(cell.begin(), cell.end());
  return cells;
}

// "((core),k)" when the quotient is (1) in slot k, else the full quotient.
std::string image_text(const Partition &p) {
  CoreQuotient cq = phi1(p, 5);
  std::string core = cq.core.to_frequency_notation();
  int single = -1, nonempty = 0;
  for (int i = 0; i < 5; ++i)
    if (!cq.quotient[i].empty()) {
      ++nonempty;
      if (cq.quotient[i] == Partition::from_parts({1}))
        single = i;
    }
  if (nonempty == 1 && single >= 0)
    return "(" + core + "," + std::to_string(single) + ")";
  std::string q;
  for (int i = 0; i < 5; ++i)
    q += (i ? ";" : "") + cq.quotient[i].to_frequency_notation();
  return "(" + core + ",[" + q + "])";
}

std::string entry_text(const Partition &p) {
  if (is_t_core(p, 5))
    return p.to_frequency_notation();
  return p.to_frequency_notation() + " -> " + image_text(p);
}

struct OrbitRow {
  int srank_class;
  Orbit orbit;
};

std::vector<OrbitRow> table2_rows() {
  std::vector<OrbitRow> rows;
  for_each_partition(kWeight, [&](const Partition &p) {
    if (five_core_crank(p) != 0)
      return;
    rows.push_back({static_cast<int>(mod(srank(p), 4)), orbit(p, true)});
  });
  std::sort(rows.begin(), rows.end(), [](const OrbitRow &a, const OrbitRow &b) {
    const Partition &pa = a.orbit.members[0], &pb = b.orbit.members[0];
    auto key = [](int s, const Partition &p) { return std::make_tuple(s, phi1(p, 5).quotient_weight()); };
    auto ka = key(a.srank_class, pa), kb = key(b.srank_class, pb);
    if (ka != kb)
      return ka < kb;
    return pa < pb;
  });
  return rows;
}

} // namespace

std::string table1_text() {
  auto cells = table1_cells();
  std::ostringstream out;
  out << "table1: partitions of " << kWeight << " by srank mod 4 and St-crank mod 5\n";
  for (int s = 0; s < 2; ++s)
    for (int k = 0; k < 5; ++k) {
      out << "srank=" << 2 * s << " st-crank=" << k << ":";
      for (const auto &p : cells[s][k])
        out << ' ' << p.to_frequency_notation();
      out << '\n';
    }
  return out.str();
}

nlohmann::json table1_json() {
  auto cells = table1_cells();
  nlohmann::json arr = nlohmann::json::array();
  for (int s = 0; s < 2; ++s)
    for (int k = 0; k < 5; ++k) {
      nlohmann::json parts = nlohmann::json::array();
      for (const auto &p : cells[s][k])
        parts.push_back(to_json(p));
      arr.push_back({{"srank_mod4", 2 * s}, {"st_crank_mod5", k}, {"partitions", parts}});
    }
  return {{"table", "table1"}, {"n", kWeight}, {"cells", arr}};
}

std::string table2_text() {
  std::ostringstream out;
  out << "table2: partitions of " << kWeight
      << " in orbits of the srank-preserving orbit map; column k holds 5-core crank k mod 5\n";
  int index = 0;
  for (const auto &row : table2_rows()) {
    out << "srank=" << row.srank_class << " orbit=" << ++index << ":";
    for (int k = 0; k < 5; ++k)
      out << (k ? " | " : " ") << entry_text(row.orbit.members[k]);
    out << '\n';
  }
  return out.str();
}

nlohmann::json table2_json() {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto &row : table2_rows()) {
    nlohmann::json o = to_json(row.orbit);
    nlohmann::json images = nlohmann::json::array();
    for (const auto &m : row.orbit.members)
      images.push_back(to_json(phi1(m, 5)));
    o["images"] = images;
    arr.push_back(o);
  }
  return {{"table", "table2"}, {"n", kWeight}, {"orbits", arr}};
}

bool table1_matches_published(nlohmann::json &diff) {
  auto cells = table1_cells();
  for (int s = 0; s < 2; ++s)
    for (int k = 0; k < 5; ++k) {
      std::vector<std::string> got;
      for (const auto &p : cells[s][k])
        got.push_back(p.to_frequency_notation());
      if (got != kPublishedTable1[s][k]) {
        diff = {{"srank_mod4", 2 * s}, {"st_crank_mod5", k}, {"computed", got}, {"published", kPublishedTable1[s][k]}};
        return false;
      }
    }
  return true;
}

bool table2_matches_published(nlohmann::json &diff) {
  auto rows = table2_rows();
  if (rows.size() != kPublishedTable2.size()) {
    diff = {{"computed_rows", rows.size()}, {"published_rows", kPublishedTable2.size()}};
    return false;
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].srank_class != kPublishedTable2[r].srank_class) {
      diff = {{"row", r + 1}, {"computed_srank", rows[r].srank_class}};
      return false;
    }
    for (int k = 0; k < 5; ++k) {
      std::string got = entry_text(rows[r].orbit.members[k]);
      if (got != kPublishedTable2[r].entries[k]) {
        diff = {{"row", r + 1}, {"c5", k}, {"computed", got}, {"published", kPublishedTable2[r].entries[k]}};
        return false;
      }
    }
  }
  return true;
}

void register_table_checks(std::vector<CheckSpec> &out) {
  out.push_back({"CHK-TABLES", "Tables 1 and 2 for the partitions of 9", {}, [](CheckContext &ctx) {
                   nlohmann::json d1, d2;
                   ctx.expect("table1", table1_matches_published(d1), d1);
                   ctx.expect("table2", table2_matches_published(d2), d2);
                   std::set<Partition> seen;
                   for (const auto &row : table2_rows())
                     for (const auto &m : row.orbit.members)
                       seen.insert(m);
                   ctx.expect_eq("table2-covers-all-partitions", static_cast<long long>(seen.size()), 30LL);
                 }});
}

} // namespace tcorelab::verify
