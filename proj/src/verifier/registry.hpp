#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "report.hpp"

namespace tcorelab::verify {

struct CheckSpec {
  std::string id;
  std::string summary;
  std::map<std::string, long long> defaults;
  std::function<void(CheckContext &)> run;
};

/// All checks in registry order.
const std::vector<CheckSpec> &registry();
const CheckSpec *find_check(const std::string &id);

/// Runs one check. Throws unknown_id, invalid_argument (unknown parameter) or
/// bound_exceeded.
CheckReport run_check(const std::string &id, const CheckParams &params = {});

/// Runs every check on up to `threads` worker threads; reports come back in registry
/// order. A check that throws yields a fail report carrying the error message.
std::vector<CheckReport> run_all(int threads = 1);

/// Smallest (n, r, j) violation for a counterexample family ("ab5jr") within
/// weights <= max_weight; not_found when the bounds hold none.
CheckReport search_counterexample(const std::string &family, long long max_weight);

// Registry pieces, one per source file.
void register_counting_checks(std::vector<CheckSpec> &out);
void register_series_checks(std::vector<CheckSpec> &out);
void register_core_checks(std::vector<CheckSpec> &out);
void register_table_checks(std::vector<CheckSpec> &out);

} // namespace tcorelab::verify
