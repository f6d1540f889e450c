#pragma once

#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

namespace tcorelab::verify {

enum class CheckStatus { pass, fail, counterexample_found, not_found };

std::string_view status_name(CheckStatus s);

/// Overrides for a check's numeric parameters (max_n, order, ...).
using CheckParams = std::map<std::string, long long>;

struct CheckReport {
  std::string id;
  std::map<std::string, long long> params;
  CheckStatus status = CheckStatus::pass;
  /// Cases verified per claim, in claim-name order.
  std::map<std::string, long long> claims;
  /// Offending case for fail, the witness for counterexample_found; null otherwise.
  nlohmann::json witness;
  /// Extra deterministic findings (e.g. tallies that are reported, not asserted).
  nlohmann::json findings = nlohmann::json::object();

  /// Checks with expected counterexamples (CHK-AB5JR) pass when one is found.
  bool ok() const;
  nlohmann::json to_json() const;
};

/// Accumulates claim outcomes for one check run. The first failure is kept as witness.
class CheckContext {
public:
  CheckContext(std::string id, std::map<std::string, long long> defaults, const CheckParams &overrides);

  long long param(const std::string &name) const;

  /// Records one case of a claim.
  void expect(const std::string &claim, bool ok, const nlohmann::json &witness = nullptr);
  /// Records an equality, adding both sides to the witness on mismatch.
  template <class A, class B>
  void expect_eq(const std::string &claim, const A &actual, const B &expected, nlohmann::json where = nullptr) {
    if (actual == expected) {
      expect(claim, true);
      return;
    }
    nlohmann::json w = where.is_null() ? nlohmann::json::object() : std::move(where);
    w["actual"] = actual;
    w["expected"] = expected;
    expect(claim, false, w);
  }
  bool failed() const noexcept { return report_.status == CheckStatus::fail; }
  nlohmann::json &findings() { return report_.findings; }
  CheckReport &report() { return report_; }
  CheckReport finish() { return std::move(report_); }

private:
  CheckReport report_;
};

} // namespace tcorelab::verify
