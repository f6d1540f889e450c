#include "report.hpp"

#include "../core/error.hpp"

namespace tcorelab::verify {

std::string_view status_name(CheckStatus s) {
  switch (s) {
  case CheckStatus::pass:
    return "pass";
  case CheckStatus::fail:
    return "fail";
  case CheckStatus::counterexample_found:
    return "counterexample-found";
  case CheckStatus::not_found:
    return "not-found";
  }
  return "?";
}

bool CheckReport::ok() const {
  return status == CheckStatus::pass || status == CheckStatus::counterexample_found;
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json j;
  j["id"] = id;
  j["params"] = params;
  j["status"] = status_name(status);
  j["claims"] = claims;
  j["witness"] = witness;
  if (!findings.empty())
    j["findings"] = findings;
  return j;
}

CheckContext::CheckContext(std::string id, std::map<std::string, long long> defaults, const CheckParams &overrides) {
  report_.id = std::move(id);
  for (const auto &[k, v] : overrides) {
    if (!defaults.count(k))
      fail(ErrorCode::invalid_argument, "check " + report_.id + " has no parameter '" + k + "'");
    defaults[k] = v;
  }
  report_.params = std::move(defaults);
}

long long CheckContext::param(const std::string &name) const {
  auto it = report_.params.find(name);
  if (it == report_.params.end())
    fail(ErrorCode::internal, "undeclared parameter " + name);
  return it->second;
}

void CheckContext::expect(const std::string &claim, bool ok, const nlohmann::json &witness) {
  ++report_.claims[claim];
  if (ok || report_.status == CheckStatus::fail)
    return;
  report_.status = CheckStatus::fail;
  nlohmann::json w = witness.is_null() ? nlohmann::json::object() : witness;
  if (w.is_object())
    w["claim"] = claim;
  report_.witness = w;
}

} // namespace tcorelab::verify
