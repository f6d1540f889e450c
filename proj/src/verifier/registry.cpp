#include "registry.hpp"

#include <atomic>
#include <thread>

#include "../core/error.hpp"

namespace tcorelab::verify {

const std::vector<CheckSpec> &registry() {
  static const std::vector<CheckSpec> specs = [] {
    std::vector<CheckSpec> v;
    register_counting_checks(v);
    register_series_checks(v);
    register_core_checks(v);
    register_table_checks(v);
    return v;
  }();
  return specs;
}

const CheckSpec *find_check(const std::string &id) {
  for (const auto &spec : registry())
    if (spec.id == id)
      return &spec;
  return nullptr;
}

CheckReport run_check(const std::string &id, const CheckParams &params) {
  const CheckSpec *spec = find_check(id);
  if (!spec)
    fail(ErrorCode::unknown_id, "unknown check id " + id);
  CheckContext ctx(spec->id, spec->defaults, params);
  spec->run(ctx);
  return ctx.finish();
}

std::vector<CheckReport> run_all(int threads) {
  const auto &specs = registry();
  std::vector<CheckReport> reports(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      try {
        reports[i] = run_check(specs[i].id);
      } catch (const std::exception &e) {
        CheckReport r;
        r.id = specs[i].id;
        r.params = specs[i].defaults;
        r.status = CheckStatus::fail;
        r.witness = {{"error", e.what()}};
        reports[i] = std::move(r);
      }
    }
  };
  threads = std::max(1, threads);
  std::vector<std::thread> pool;
  for (int k = 1; k < threads; ++k)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();
  return reports;
}

} // namespace tcorelab::verify
