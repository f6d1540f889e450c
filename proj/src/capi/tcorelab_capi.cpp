#include "tcorelab/tcorelab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "core/cores.hpp"
#include "core/error.hpp"
#include "core/partition.hpp"
#include "core/statistics.hpp"
#include "verifier/json_io.hpp"
#include "verifier/products.hpp"
#include "verifier/registry.hpp"
#include "verifier/tables.hpp"

struct tcl_partition {
  tcorelab::Partition value;
};

struct tcl_report {
  tcorelab::verify::CheckReport value;
};

namespace {

using namespace tcorelab;

thread_local std::string last_error;

tcl_status set_error(tcl_status s, const std::string &msg) {
  last_error = msg;
  return s;
}

// Runs f, translating exceptions into status codes.
template <class F> tcl_status guarded(F &&f) {
  try {
    last_error.clear();
    f();
    return TCL_OK;
  } catch (const Error &e) {
    return set_error(static_cast<tcl_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc &) {
    return set_error(TCL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return set_error(TCL_ERR_INTERNAL, e.what());
  }
}

char *dup_string(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (!out)
    throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

tcl_status null_arg(const char *what) { return set_error(TCL_ERR_INVALID_ARGUMENT, std::string(what) + " is null"); }

} // namespace

extern "C" {

const char *tcl_version(void) { return "1.0.0"; }

const char *tcl_last_error(void) { return last_error.c_str(); }

const char *tcl_status_name(tcl_status s) {
  switch (s) {
  case TCL_OK:
    return "ok";
  case TCL_ERR_INVALID_ARGUMENT:
    return "invalid-argument";
  case TCL_ERR_BOUND_EXCEEDED:
    return "bound-exceeded";
  case TCL_ERR_NOT_ADDABLE:
    return "not-addable";
  case TCL_ERR_NOT_A_CORE:
    return "not-a-core";
  case TCL_ERR_WRONG_RESIDUE:
    return "wrong-residue";
  case TCL_ERR_INVALID_VECTOR:
    return "invalid-vector";
  case TCL_ERR_NOT_TYPE_A:
    return "not-type-a";
  case TCL_ERR_REPEATED_EVEN_PART:
    return "repeated-even-part";
  case TCL_ERR_NON_INVERTIBLE:
    return "non-invertible";
  case TCL_ERR_UNKNOWN_ID:
    return "unknown-id";
  case TCL_ERR_OVERFLOW:
    return "overflow";
  case TCL_ERR_INTERNAL:
    return "internal";
  }
  return "unknown-status";
}

void tcl_string_free(char *s) { std::free(s); }

void tcl_set_max_n(int n) { set_enumeration_bound(n); }
int tcl_get_max_n(void) { return enumeration_bound(); }

tcl_status tcl_partition_parse(const char *csv, tcl_partition **out) {
  if (!csv || !out)
    return null_arg("argument");
  return guarded([&] { *out = new tcl_partition{parse_partition(csv)}; });
}

tcl_status tcl_partition_from_parts(const int *parts, size_t count, tcl_partition **out) {
  if (!out || (!parts && count > 0))
    return null_arg("argument");
  return guarded([&] {
    for (size_t i = 0; i < count; ++i)
      if (parts[i] < 0)
        fail(ErrorCode::invalid_argument, "negative part");
    *out = new tcl_partition{Partition::from_parts(std::span<const int>(parts, count))};
  });
}

void tcl_partition_free(tcl_partition *p) { delete p; }

int tcl_partition_weight(const tcl_partition *p) { return p ? p->value.weight() : 0; }

size_t tcl_partition_length(const tcl_partition *p) { return p ? static_cast<size_t>(p->value.length()) : 0; }

size_t tcl_partition_parts(const tcl_partition *p, int *buffer, size_t capacity) {
  if (!p || !buffer)
    return 0;
  const auto &parts = p->value.parts();
  size_t n = std::min(capacity, parts.size());
  std::copy_n(parts.begin(), n, buffer);
  return n;
}

tcl_status tcl_statistic(const tcl_partition *p, const char *name, long long *value) {
  if (!p || !name || !value)
    return null_arg("argument");
  return guarded([&] {
    auto stat = parse_statistic(name);
    if (!stat)
      fail(ErrorCode::unknown_id, std::string("unknown statistic: ") + name);
    *value = evaluate(*stat, p->value);
  });
}

tcl_status tcl_decompose_json(const tcl_partition *p, int t, char **json) {
  if (!p || !json)
    return null_arg("argument");
  return guarded([&] {
    if (t < 2)
      fail(ErrorCode::invalid_argument, "t must be at least 2");
    CoreQuotient cq = phi1(p->value, t);
    NVector nv = phi2(cq.core, t);
    nlohmann::json j = verify::to_json(cq);
    j["partition"] = verify::to_json(p->value);
    j["n_vector"] = verify::to_json(nv);
    j["quotient_weight"] = cq.quotient_weight();
    if (t == 5 && p->value.weight() % 5 == 4) {
      j["alpha"] = verify::to_json(alpha_from_n(nv));
      j["five_core_crank"] = five_core_crank(p->value);
    }
    *json = dup_string(j.dump());
  });
}

tcl_status tcl_table_render(const char *name, int as_json, char **out) {
  if (!name || !out)
    return null_arg("argument");
  return guarded([&] {
    std::string n = name;
    std::string text;
    if (n == "table1")
      text = as_json ? verify::table1_json().dump(2) + "\n" : verify::table1_text();
    else if (n == "table2")
      text = as_json ? verify::table2_json().dump(2) + "\n" : verify::table2_text();
    else
      fail(ErrorCode::unknown_id, "unknown table: " + n);
    *out = dup_string(text);
  });
}

size_t tcl_check_count(void) { return verify::registry().size(); }

const char *tcl_check_id(size_t index) {
  const auto &r = verify::registry();
  return index < r.size() ? r[index].id.c_str() : nullptr;
}

const char *tcl_check_summary(size_t index) {
  const auto &r = verify::registry();
  return index < r.size() ? r[index].summary.c_str() : nullptr;
}

int tcl_check_has_param(const char *id, const char *param) {
  if (!id || !param)
    return 0;
  const auto *spec = verify::find_check(id);
  return spec && spec->defaults.count(param) ? 1 : 0;
}

tcl_status tcl_check_run(const char *id, const char *const *param_names, const long long *param_values,
                         size_t param_count, tcl_report **out) {
  if (!id || !out || (param_count > 0 && (!param_names || !param_values)))
    return null_arg("argument");
  return guarded([&] {
    verify::CheckParams params;
    for (size_t i = 0; i < param_count; ++i) {
      if (!param_names[i])
        fail(ErrorCode::invalid_argument, "parameter name is null");
      params[param_names[i]] = param_values[i];
    }
    *out = new tcl_report{verify::run_check(id, params)};
  });
}

tcl_status tcl_check_run_all(int threads, tcl_report **out, size_t capacity, size_t *count) {
  if (!out || !count)
    return null_arg("argument");
  return guarded([&] {
    if (capacity < verify::registry().size())
      fail(ErrorCode::invalid_argument, "report array too small");
    auto reports = verify::run_all(threads);
    for (size_t i = 0; i < reports.size(); ++i)
      out[i] = new tcl_report{std::move(reports[i])};
    *count = reports.size();
  });
}

tcl_status tcl_search(const char *family, long long max_weight, tcl_report **out) {
  if (!family || !out)
    return null_arg("argument");
  return guarded([&] { *out = new tcl_report{verify::search_counterexample(family, max_weight)}; });
}

tcl_check_status tcl_report_status(const tcl_report *r) {
  if (!r)
    return TCL_CHECK_FAIL;
  switch (r->value.status) {
  case verify::CheckStatus::pass:
    return TCL_CHECK_PASS;
  case verify::CheckStatus::counterexample_found:
    return TCL_CHECK_COUNTEREXAMPLE_FOUND;
  case verify::CheckStatus::not_found:
    return TCL_CHECK_NOT_FOUND;
  default:
    return TCL_CHECK_FAIL;
  }
}

int tcl_report_ok(const tcl_report *r) { return r && r->value.ok() ? 1 : 0; }

const char *tcl_report_id(const tcl_report *r) { return r ? r->value.id.c_str() : ""; }

tcl_status tcl_report_json(const tcl_report *r, char **json) {
  if (!r || !json)
    return null_arg("argument");
  return guarded([&] { *json = dup_string(r->value.to_json().dump()); });
}

void tcl_report_free(tcl_report *r) { delete r; }

tcl_status tcl_series_json(const char *expr, int order, char **json) {
  if (!expr || !json)
    return null_arg("argument");
  return guarded([&] {
    nlohmann::json j = verify::series_expression(expr, order);
    j["expr"] = expr;
    *json = dup_string(j.dump());
  });
}

tcl_status tcl_series_names(char **out) {
  if (!out)
    return null_arg("argument");
  return guarded([&] {
    std::string s;
    for (const auto &n : verify::series_expression_names())
      s += n + "\n";
    *out = dup_string(s);
  });
}

} // extern "C"
