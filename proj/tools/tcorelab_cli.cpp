// Command-line front end; talks to the library only through the C API.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tcorelab/tcorelab.h"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Owned {
  char *s = nullptr;
  ~Owned() { tcl_string_free(s); }
};

int report_error(tcl_status s) {
  std::cerr << "error: " << tcl_status_name(s) << ": " << tcl_last_error() << "\n";
  return (s == TCL_ERR_INVALID_ARGUMENT || s == TCL_ERR_UNKNOWN_ID) ? kExitUsage : kExitFail;
}

// Prints the report as one JSON line and returns whether it counts as a pass.
bool emit(tcl_report *r) {
  Owned js;
  if (tcl_report_json(r, &js.s) == TCL_OK)
    std::cout << js.s << "\n";
  return tcl_report_ok(r) != 0;
}

const char *status_word(tcl_check_status s) {
  switch (s) {
  case TCL_CHECK_PASS:
    return "pass";
  case TCL_CHECK_COUNTEREXAMPLE_FOUND:
    return "counterexample-found";
  case TCL_CHECK_NOT_FOUND:
    return "not-found";
  default:
    return "fail";
  }
}

int with_partition(const std::string &csv, auto &&body) {
  tcl_partition *p = nullptr;
  if (tcl_status s = tcl_partition_parse(csv.c_str(), &p); s != TCL_OK)
    return report_error(s);
  int rc = body(p);
  tcl_partition_free(p);
  return rc;
}

} // namespace

int main(int argc, char **argv) {
  if (const char *env = std::getenv("TCORELAB_MAX_N")) {
    char *end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 0 || v > 100000) {
      std::cerr << "error: TCORELAB_MAX_N must be a non-negative integer\n";
      return kExitUsage;
    }
    tcl_set_max_n(static_cast<int>(v));
  }

  CLI::App app{"t-core partition statistics verifier"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tcl_version());

  std::string stat_name, csv;
  auto *stat = app.add_subcommand("stat", "evaluate a partition statistic");
  stat->add_option("--stat", stat_name, "statistic name")->required();
  stat->add_option("--partition", csv, "parts, comma separated")->required();

  int t = 0;
  auto *decomp = app.add_subcommand("decompose", "t-core, t-quotient and n-vector");
  decomp->add_option("--t", t)->required();
  decomp->add_option("--partition", csv)->required();

  std::string table_name;
  bool table_json = false;
  auto *table = app.add_subcommand("table", "render a partition table for n = 9");
  table->add_option("--name", table_name)->required()->check(CLI::IsMember({"table1", "table2"}));
  table->add_flag("--json", table_json);

  std::string check_id;
  long long max_n = -1, order = -1;
  bool all = false;
  int threads = 0;
  auto *verify = app.add_subcommand("verify", "run registry checks");
  auto *check_opt = verify->add_option("--check", check_id, "registry id");
  auto *all_opt = verify->add_flag("--all", all, "run every check");
  auto *maxn_opt = verify->add_option("--max-n", max_n);
  auto *order_opt = verify->add_option("--order", order);
  verify->add_option("--threads", threads, "worker threads (0 = hardware)")->check(CLI::NonNegativeNumber);
  check_opt->excludes(all_opt);
  maxn_opt->excludes(all_opt);
  order_opt->excludes(all_opt);

  std::string family;
  long long max_weight = 0;
  auto *search = app.add_subcommand("search", "counterexample search");
  search->add_option("--family", family)->required();
  search->add_option("--max-weight", max_weight)->required();

  std::string expr;
  int series_order = 0;
  auto *series = app.add_subcommand("series", "print a named series");
  series->add_option("--expr", expr)->required();
  series->add_option("--order", series_order)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  if (stat->parsed()) {
    return with_partition(csv, [&](tcl_partition *p) {
      long long v = 0;
      if (tcl_status s = tcl_statistic(p, stat_name.c_str(), &v); s != TCL_OK)
        return report_error(s);
      std::cout << "{\"stat\":\"" << stat_name << "\",\"value\":" << v << "}\n";
      return 0;
    });
  }

  if (decomp->parsed()) {
    return with_partition(csv, [&](tcl_partition *p) {
      Owned js;
      if (tcl_status s = tcl_decompose_json(p, t, &js.s); s != TCL_OK)
        return report_error(s);
      std::cout << js.s << "\n";
      return 0;
    });
  }

  if (table->parsed()) {
    Owned text;
    if (tcl_status s = tcl_table_render(table_name.c_str(), table_json ? 1 : 0, &text.s); s != TCL_OK)
      return report_error(s);
    std::fputs(text.s, stdout);
    return 0;
  }

  if (verify->parsed()) {
    if (all) {
      std::vector<tcl_report *> reports(tcl_check_count(), nullptr);
      size_t count = 0;
      if (tcl_status s = tcl_check_run_all(threads, reports.data(), reports.size(), &count); s != TCL_OK)
        return report_error(s);
      size_t passed = 0;
      for (size_t i = 0; i < count; ++i) {
        bool ok = emit(reports[i]);
        passed += ok;
        std::cerr << (ok ? "ok   " : "FAIL ") << tcl_report_id(reports[i]) << " "
                  << status_word(tcl_report_status(reports[i])) << "\n";
        tcl_report_free(reports[i]);
      }
      std::cerr << passed << "/" << count << " checks passed\n";
      return passed == count ? 0 : kExitFail;
    }
    if (check_id.empty()) {
      std::cerr << "error: verify needs --check <ID> or --all\n";
      return kExitUsage;
    }
    std::vector<const char *> names;
    std::vector<long long> values;
    auto add = [&](const char *name, long long v) {
      if (!tcl_check_has_param(check_id.c_str(), name)) {
        std::cerr << "error: " << check_id << " has no parameter " << name << "\n";
        return false;
      }
      names.push_back(name);
      values.push_back(v);
      return true;
    };
    if (*maxn_opt && !add("max_n", max_n))
      return kExitUsage;
    if (*order_opt && !add("order", order))
      return kExitUsage;
    tcl_report *r = nullptr;
    if (tcl_status s = tcl_check_run(check_id.c_str(), names.data(), values.data(), names.size(), &r); s != TCL_OK)
      return report_error(s);
    bool ok = emit(r);
    std::cerr << (ok ? "ok   " : "FAIL ") << tcl_report_id(r) << " " << status_word(tcl_report_status(r)) << "\n";
    tcl_report_free(r);
    return ok ? 0 : kExitFail;
  }

  if (search->parsed()) {
    tcl_report *r = nullptr;
    if (tcl_status s = tcl_search(family.c_str(), max_weight, &r); s != TCL_OK)
      return report_error(s);
    emit(r);
    tcl_check_status st = tcl_report_status(r);
    std::cerr << family << ": " << status_word(st) << "\n";
    tcl_report_free(r);
    return st == TCL_CHECK_COUNTEREXAMPLE_FOUND ? 0 : kExitFail;
  }

  if (series->parsed()) {
    Owned js;
    if (tcl_status s = tcl_series_json(expr.c_str(), series_order, &js.s); s != TCL_OK)
      return report_error(s);
    std::cout << js.s << "\n";
    return 0;
  }
  return kExitUsage;
}
