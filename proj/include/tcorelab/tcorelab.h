#ifndef TCORELAB_H
#define TCORELAB_H

#include <stddef.h>

#if defined(TCL_BUILDING_LIBRARY)
#define TCL_API __attribute__((visibility("default")))
#else
#define TCL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every fallible call returns a status; on failure tcl_last_error() holds the message
   for the calling thread. */
typedef enum {
  TCL_OK = 0,
  TCL_ERR_INVALID_ARGUMENT = 1,
  TCL_ERR_BOUND_EXCEEDED = 2,
  TCL_ERR_NOT_ADDABLE = 3,
  TCL_ERR_NOT_A_CORE = 4,
  TCL_ERR_WRONG_RESIDUE = 5,
  TCL_ERR_INVALID_VECTOR = 6,
  TCL_ERR_NOT_TYPE_A = 7,
  TCL_ERR_REPEATED_EVEN_PART = 8,
  TCL_ERR_NON_INVERTIBLE = 9,
  TCL_ERR_UNKNOWN_ID = 10,
  TCL_ERR_OVERFLOW = 11,
  TCL_ERR_INTERNAL = 12
} tcl_status;

typedef enum {
  TCL_CHECK_PASS = 0,
  TCL_CHECK_FAIL = 1,
  TCL_CHECK_COUNTEREXAMPLE_FOUND = 2,
  TCL_CHECK_NOT_FOUND = 3
} tcl_check_status;

typedef struct tcl_partition tcl_partition;
typedef struct tcl_report tcl_report;

TCL_API const char *tcl_version(void);
TCL_API const char *tcl_last_error(void);
TCL_API const char *tcl_status_name(tcl_status s);
/* Strings returned through char** out-parameters are owned by the caller. */
TCL_API void tcl_string_free(char *s);

/* Global bound on the weight of enumerated partitions. */
TCL_API void tcl_set_max_n(int n);
TCL_API int tcl_get_max_n(void);

/* ---- partitions ---- */
/* "5,4,1"; the empty string is the empty partition. */
TCL_API tcl_status tcl_partition_parse(const char *csv, tcl_partition **out);
TCL_API tcl_status tcl_partition_from_parts(const int *parts, size_t count, tcl_partition **out);
TCL_API void tcl_partition_free(tcl_partition *p);
TCL_API int tcl_partition_weight(const tcl_partition *p);
TCL_API size_t tcl_partition_length(const tcl_partition *p);
/* Copies min(length, capacity) parts in nonincreasing order. */
TCL_API size_t tcl_partition_parts(const tcl_partition *p, int *buffer, size_t capacity);

/* Statistic names: srank, dyson-rank, ag-crank, st-crank, 2-quotient-rank,
   five-core-crank, bg-rank. */
TCL_API tcl_status tcl_statistic(const tcl_partition *p, const char *name, long long *value);
/* t-core, t-quotient and n-vector as JSON; for t = 5 and weight 4 mod 5 also the
   alpha-vector and the 5-core crank. */
TCL_API tcl_status tcl_decompose_json(const tcl_partition *p, int t, char **json);

/* ---- tables ---- */
/* name: "table1" or "table2". */
TCL_API tcl_status tcl_table_render(const char *name, int as_json, char **out);

/* ---- checks ---- */
TCL_API size_t tcl_check_count(void);
/* NULL past the end. */
TCL_API const char *tcl_check_id(size_t index);
TCL_API const char *tcl_check_summary(size_t index);
TCL_API int tcl_check_has_param(const char *id, const char *param);
TCL_API tcl_status tcl_check_run(const char *id, const char *const *param_names, const long long *param_values,
                                 size_t param_count, tcl_report **out);
/* Runs every check; out must have room for tcl_check_count() reports. Checks that
   throw come back as failed reports. */
TCL_API tcl_status tcl_check_run_all(int threads, tcl_report **out, size_t capacity, size_t *count);
/* family: "ab5jr". */
TCL_API tcl_status tcl_search(const char *family, long long max_weight, tcl_report **out);

TCL_API tcl_check_status tcl_report_status(const tcl_report *r);
/* Nonzero for pass and for counterexample-found. */
TCL_API int tcl_report_ok(const tcl_report *r);
TCL_API const char *tcl_report_id(const tcl_report *r);
TCL_API tcl_status tcl_report_json(const tcl_report *r, char **json);
TCL_API void tcl_report_free(tcl_report *r);

/* ---- series ---- */
/* Names: partitions, rambest, triangular, jtpa, crankgf, rsgf, p02prod, srankprod,
   lemma1, g3, g-xi-1, g-xi-i, tcore<t>, fj<j>. */
TCL_API tcl_status tcl_series_json(const char *expr, int order, char **json);
/* Newline-separated list of the names above. */
TCL_API tcl_status tcl_series_names(char **out);

#ifdef __cplusplus
}
#endif

#endif
