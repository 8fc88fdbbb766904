/*
 * C interface to the recollement verification library.
 *
 * All objects are opaque handles created and destroyed here. Functions
 * return RCL_OK (0) on success; on failure they return a nonzero status and
 * rcl_last_error() carries a human-readable message for the calling thread.
 * Strings returned by accessor functions are owned by the handle they were
 * read from and stay valid until it is freed.
 */

#ifndef RECOLLEMENT_H
#define RECOLLEMENT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rcl_status {
    RCL_OK = 0,
    RCL_ERR_BAD_ARGUMENT = 1,
    RCL_ERR_NOT_PRIME = 2,
    RCL_ERR_NON_ASSOCIATIVE = 3,
    RCL_ERR_BAD_UNIT = 4,
    RCL_ERR_NOT_FINITE_DIMENSIONAL = 5,
    RCL_ERR_CHARACTERISTIC_TOO_SMALL = 6,
    RCL_ERR_BUDGET_EXCEEDED = 7,
    RCL_ERR_ALGEBRA_MISMATCH = 8,
    RCL_ERR_NOT_IDEMPOTENT = 9,
    RCL_ERR_NOT_AN_IDEAL = 10,
    RCL_ERR_NOT_IDEMPOTENT_IDEAL = 11,
    RCL_ERR_WRONG_CATEGORY = 12,
    RCL_ERR_NO_SPLIT_SURJECTION = 13,
    RCL_ERR_INTERNAL_INCONSISTENCY = 14,
    RCL_ERR_PARSE = 15,
    RCL_ERR_NOT_FOUND = 16,
    RCL_ERR_IO = 17,
    RCL_ERR_UNKNOWN = 18
} rcl_status;

typedef struct rcl_algebra rcl_algebra;
typedef struct rcl_options rcl_options;
typedef struct rcl_report rcl_report;

const char* rcl_version(void);

/* Thread-local message for the most recent failing call. */
const char* rcl_last_error(void);

/* ---- algebras ---- */

size_t rcl_builtin_count(void);
const char* rcl_builtin_name(size_t index);

rcl_status rcl_algebra_builtin(const char* name, rcl_algebra** out);
rcl_status rcl_algebra_from_file(const char* path, rcl_algebra** out);
rcl_status rcl_algebra_from_text(const char* document, rcl_algebra** out);
void rcl_algebra_free(rcl_algebra* a);

int rcl_algebra_dim(const rcl_algebra* a);
int rcl_algebra_characteristic(const rcl_algebra* a);
const char* rcl_algebra_basis_label(const rcl_algebra* a, size_t index);

/* ---- run options ---- */

rcl_options* rcl_options_new(void);
void rcl_options_free(rcl_options* o);
rcl_status rcl_options_set_idempotent(rcl_options* o, const char* expr);
rcl_status rcl_options_set_ideal(rcl_options* o, const char* generator_list);
rcl_status rcl_options_set_dim_bound(rcl_options* o, int dim_bound);
rcl_status rcl_options_set_seed(rcl_options* o, uint64_t seed);
rcl_status rcl_options_set_mode(rcl_options* o, const char* mode);

/* ---- commands ----
 * command is one of: analyze | jans-check | verify-recollement | kuhn-demo |
 * ideals | ttf. options may be NULL for defaults. */
rcl_status rcl_run(const rcl_algebra* a, const char* command,
                   const rcl_options* options, rcl_report** out);

/* ---- reports ---- */

const char* rcl_report_json(const rcl_report* r);
size_t rcl_report_check_count(const rcl_report* r);
size_t rcl_report_failed_count(const rcl_report* r);
const char* rcl_report_check_name(const rcl_report* r, size_t index);
const char* rcl_report_check_claim(const rcl_report* r, size_t index);
int rcl_report_check_passed(const rcl_report* r, size_t index);
void rcl_report_free(rcl_report* r);

#ifdef __cplusplus
}
#endif

#endif /* RECOLLEMENT_H */
