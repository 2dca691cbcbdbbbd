/*
 * C interface to the building-energy accounting engine.
 *
 * A session owns the loaded inputs (balance sheets, non-commercial records,
 * conversion table, policy) and the text of the last rendered output. All
 * functions return a bec_status; on failure bec_last_error() describes the
 * problem. Sessions are not thread-safe; use one per thread.
 */
#ifndef BEC_BEC_H
#define BEC_BEC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(BEC_BUILDING_LIBRARY)
#    define BEC_API __declspec(dllexport)
#  else
#    define BEC_API __declspec(dllimport)
#  endif
#else
#  define BEC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bec_status {
  BEC_OK = 0,
  BEC_AUDIT_FAILED,
  BEC_E_PARSE,
  BEC_E_UNKNOWN_SECTOR,
  BEC_E_UNKNOWN_FUEL,
  BEC_E_UNKNOWN_UNIT,
  BEC_E_DUPLICATE_CELL,
  BEC_E_DUPLICATE_YEAR,
  BEC_E_NEGATIVE_QUANTITY,
  BEC_E_RECONCILIATION,
  BEC_E_DEDUCTION_EXCEEDS_TOTAL,
  BEC_E_MISSING_SECTOR,
  BEC_E_MISSING_CELL,
  BEC_E_MISSING_HEAT_DATA,
  BEC_E_YEAR_MISMATCH,
  BEC_E_INVALID_DENOMINATOR,
  BEC_E_EMPTY_LEDGER,
  BEC_E_EMPTY_REPORT,
  BEC_E_UNKNOWN_REPORT_KIND,
  BEC_E_INVALID_POLICY,
  BEC_E_INVALID_YEAR_RANGE,
  BEC_E_ARITHMETIC,
  BEC_E_IO,
  BEC_E_INVALID_ARGUMENT,
  BEC_E_INTERNAL
} bec_status;

typedef struct bec_session bec_session;

/* Ledger values in hundredths of Mtce. */
typedef struct bec_ledger_row {
  int32_t year;
  int64_t residential_cents;
  int64_t public_cents;
  int64_t noncommercial_cents;
  int64_t commercial_total_cents;
  int64_t total_cents;
} bec_ledger_row;

/* Class name of a status, e.g. "UnknownSector". */
BEC_API const char* bec_status_name(bec_status status);

/* Process exit code for a status: 0 ok, 1 audit failure, 2 input error,
 * 3 missing data, 4 internal error. */
BEC_API int bec_status_exit_code(bec_status status);

BEC_API bec_status bec_session_create(bec_session** out);
BEC_API void bec_session_destroy(bec_session* session);

/* Message of the most recent failure on this session ("" if none). */
BEC_API const char* bec_last_error(const bec_session* session);

/* Text produced by the most recent successful command ("" if none). */
BEC_API const char* bec_last_output(const bec_session* session);

/* Inputs. Units must be loaded before the balance file they apply to. */
BEC_API bec_status bec_load_units(bec_session* session, const char* path);
BEC_API bec_status bec_load_balance(bec_session* session, const char* path);
BEC_API bec_status bec_load_noncommercial(bec_session* session, const char* path);

/* Preset name (eq3-default, eq2-legacy, wang2007, naive-heating-added) or a
 * policy file path. Default is eq3-default. */
BEC_API bec_status bec_set_policy(bec_session* session, const char* preset_or_path);

/* Restricts every command to [first, last]. */
BEC_API bec_status bec_set_years(bec_session* session, int first, int last);

/* Audit tolerance in Mtce, decimal text such as "0.01". */
BEC_API bec_status bec_set_tolerance(bec_session* session, const char* mtce);

/* Parses and reconciles only; output summarises the loaded years. */
BEC_API bec_status bec_ingest_check(bec_session* session);

/* Computes ledgers; writes <out_dir>/ledger.csv when out_dir is non-null. */
BEC_API bec_status bec_compute(bec_session* session, const char* out_dir);

/* Number of ledger rows from the last bec_compute, and row access. */
BEC_API bec_status bec_ledger_count(const bec_session* session, size_t* count);
BEC_API bec_status bec_ledger_get(const bec_session* session, size_t index, bec_ledger_row* row);

/* Heat balance and double-count audit of every selected year; writes
 * <out_dir>/audit.csv when out_dir is non-null. Returns BEC_AUDIT_FAILED if
 * any report fails. */
BEC_API bec_status bec_audit(bec_session* session, const char* out_dir);

/* Per-year comparison of two policies; writes <out_dir>/compare.csv when
 * out_dir is non-null. */
BEC_API bec_status bec_compare(bec_session* session, const char* policy_a, const char* policy_b,
                               const char* out_dir);

/* Comma-separated outputs (ledger-table, composition, share-of-final,
 * public-detail, noncommercial-detail, audit) or NULL for all but audit. */
BEC_API bec_status bec_report(bec_session* session, const char* outputs, const char* out_dir);

#ifdef __cplusplus
}
#endif

#endif /* BEC_BEC_H */
