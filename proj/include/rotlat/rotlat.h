#ifndef ROTLAT_H
#define ROTLAT_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(ROTLAT_BUILDING)
#    define ROTLAT_API __declspec(dllexport)
#  else
#    define ROTLAT_API __declspec(dllimport)
#  endif
#else
#  define ROTLAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rotlat_status {
    ROTLAT_OK = 0,
    ROTLAT_E_UNSUPPORTED_CONDUCTOR = 1,
    ROTLAT_E_BAD_PARAM = 2,
    ROTLAT_E_PARAMS_MISMATCH = 3,
    ROTLAT_E_ZERO_ELEMENT = 4,
    ROTLAT_E_SINGULAR_BASIS = 5,
    ROTLAT_E_ZERO_GENERATOR = 6,
    ROTLAT_E_NOT_TOTALLY_POSITIVE = 7,
    ROTLAT_E_NON_INTEGRAL_GRAM = 8,
    ROTLAT_E_UNCERTIFIED_MINIMUM = 9,
    ROTLAT_E_INVARIANT_VIOLATION = 10,
    ROTLAT_E_INVALID_ARGUMENT = 11,
    ROTLAT_E_INTERNAL = 12
} rotlat_status;

typedef enum rotlat_family {
    ROTLAT_FAMILY_D_POW2_A = 1,
    ROTLAT_FAMILY_D_POW2_B = 2,
    ROTLAT_FAMILY_D_PRIME = 3,
    ROTLAT_FAMILY_Z_POW2 = 4,
    ROTLAT_FAMILY_Z_PRIME = 5
} rotlat_family;

ROTLAT_API const char* rotlat_version(void);
ROTLAT_API const char* rotlat_status_string(rotlat_status status);

/* Message of the last failed call on this thread; "" if none. */
ROTLAT_API const char* rotlat_last_error(void);

ROTLAT_API rotlat_status rotlat_family_from_name(const char* name, rotlat_family* out);
ROTLAT_API const char* rotlat_family_name(rotlat_family family);

/* Field data for conductor m; strings stay valid until the next call on this thread. */
ROTLAT_API rotlat_status rotlat_field_degree(int m, int* out);
ROTLAT_API rotlat_status rotlat_field_discriminant(int m, const char** out);

/* Lattice handles */

typedef struct rotlat_lattice rotlat_lattice;

ROTLAT_API rotlat_status rotlat_lattice_create(rotlat_family family, int param, rotlat_lattice** out);
ROTLAT_API void rotlat_lattice_destroy(rotlat_lattice* lattice);

ROTLAT_API int rotlat_lattice_dim(const rotlat_lattice* lattice);
ROTLAT_API int rotlat_lattice_conductor(const rotlat_lattice* lattice);
ROTLAT_API long rotlat_lattice_scale(const rotlat_lattice* lattice);
ROTLAT_API const char* rotlat_lattice_alpha(const rotlat_lattice* lattice);

/* Row-major n*n generator; len must be at least n*n. */
ROTLAT_API rotlat_status rotlat_lattice_generator(const rotlat_lattice* lattice, double* out, size_t len);

/* Exact Gram entry as a decimal string owned by the handle. */
ROTLAT_API rotlat_status rotlat_lattice_gram_entry(const rotlat_lattice* lattice, size_t i, size_t j,
                                                   const char** out);

/* Determinant of the Gram matrix, owned by the handle. */
ROTLAT_API const char* rotlat_lattice_gram_det(const rotlat_lattice* lattice);

/* Metrics */

typedef struct rotlat_metrics rotlat_metrics;

typedef struct rotlat_metrics_values {
    int family;
    int param;
    int n;
    int coeff_bound;
    double d_p_min;
    double d_p_rel;
    double d_p_rel_log2;
    double d_p_rel_nth_root;
    double center_density;
    int diversity_ok;
    double diversity_min_coordinate;
} rotlat_metrics_values;

typedef enum rotlat_metrics_field {
    ROTLAT_METRIC_DET = 0,
    ROTLAT_METRIC_MIN_NORM_SQ = 1,
    ROTLAT_METRIC_ALPHA_NORM = 2,
    ROTLAT_METRIC_MIN_ALGEBRAIC_NORM = 3,
    ROTLAT_METRIC_D_P_MIN_SQ = 4,
    ROTLAT_METRIC_D_P_REL_SQ = 5,
    ROTLAT_METRIC_D_P_REL_EXACT = 6
} rotlat_metrics_field;

/* coeff_bound <= 0 selects the default (3 for n <= 16, 2 above). */
ROTLAT_API rotlat_status rotlat_metrics_compute(const rotlat_lattice* lattice, int coeff_bound,
                                                rotlat_metrics** out);
ROTLAT_API void rotlat_metrics_destroy(rotlat_metrics* metrics);
ROTLAT_API rotlat_status rotlat_metrics_get(const rotlat_metrics* metrics, rotlat_metrics_values* out);

/* Exact values as strings owned by the handle: integers, "a/b" rationals, or
   "2^(e) * p^(f)" for the exact form of d_p_rel. */
ROTLAT_API const char* rotlat_metrics_string(const rotlat_metrics* metrics, rotlat_metrics_field field);

/* Verification */

typedef struct rotlat_verify_report rotlat_verify_report;

typedef struct rotlat_check {
    const char* name;
    const char* observed;
    const char* expected;
    const char* line;
    int passed;
} rotlat_check;

ROTLAT_API rotlat_status rotlat_verify_run(rotlat_family family, int param, int coeff_bound,
                                           rotlat_verify_report** out);
ROTLAT_API void rotlat_verify_destroy(rotlat_verify_report* report);
ROTLAT_API size_t rotlat_verify_count(const rotlat_verify_report* report);
ROTLAT_API rotlat_status rotlat_verify_check(const rotlat_verify_report* report, size_t i, rotlat_check* out);
ROTLAT_API int rotlat_verify_all_passed(const rotlat_verify_report* report);

/* Tables */

typedef struct rotlat_table_row {
    int param;
    int n;
    double values[4];
    char alpha_norm[64];
    char alpha_text[128];
} rotlat_table_row;

ROTLAT_API int rotlat_table_param_allowed(int id, int param);

/* Writes up to cap default parameters; returns how many the table has, 0 for an unknown id. */
ROTLAT_API size_t rotlat_table_default_params(int id, int* out, size_t cap);
ROTLAT_API rotlat_status rotlat_table_row_compute(int id, int param, rotlat_table_row* out);
ROTLAT_API rotlat_status rotlat_format_table_value(double value, char* buf, size_t cap);

#ifdef __cplusplus
}
#endif

#endif
