#ifndef OGRPOS_OGRPOS_H
#define OGRPOS_OGRPOS_H

#include <stddef.h>
#include <stdint.h>

#if defined(OGRPOS_BUILDING)
#define OGRPOS_API __attribute__((visibility("default")))
#else
#define OGRPOS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    OGR_OK = 0,
    OGR_ERR_ARGUMENT,
    OGR_ERR_DIMENSION,
    OGR_ERR_NOT_SKEW,
    OGR_ERR_DOMAIN,
    OGR_ERR_NOT_IN_CHART,
    OGR_ERR_LIMIT,
    OGR_ERR_NOT_RECOGNIZED,
    OGR_ERR_INTERNAL,
    OGR_ERR_NULL
} ogr_status;

typedef enum {
    OGR_VERDICT_POSITIVE = 0,
    OGR_VERDICT_NONNEGATIVE_BOUNDARY,
    OGR_VERDICT_NOT_NONNEGATIVE
} ogr_verdict;

typedef struct ogr_skew ogr_skew;
typedef struct ogr_minors ogr_minors;
typedef struct ogr_nonneg ogr_nonneg;
typedef struct ogr_pfaffs ogr_pfaffs;
typedef struct ogr_strings ogr_strings;

OGRPOS_API const char* ogr_version(void);
OGRPOS_API const char* ogr_status_string(ogr_status s);
/* Message of the last failed call on this thread; empty if none. */
OGRPOS_API const char* ogr_last_error(void);

/* Strings handed out by the library are released with ogr_string_free. */
OGRPOS_API void ogr_string_free(char* s);

/* entries: n*n rationals "p" or "p/q", row-major. */
OGRPOS_API ogr_status ogr_skew_create(int n, const char* const* entries, ogr_skew** out);
OGRPOS_API void ogr_skew_free(ogr_skew* a);
OGRPOS_API int ogr_skew_n(const ogr_skew* a);
/* 1-based indices. */
OGRPOS_API ogr_status ogr_skew_entry(const ogr_skew* a, int i, int j, char** out);

OGRPOS_API ogr_status ogr_check_positive(const ogr_skew* a, int* positive, ogr_minors** table);
OGRPOS_API size_t ogr_minors_count(const ogr_minors* m);
OGRPOS_API ogr_status ogr_minors_get(const ogr_minors* m, size_t idx, int* j, int* k, char** value);
OGRPOS_API void ogr_minors_free(ogr_minors* m);

OGRPOS_API ogr_status ogr_check_nonnegative(const ogr_skew* a, ogr_nonneg** out);
OGRPOS_API ogr_verdict ogr_nonneg_verdict(const ogr_nonneg* r);
OGRPOS_API size_t ogr_nonneg_count(const ogr_nonneg* r);
/* vanishes is set when the perturbed numerator is identically zero; degree and coeff are then unset. */
OGRPOS_API ogr_status ogr_nonneg_get(const ogr_nonneg* r, size_t idx, int* j, int* k, int* vanishes, int* degree,
                                     char** coeff);
/* Returns 1 and fills (j, k) when a witness exists. */
OGRPOS_API int ogr_nonneg_witness(const ogr_nonneg* r, int* j, int* k);
OGRPOS_API void ogr_nonneg_free(ogr_nonneg* r);

OGRPOS_API ogr_status ogr_pfaffians(const ogr_skew* a, ogr_pfaffs** out);
OGRPOS_API size_t ogr_pfaffs_count(const ogr_pfaffs* p);
/* subset is written to buf (capacity cap); size receives its length. */
OGRPOS_API ogr_status ogr_pfaffs_get(const ogr_pfaffs* p, size_t idx, int* buf, size_t cap, size_t* size, int* sign,
                                     char** pf, char** spinor);
/* strict: every signed Pfaffian must be > 0, otherwise >= 0. */
OGRPOS_API ogr_status ogr_sign_pattern(const ogr_skew* a, int strict, int* ok, int* buf, size_t cap, size_t* size);
OGRPOS_API void ogr_pfaffs_free(ogr_pfaffs* p);

OGRPOS_API ogr_status ogr_recover_params(const ogr_skew* a, ogr_strings** out);
/* count positive rationals p/q, p and q uniform in [1, 2^16]. */
OGRPOS_API ogr_status ogr_random_params(size_t count, uint64_t seed, ogr_strings** out);
OGRPOS_API ogr_status ogr_sample(int n, const char* const* t, size_t count, ogr_skew** out);

/* Cell labels are "a;b": the windows of v^-1 and w^-1. */
OGRPOS_API ogr_status ogr_cell_param_count(const char* label, int* count);
OGRPOS_API ogr_status ogr_sample_cell(const char* label, const char* const* t, size_t count, ogr_skew** out);
OGRPOS_API ogr_status ogr_identify_cell(const ogr_skew* a, int allow_large, char** label);
OGRPOS_API ogr_status ogr_cells_in_chart(int n, int allow_large, ogr_strings** out);

/* label may be NULL for the top cell. */
OGRPOS_API ogr_status ogr_lgv_export(int n, const char* label, char** dot);

OGRPOS_API size_t ogr_strings_count(const ogr_strings* s);
OGRPOS_API const char* ogr_strings_get(const ogr_strings* s, size_t idx);
OGRPOS_API void ogr_strings_free(ogr_strings* s);

#ifdef __cplusplus
}
#endif

#endif
