/* C interface to the h8ext library. Every function returning h8ext_status
 * stores a message retrievable with h8ext_last_error() on failure. Strings
 * returned through char** are owned by the caller (h8ext_string_free). */
#ifndef H8EXT_H8EXT_H
#define H8EXT_H8EXT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define H8EXT_API __declspec(dllexport)
#else
#define H8EXT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum h8ext_status {
  H8EXT_OK = 0,
  H8EXT_NONEXISTENT = 1,      /* no factorization / symbol condition fails */
  H8EXT_INVALID_INPUT = 2,
  H8EXT_INTERNAL = 3,         /* invariant violation */
  H8EXT_SEARCH_EXHAUSTED = 4, /* no parameter a below the bound */
  H8EXT_UNSOLVABLE = 5,       /* conic has no rational point */
  H8EXT_NON_NORMAL = 6,
  H8EXT_BUFFER_TOO_SMALL = 7
} h8ext_status;

H8EXT_API const char* h8ext_version(void);
H8EXT_API const char* h8ext_status_name(h8ext_status status);
H8EXT_API const char* h8ext_last_error(void);
H8EXT_API void h8ext_string_free(char* s);

/* discriminants */
H8EXT_API int h8ext_is_fundamental(int64_t d);
/* prime discriminant factors in canonical order; *count is set even when
 * the buffer is too small */
H8EXT_API h8ext_status h8ext_factor(int64_t d, int64_t* parts, size_t capacity, size_t* count);
H8EXT_API h8ext_status h8ext_factor_text(int64_t d, char** text);

/* factorization lists: H8 entries are (d1, d2, d3) in canonical order, D4
 * entries (d1, d2, d3) with d1 < d2 and d3 possibly 1 */
typedef struct h8ext_list h8ext_list;
H8EXT_API h8ext_status h8ext_h8_enumerate(int64_t d, h8ext_list** out);
H8EXT_API h8ext_status h8ext_d4_enumerate(int64_t d, h8ext_list** out);
H8EXT_API size_t h8ext_list_size(const h8ext_list* list);
H8EXT_API h8ext_status h8ext_list_get(const h8ext_list* list, size_t index, int64_t parts[3]);
H8EXT_API h8ext_status h8ext_list_text(const h8ext_list* list, size_t index, char** text);
H8EXT_API void h8ext_list_free(h8ext_list* list);

/* H8EXT_OK when (d1, d2, d3) is an H8-factorization; H8EXT_NONEXISTENT with the
 * failing condition in *reason (may be NULL) otherwise */
H8EXT_API h8ext_status h8ext_h8_check(int64_t d1, int64_t d2, int64_t d3, char** reason);
H8EXT_API h8ext_status h8ext_h8_nonexistence_reason(int64_t d, char** reason);

typedef struct h8ext_options {
  int64_t forced_a;  /* 0: search */
  int64_t max_a;
  int64_t conic_box; /* small box searched before descent; 0 disables */
} h8ext_options;
H8EXT_API void h8ext_options_init(h8ext_options* options);

/* H8 certificates */
typedef struct h8ext_h8_cert h8ext_h8_cert;
H8EXT_API h8ext_status h8ext_h8_build(int64_t d1, int64_t d2, int64_t d3, const h8ext_options* options,
                                      h8ext_h8_cert** out);
H8EXT_API h8ext_status h8ext_h8_cert_json(const h8ext_h8_cert* cert, int indent, char** json);
H8EXT_API h8ext_status h8ext_h8_cert_text(const h8ext_h8_cert* cert, char** text);
H8EXT_API h8ext_status h8ext_h8_cert_from_json(const char* json, h8ext_h8_cert** out);
/* *valid = 1 if every field recomputes; otherwise 0 and the discrepancy in
 * *reason (may be NULL) */
H8EXT_API h8ext_status h8ext_h8_cert_verify(const h8ext_h8_cert* cert, int* valid, char** reason);
H8EXT_API int h8ext_h8_cert_equal(const h8ext_h8_cert* a, const h8ext_h8_cert* b);
H8EXT_API void h8ext_h8_cert_free(h8ext_h8_cert* cert);

/* D4 certificates */
typedef struct h8ext_d4_cert h8ext_d4_cert;
H8EXT_API h8ext_status h8ext_d4_build(int64_t d1, int64_t d2, int64_t d3, const h8ext_options* options,
                                      h8ext_d4_cert** out);
H8EXT_API h8ext_status h8ext_d4_cert_json(const h8ext_d4_cert* cert, int indent, char** json);
H8EXT_API h8ext_status h8ext_d4_cert_text(const h8ext_d4_cert* cert, char** text);
H8EXT_API h8ext_status h8ext_d4_cert_from_json(const char* json, h8ext_d4_cert** out);
H8EXT_API h8ext_status h8ext_d4_cert_verify(const h8ext_d4_cert* cert, int* valid, char** reason);
H8EXT_API int h8ext_d4_cert_equal(const h8ext_d4_cert* a, const h8ext_d4_cert* b);
H8EXT_API void h8ext_d4_cert_free(h8ext_d4_cert* cert);

/* totally real criterion; totally_real is 1, 0, or -1 when d < 0 */
typedef struct h8ext_infinity {
  int applicable;
  int lhs;
  int rhs;
  int totally_real;
  int twist_may_be_needed;
} h8ext_infinity;
H8EXT_API h8ext_status h8ext_infinity_verdict(int64_t d1, int64_t d2, int64_t d3, h8ext_infinity* out);

/* the nine worked examples */
typedef struct h8ext_table2_result {
  int64_t d;
  int64_t parts[3];
  int factorization_ok;
  int unique_required;
  int64_t delta; /* 0 when no twist was found */
  int pass;
} h8ext_table2_result;
H8EXT_API size_t h8ext_table2_size(void);
H8EXT_API h8ext_status h8ext_table2_mu_text(size_t index, char** text);
H8EXT_API h8ext_status h8ext_table2_check(size_t index, const h8ext_options* options,
                                          h8ext_table2_result* out, char** detail);
H8EXT_API h8ext_status h8ext_table2_cert(size_t index, const h8ext_options* options, h8ext_h8_cert** out);

#ifdef __cplusplus
}
#endif

#endif
