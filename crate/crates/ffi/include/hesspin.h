#ifndef HESSPIN_H
#define HESSPIN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

#define HP_OK 0

// A required pointer argument was null.
#define HP_ERR_NULL -1

// An argument failed validation.
#define HP_ERR_INVALID_INPUT -2

// The permutation is not a fixed point of the requested variety.
#define HP_ERR_NOT_FIXED_POINT -3

// The output buffer is too small; `*len_out` holds the required length.
#define HP_ERR_BUFFER_TOO_SMALL -4

// Unexpected failure inside the library.
#define HP_ERR_INTERNAL -5

// A panic was caught at the boundary.
#define HP_ERR_PANIC -6

// A Hessenberg function `h: [n] -> [n]`.
typedef struct HpHessenberg HpHessenberg;

// A permutation of `1..=n`.
typedef struct HpPermutation HpPermutation;

// Outcome of [`hp_verify_pinball`].
typedef struct HpPinballSummary {
  size_t fixed_points;
  bool injective;
  bool bruhat_decreasing;
  bool betti_match;
} HpPinballSummary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static NUL-terminated string.
const char *hp_version(void);

// Length in bytes of the last error message on this thread, 0 if none.
size_t hp_last_error_length(void);

// Copies the last error message (NUL-terminated) into `buf`. Returns the
// number of bytes written excluding the terminator, or
// `HP_ERR_BUFFER_TOO_SMALL` / `HP_ERR_NULL`.
int32_t hp_last_error_message(char *buf, size_t cap);

// Parses one-line notation such as `"43215"` or `"4,3,2,1,5"`.
int32_t hp_permutation_parse(const char *s, struct HpPermutation **out_perm);

int32_t hp_permutation_from_one_line(const uint32_t *values,
                                     size_t n,
                                     struct HpPermutation **out_perm);

void hp_permutation_free(struct HpPermutation *p);

// `n` for a permutation of `1..=n`; 0 for a null handle.
size_t hp_permutation_size(const struct HpPermutation *p);

int32_t hp_permutation_one_line(const struct HpPermutation *p,
                                uint32_t *buf,
                                size_t cap,
                                size_t *len_out);

int32_t hp_permutation_to_string(const struct HpPermutation *p,
                                 char *buf,
                                 size_t cap,
                                 size_t *len_out);

// Coxeter length (number of inversions).
int32_t hp_permutation_length(const struct HpPermutation *p, size_t *len_out);

// `*result = v <= w` in Bruhat order.
int32_t hp_bruhat_leq(const struct HpPermutation *v, const struct HpPermutation *w, bool *result);

// Parses a comma-separated Hessenberg function such as `"3,3,4,5,5"`.
int32_t hp_hessenberg_parse(const char *s, struct HpHessenberg **out_h);

// The function `(3,3,4,5,...,n,n)`; requires `n >= 4`.
int32_t hp_hessenberg_334(size_t n, struct HpHessenberg **out_h);

void hp_hessenberg_free(struct HpHessenberg *h);

// Rolldown of the fixed point `w` in the regular nilpotent Hessenberg
// variety of `h`. The result is a new handle owned by the caller.
int32_t hp_rolldown(const struct HpPermutation *w,
                    const struct HpHessenberg *h,
                    struct HpPermutation **out_perm);

// Dimension of the affine cell of the fixed point `w`.
int32_t hp_degree(const struct HpPermutation *w, const struct HpHessenberg *h, size_t *degree_out);

// Betti numbers `b_0, b_1, ...` of the regular nilpotent Hessenberg variety.
int32_t hp_betti_numbers(const struct HpHessenberg *h, size_t *buf, size_t cap, size_t *len_out);

// Runs the pinball checks. `lambda` is a comma-separated partition of `n`,
// or null for the single row.
int32_t hp_verify_pinball(const struct HpHessenberg *h,
                          const char *lambda,
                          struct HpPinballSummary *summary);

// `p_v(w) = c * t^d`. The decimal digits of `c` are written to `coeff_buf`
// and `d` to `*degree_out`. Zero is reported as `"0"` with degree 0.
int32_t hp_p_restriction(const struct HpPermutation *v,
                         const struct HpPermutation *w,
                         char *coeff_buf,
                         size_t cap,
                         size_t *len_out,
                         uint32_t *degree_out);

// Closed-form value of `p_{roll(w)}(w)` for a 334-type fixed point `w`,
// in the format of [`hp_p_restriction`].
int32_t hp_closed_form_restriction(const struct HpPermutation *w,
                                   char *coeff_buf,
                                   size_t cap,
                                   size_t *len_out,
                                   uint32_t *degree_out);

// Verifies every property of the 334-type basis at size `n >= 4`.
int32_t hp_verify_334(size_t n, bool *passed, size_t *fixed_points);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HESSPIN_H */
