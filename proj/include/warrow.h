/* C API for the w-tree calculus library.
 *
 * Objects are opaque handles created by the parse/make functions and released
 * with warrow_release. Strings returned through char** outputs are owned by
 * the caller and released with warrow_string_free. Functions return
 * WARROW_OK on success; on failure warrow_last_error() describes the problem
 * for the calling thread.
 */
#ifndef WARROW_H
#define WARROW_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct warrow_handle warrow_handle;

typedef int warrow_status;
#define WARROW_OK 0
#define WARROW_ERR_DOMAIN 1
#define WARROW_ERR_USAGE 2
#define WARROW_DISTINCT 3

#define WARROW_KIND_PRESENTATION 1
#define WARROW_KIND_GAUSS_CODE 2

const char* warrow_version(void);
/* Last error message of the calling thread; empty string when none. */
const char* warrow_last_error(void);

void warrow_release(warrow_handle* h);
void warrow_string_free(char* s);

/* -- parsing and serialization ------------------------------------------ */

/* Accepts presentation/Gauss-code JSON or a signed Gauss-code string. */
warrow_status warrow_parse(const char* text, warrow_handle** out);
int warrow_kind(const warrow_handle* h);
warrow_status warrow_to_json(const warrow_handle* h, char** out);
/* Gauss codes only: signed Gauss-code string form. */
warrow_status warrow_to_text(const warrow_handle* h, char** out);

/* -- model operations ----------------------------------------------------- */

/* Validation report as a JSON array of violation strings (empty = valid). */
warrow_status warrow_validate(const warrow_handle* h, char** report);
warrow_status warrow_normalize_sides(const warrow_handle* h, warrow_handle** out);
warrow_status warrow_rotate_basepoint(const warrow_handle* h, int strand, int delta,
                                      warrow_handle** out);
warrow_status warrow_canonical_arrows(const warrow_handle* gauss, warrow_handle** out);
/* JSON array of {tail, head, sign}; presentations of w-arrows only. */
warrow_status warrow_signed_arrows(const warrow_handle* h, char** out);

/* -- expansion and surgery ------------------------------------------------ */

warrow_status warrow_expand_once(const warrow_handle* h, int tree_index,
                                 warrow_handle** out);
warrow_status warrow_full_expand(const warrow_handle* h, warrow_handle** out);
warrow_status warrow_surgery(const warrow_handle* h, warrow_handle** out);
warrow_status warrow_delete_tail_group(const warrow_handle* h, int tree_index,
                                       int tail_index, warrow_handle** out);

/* -- moves ---------------------------------------------------------------- */

/* move: JSON move description. Yields WARROW_OK with *reason = NULL when
 * applicable, WARROW_ERR_DOMAIN with a reason string otherwise. */
warrow_status warrow_move_applicable(const warrow_handle* h, const char* move,
                                     char** reason);
warrow_status warrow_move_apply(const warrow_handle* h, const char* move,
                                warrow_handle** out);
/* moves: JSON array. trace receives one JSON object per line. */
warrow_status warrow_moves_trace(const warrow_handle* h, const char* moves,
                                 warrow_handle** out, char** trace);

/* -- invariants ----------------------------------------------------------- */

/* Wirtinger presentation as JSON (generators, relators, meridians). */
warrow_status warrow_wirtinger(const warrow_handle* h, char** out);
/* Normalized Alexander polynomial; text form like "2 - 3*t + t^2". */
warrow_status warrow_alexander(const warrow_handle* h, char** text, char** json);
/* alpha_2..alpha_kmax into out[0..kmax-2]. */
warrow_status warrow_alpha(const warrow_handle* h, int kmax, int64_t* out);
/* seq: digit string such as "123", or comma separated for indices > 9. */
warrow_status warrow_milnor(const warrow_handle* h, const char* seq, int64_t* out);
warrow_status warrow_milnor_all(const warrow_handle* h, int maxlen, char** json);
warrow_status warrow_longitudes(const warrow_handle* h, int k, char** json);
/* Kind-aware invariant summary as JSON. */
warrow_status warrow_invariants(const warrow_handle* h, char** json);

/* -- generators and classification ---------------------------------------- */

warrow_status warrow_make_lk(int k, int inverted, warrow_handle** out);
warrow_status warrow_make_ti(const char* seq, int n, int inverted, warrow_handle** out);
warrow_status warrow_concat(const warrow_handle* a, const warrow_handle* b,
                            warrow_handle** out);
warrow_status warrow_wk_normal_form(const warrow_handle* h, int k, char** json,
                                    warrow_handle** representative);
warrow_status warrow_homotopy_reduce(const warrow_handle* h, warrow_handle** out);
warrow_status warrow_homotopy_normal_form(const warrow_handle* h, char** json,
                                          warrow_handle** representative);
/* WARROW_OK when equal, WARROW_DISTINCT with witness set when not. */
warrow_status warrow_equiv_wk(const warrow_handle* a, const warrow_handle* b, int k,
                              char** witness);
warrow_status warrow_equiv_homotopy(const warrow_handle* a, const warrow_handle* b,
                                    char** witness);

/* -- finite type checks ---------------------------------------------------- */

warrow_status warrow_virtualize(const warrow_handle* gauss, const int* crossings,
                                int count, warrow_handle** out);
/* invariant: name such as "alpha2" or "mu-12". subset: crossing ids. */
warrow_status warrow_ft_alternating_sum(const warrow_handle* gauss, const char* invariant,
                                        const int* subset, int count, char** value_json);

#ifdef __cplusplus
}
#endif

#endif /* WARROW_H */
