#ifndef HDX_HDX_H
#define HDX_HDX_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(HDX_BUILDING_LIBRARY)
#define HDX_API __attribute__((visibility("default")))
#else
#define HDX_API
#endif

/* Status codes; they double as CLI exit codes. */
#define HDX_OK 0
#define HDX_CHECKS_FAILED 1
#define HDX_INVALID_ARGUMENT 2
#define HDX_BUDGET_EXCEEDED 3
#define HDX_HYPOTHESIS_FAILED 4
#define HDX_INTERNAL 5

typedef struct hdx_complex hdx_complex;

HDX_API const char* hdx_version(void);

/* Message of the last failing call on this thread; never NULL. */
HDX_API const char* hdx_last_error(void);

/* Frees strings returned through char** out-parameters. */
HDX_API void hdx_string_free(char* s);

/* spec is a JSON object such as {"shape":"hypercube","d":3}.
 * Shapes: simplex {n, k}, hypercube {d}, coxeter-a {n}, coxeter-b {n},
 * product {n} and dual {n} (both need base), order-complex
 * {lattice: "boolean"|"subspace", n, q}, ynp {n, p, seed},
 * random {n, p, max_size, seed}. base may be NULL otherwise. */
HDX_API int hdx_complex_build(const char* spec, const hdx_complex* base, hdx_complex** out);
HDX_API int hdx_complex_from_json(const char* json, hdx_complex** out);
HDX_API int hdx_complex_to_json(const hdx_complex* x, char** out);
/* Writes min(cap, top_dim + 1) entries of the f-vector; *len gets the full length. */
HDX_API int hdx_complex_f_vector(const hdx_complex* x, size_t* out, size_t cap, size_t* len);
HDX_API unsigned long long hdx_complex_hash(const hdx_complex* x);
HDX_API void hdx_complex_free(hdx_complex* x);

/* Runs one computation described by a JSON request {"command": ..., ...}.
 * x may be NULL for commands that build their own complexes. On success and
 * on every failure a JSON record is stored in *result (an error record
 * {error, message, ...} on failure; budget overruns carry the required and
 * allowed budget and whatever was known before the search). */
HDX_API int hdx_compute(const hdx_complex* x, const char* request, char** result);

/* Runs a verification suite; options is a JSON object {trials, seed, budget,
 * threads} or NULL. Returns HDX_OK only if every counted check passed. */
HDX_API int hdx_verify(const char* suite, const char* options, char** report);

#ifdef __cplusplus
}
#endif

#endif
