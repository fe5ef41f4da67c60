/* C interface to the bvdomain library. */
#ifndef BVD_H
#define BVD_H

#include <stddef.h>
#include <stdint.h>

#if defined(BVD_BUILDING)
#define BVD_API __attribute__((visibility("default")))
#else
#define BVD_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

enum bvd_status {
    BVD_OK = 0,
    BVD_ERR_DOMAIN = 1,   /* precondition or module error */
    BVD_ERR_USAGE = 2,    /* null or out of range argument */
    BVD_ERR_BUDGET = 3,   /* a step, fuel or size budget ran out */
    BVD_ERR_PARSE = 4,    /* malformed term, element, formula or map */
    BVD_ERR_INTERNAL = 5
};

enum bvd_verdict { BVD_YES = 0, BVD_NO = 1, BVD_UNKNOWN = 2 };

enum bvd_theory { BVD_EQUAL = 0, BVD_UNEQUAL_NORMAL_FORMS = 1, BVD_INCONCLUSIVE = 2 };

/* Not thread safe; use one context per thread. */
typedef struct bvd_context bvd_context;
typedef struct bvd_term bvd_term;

BVD_API bvd_context* bvd_context_new(void);
BVD_API void bvd_context_free(bvd_context* ctx);
/* message of the last failed call on ctx, "" if none */
BVD_API const char* bvd_last_error(const bvd_context* ctx);

/* strings returned through char** are owned by the caller */
BVD_API void bvd_string_free(char* s);

BVD_API int bvd_term_parse(bvd_context* ctx, const char* text, bvd_term** out);
BVD_API void bvd_term_free(bvd_term* t);
BVD_API int bvd_term_print(bvd_context* ctx, const bvd_term* t, char** out);
BVD_API int bvd_term_size(bvd_context* ctx, const bvd_term* t, size_t* out);

/* BVD_ERR_BUDGET when no normal form is reached within max_steps */
BVD_API int bvd_normalize(bvd_context* ctx, const bvd_term* t, uint64_t max_steps,
                          bvd_term** out, uint64_t* steps);
BVD_API int bvd_theory_equal(bvd_context* ctx, const bvd_term* a, const bvd_term* b,
                             uint64_t max_steps, int* verdict);

/* element syntax: "*" or "([e1,e2],e)"; trace may be NULL */
BVD_API int bvd_denote_member(bvd_context* ctx, const bvd_term* t, const char* element,
                              unsigned fuel, int* verdict, char** trace);
/* "{e1, e2}" */
BVD_API int bvd_denote_enumerate(bvd_context* ctx, const bvd_term* t, unsigned fuel, char** out);

/* algebra spec "4", "4:uniform" or "4:1/2,1/4,1/8,1/8"; closed formula */
BVD_API int bvd_truth(bvd_context* ctx, const char* algebra, const char* formula, char** element,
                      char** measure);

/* rv_json: {"values": [[naturals] per atom]} over 4^k atoms; out is a JSON document */
BVD_API int bvd_gx(bvd_context* ctx, unsigned k, const char* rv_json, char** out);

/* map "0:1,1:0"; measure as "num/den" */
BVD_API int bvd_independence(bvd_context* ctx, unsigned k, const char* map, char** measure);

BVD_API int bvd_kleene_post(bvd_context* ctx, unsigned k, unsigned size, unsigned fuel,
                            unsigned long seed, uint64_t steps, char** report_json);

/* embedded witness constants as JSON */
BVD_API int bvd_witness_constants(bvd_context* ctx, char** json);

typedef void (*bvd_selftest_callback)(void* user, int id, int pass, const char* line);
/* runs acceptance criteria 1..10; *all_pass is 1 when every criterion passed */
BVD_API int bvd_selftest(bvd_context* ctx, bvd_selftest_callback cb, void* user, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif
