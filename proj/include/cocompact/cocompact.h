#ifndef COCOMPACT_COCOMPACT_H_
#define COCOMPACT_COCOMPACT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define COCOMPACT_API __declspec(dllexport)
#else
#define COCOMPACT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Opaque rooted graph. Parsing does not check rootedness; operations that
 * need it report CC_ERR_UNREACHABLE. */
typedef struct cc_graph cc_graph;

typedef enum cc_status {
  CC_OK = 0,
  CC_ERR_PARSE = 1,
  CC_ERR_INVALID_GRAPH = 2,
  CC_ERR_UNREACHABLE = 3,
  CC_ERR_INVALID_PATH = 4,
  CC_ERR_INVALID_LABELLING = 5,
  CC_ERR_INVALID_ARGUMENT = 6,
  CC_ERR_GUARD = 7,
  CC_ERR_INTERNAL = 8
} cc_status;

typedef enum cc_verdict {
  CC_VERDICT_COCOMPACT = 0,
  CC_VERDICT_NOT_COCOMPACT = 1,
  CC_VERDICT_UNSUPPORTED = 2
} cc_verdict;

typedef enum cc_format { CC_FORMAT_JSON = 0, CC_FORMAT_DOT = 1 } cc_format;

COCOMPACT_API const char* cc_version(void);
/* Message for the last failing call on this thread. */
COCOMPACT_API const char* cc_last_error(void);
/* Frees strings returned through char** out-parameters. */
COCOMPACT_API void cc_string_free(char* s);

COCOMPACT_API cc_status cc_graph_parse(const char* text, size_t len, cc_graph** out);
COCOMPACT_API void cc_graph_free(cc_graph* g);
COCOMPACT_API size_t cc_graph_vertex_count(const cc_graph* g);
COCOMPACT_API size_t cc_graph_edge_count(const cc_graph* g);
COCOMPACT_API cc_status cc_graph_validate(const cc_graph* g);
COCOMPACT_API cc_status cc_graph_render(const cc_graph* g, cc_format format, char** out);

/* Paths are given as edge ids starting at the root. */
COCOMPACT_API cc_status cc_reroot(const cc_graph* g, const char* const* path, size_t path_len,
                                  cc_graph** out);

/* JSON with verdict, labels, lp, M and witness. */
COCOMPACT_API cc_status cc_decide(const cc_graph* g, int strip_sinks, cc_verdict* verdict,
                                  char** json);
/* Coarsest pre-actual labelling of g minus its root (whole != 0: of all of
 * g). *found is 0 when refinement reports a failure point. */
COCOMPACT_API cc_status cc_label(const cc_graph* g, int whole, int* found, char** json);
COCOMPACT_API cc_status cc_verify_labelling(const cc_graph* g, const char* labelling, size_t len,
                                            int* is_actual, char** report);
/* Quotient by the coarsest n.e.c. relation; block map goes to *blocks. */
COCOMPACT_API cc_status cc_quotient(const cc_graph* g, int fix_root, cc_graph** quotient,
                                    char** blocks);

/* Truncated unfolding tree, rerooted at path when path_len > 0. */
COCOMPACT_API cc_status cc_unfold(const cc_graph* g, const char* const* path, size_t path_len,
                                  uint32_t depth, cc_format format, char** out);
COCOMPACT_API cc_status cc_rerooted_code(const cc_graph* g, const char* const* path,
                                         size_t path_len, uint32_t depth,
                                         int original_orientation, char** code);
/* counts must hold max_len + 1 entries. */
COCOMPACT_API cc_status cc_probe(const cc_graph* g, uint32_t max_len, uint32_t depth,
                                 uint64_t* counts);

/* root_mult < 0 selects k_0 root edges. */
COCOMPACT_API cc_status cc_gen_focal(const uint32_t* ks, size_t n, int32_t root_mult,
                                     cc_graph** out);
/* mult may be NULL (all ones); root_mult < 0 selects mult[0] + 1. */
COCOMPACT_API cc_status cc_gen_circular(uint32_t n, const uint32_t* mult, int32_t root_mult,
                                        cc_graph** out);

#ifdef __cplusplus
}
#endif

#endif  /* COCOMPACT_COCOMPACT_H_ */
