/* C interface to the discourse temporal-relation engine.
 *
 * All objects are opaque handles created by *_parse / *_load / *_run
 * functions and released with the matching *_free. Functions that can fail
 * return a dtr_status; on failure the message is available from
 * dtr_last_error() on the same thread until the next failing call.
 * Strings returned by accessors are owned by the handle and stay valid until
 * it is freed.
 */
#ifndef DTR_DTR_H
#define DTR_DTR_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(DTR_BUILDING_LIBRARY)
#    define DTR_API __declspec(dllexport)
#  else
#    define DTR_API __declspec(dllimport)
#  endif
#else
#  define DTR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dtr_status {
  DTR_OK = 0,
  DTR_ERROR_INVALID_ARGUMENT = 1, /* null pointer or violated precondition */
  DTR_ERROR_IO = 2,               /* file could not be read */
  DTR_ERROR_PARSE = 3,            /* input text rejected; see line/column */
  DTR_ERROR_CORPUS = 4,           /* missing or malformed expectation file */
  DTR_ERROR_INTERNAL = 5
} dtr_status;

/* Flags for dtr_interpret. */
#define DTR_INTERPRET_ALL 0x1u   /* enumerate every surviving assignment */
#define DTR_INTERPRET_TRACE 0x2u /* record the staged derivation */

typedef struct dtr_lexicon dtr_lexicon;
typedef struct dtr_axioms dtr_axioms;
typedef struct dtr_discourse dtr_discourse;
typedef struct dtr_interpretation dtr_interpretation;
typedef struct dtr_corpus_report dtr_corpus_report;

DTR_API const char* dtr_version(void);
DTR_API const char* dtr_status_string(dtr_status status);

/* Message of the most recent failure on the calling thread ("" if none). */
DTR_API const char* dtr_last_error(void);
/* Position of the most recent DTR_ERROR_PARSE on this thread, 0 otherwise. */
DTR_API size_t dtr_last_error_line(void);
DTR_API size_t dtr_last_error_column(void);

DTR_API dtr_status dtr_lexicon_parse(const char* text, dtr_lexicon** out);
DTR_API dtr_status dtr_lexicon_load(const char* path, dtr_lexicon** out);
DTR_API size_t dtr_lexicon_size(const dtr_lexicon* lexicon);
DTR_API void dtr_lexicon_free(dtr_lexicon* lexicon);

/* Axioms are only parsed here; dtr_axioms_check validates their lemmas. */
DTR_API dtr_status dtr_axioms_parse(const char* text, dtr_axioms** out);
DTR_API dtr_status dtr_axioms_load(const char* path, dtr_axioms** out);
DTR_API dtr_status dtr_axioms_check(const dtr_axioms* axioms, const dtr_lexicon* lexicon);
DTR_API size_t dtr_axioms_size(const dtr_axioms* axioms);
DTR_API void dtr_axioms_free(dtr_axioms* axioms);

DTR_API dtr_status dtr_discourse_parse(const char* text, const dtr_lexicon* lexicon,
                                       dtr_discourse** out);
DTR_API dtr_status dtr_discourse_load(const char* path, const dtr_lexicon* lexicon,
                                      dtr_discourse** out);
DTR_API size_t dtr_discourse_clause_count(const dtr_discourse* discourse);
/* Canonical notation of the parsed discourse. */
DTR_API const char* dtr_discourse_canonical(const dtr_discourse* discourse);
DTR_API void dtr_discourse_free(dtr_discourse* discourse);

/* An infelicitous verdict is a successful call; inspect
 * dtr_interpretation_felicitous. */
DTR_API dtr_status dtr_interpret(const dtr_discourse* discourse, const dtr_lexicon* lexicon,
                                 const dtr_axioms* axioms, unsigned flags,
                                 dtr_interpretation** out);
DTR_API int dtr_interpretation_felicitous(const dtr_interpretation* in);
DTR_API size_t dtr_interpretation_relation_count(const dtr_interpretation* in);
DTR_API size_t dtr_interpretation_diagnostic_count(const dtr_interpretation* in);
/* Canonical JSON; includes "alternatives" when DTR_INTERPRET_ALL was set. */
DTR_API const char* dtr_interpretation_json(const dtr_interpretation* in);
DTR_API const char* dtr_interpretation_text(const dtr_interpretation* in);
/* Derivation lines joined by newlines; "" unless DTR_INTERPRET_TRACE was set. */
DTR_API const char* dtr_interpretation_trace(const dtr_interpretation* in);
DTR_API void dtr_interpretation_free(dtr_interpretation* in);

DTR_API dtr_status dtr_corpus_run(const char* dir, const dtr_lexicon* lexicon,
                                  const dtr_axioms* axioms, dtr_corpus_report** out);
DTR_API size_t dtr_corpus_report_total(const dtr_corpus_report* report);
DTR_API size_t dtr_corpus_report_failed(const dtr_corpus_report* report);
DTR_API const char* dtr_corpus_report_json(const dtr_corpus_report* report);
DTR_API const char* dtr_corpus_report_text(const dtr_corpus_report* report);
DTR_API void dtr_corpus_report_free(dtr_corpus_report* report);

#ifdef __cplusplus
}
#endif

#endif /* DTR_DTR_H */
