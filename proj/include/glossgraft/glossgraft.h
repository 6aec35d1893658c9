/*
 * glossgraft C API.
 *
 * Objects are opaque handles created by *_load / *_create and released by the
 * matching *_free. Every fallible call returns a gg_status; on failure a
 * message is available from gg_last_error() on the same thread. Strings
 * returned through char** out-parameters are heap-allocated and must be
 * released with gg_string_free().
 *
 * Synset ids are written as zero-padded offset plus part of speech
 * ("02120997-n"); wherever an id is accepted, lemma#pos#sense notation
 * ("feline#n#1") is accepted too. Unit lists are single-space separated.
 */
#ifndef GLOSSGRAFT_H
#define GLOSSGRAFT_H

#include <stddef.h>
#include <stdint.h>

#if defined(GLOSSGRAFT_BUILDING_LIBRARY)
#define GG_API __attribute__((visibility("default")))
#else
#define GG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gg_status {
  GG_OK = 0,
  GG_ERR_MISSING_FILE = 1,
  GG_ERR_PARSE = 2,
  GG_ERR_UNKNOWN_SYNSET = 3,
  GG_ERR_UNSUPPORTED_POS = 4,
  GG_ERR_EMPTY_GLOSS = 5,
  GG_ERR_NO_ATTACHABLE_WORD = 6,
  GG_ERR_MISMATCHED_ID = 7,
  GG_ERR_INVALID_ARGUMENT = 8,
  GG_ERR_IO = 9,
  GG_ERR_FIXTURE_MISMATCH = 10,
  GG_ERR_INTERNAL = 99
} gg_status;

typedef struct gg_wordnet gg_wordnet;
typedef struct gg_stoplist gg_stoplist;
typedef struct gg_variant gg_variant;

GG_API const char* gg_version(void);
GG_API const char* gg_status_name(gg_status status);
/* Message of the last failing call on the calling thread ("" if none). */
GG_API const char* gg_last_error(void);
GG_API void gg_string_free(char* s);

/* WordNet database ------------------------------------------------------ */

GG_API gg_status gg_wordnet_load(const char* db_dir, gg_wordnet** out);
GG_API void gg_wordnet_free(gg_wordnet* wn);
/* pos is one of 'n', 'v', 'a', 'r'; 0 for an unknown tag. */
GG_API size_t gg_wordnet_synset_count(const gg_wordnet* wn, char pos);
/* out_id receives the canonical id, NUL-terminated (16 bytes are enough). */
GG_API gg_status gg_wordnet_resolve(const gg_wordnet* wn, const char* sense, char out_id[16]);
GG_API gg_status gg_wordnet_gloss(const gg_wordnet* wn, const char* synset, char** out);
/* relation: "hypernym", "hyponym", "meronym" or "derived". */
GG_API gg_status gg_wordnet_related(const gg_wordnet* wn, const char* synset,
                                    const char* relation, char** out_ids);
GG_API gg_status gg_wordnet_depth(const gg_wordnet* wn, const char* synset, int* out);
GG_API gg_status gg_wordnet_wup(const gg_wordnet* wn, const char* a, const char* b, double* out);

/* Stoplists ------------------------------------------------------------- */

GG_API gg_status gg_stoplist_load(const char* path, gg_stoplist** out);
GG_API gg_stoplist* gg_stoplist_empty(void);
GG_API size_t gg_stoplist_size(const gg_stoplist* stop);
GG_API void gg_stoplist_free(gg_stoplist* stop);
/* Rewrites an NSP regex stoplist as one plain word per line. */
GG_API gg_status gg_stoplist_convert_nsp(const char* in_path, const char* out_path,
                                         size_t* words, size_t* skipped);

/* Variants -------------------------------------------------------------- */

/* name: "duluth1" .. "duluth4". */
GG_API gg_status gg_variant_create(const char* name, gg_variant** out);
/* Truncation length override (duluth1 only). */
GG_API gg_status gg_variant_set_gloss_size(gg_variant* v, size_t n);
/* Also fuse WordNet compounds in dictionary-entry glosses. */
GG_API void gg_variant_set_entry_compounds(gg_variant* v, int enabled);
GG_API const char* gg_variant_name(const gg_variant* v);
GG_API void gg_variant_free(gg_variant* v);

GG_API gg_status gg_represent_sense(const gg_wordnet* wn, const gg_stoplist* stop,
                                    const gg_variant* v, const char* synset, char** out_units);
/* Represents free text the way a dictionary-entry gloss is represented. */
GG_API gg_status gg_represent_gloss(const gg_wordnet* wn, const gg_stoplist* stop,
                                    const gg_variant* v, const char* gloss, char** out_units);
GG_API gg_status gg_overlap_score(const char* a_units, const char* b_units, uint64_t* out);

/* Batch workflows ------------------------------------------------------- */

typedef struct gg_run_options {
  unsigned workers;          /* 0 is treated as 1 */
  int use_attach_threshold;  /* nonzero: scores below the threshold become "attach" */
  double attach_threshold;
} gg_run_options;

typedef struct gg_run_stats {
  size_t entries;
  size_t attached;
  size_t failed;
  size_t pool_size;
  size_t candidates_scored;
  double pruning_rate;
  double seconds;
} gg_run_stats;

/*
 * Attaches every entry of a TSV or JSON-lines file. out_predictions receives
 * the prediction TSV; out_failures (optional) receives one line per failed
 * entry: "position <TAB> entry_id <TAB> error <TAB> message". Per-entry
 * failures do not make the call fail.
 */
GG_API gg_status gg_run(const gg_wordnet* wn, const gg_stoplist* stop, const gg_variant* v,
                        const gg_run_options* options, const char* entries_path,
                        char** out_predictions, char** out_failures, gg_run_stats* stats);

/* kind: "first-word" or "random". */
GG_API gg_status gg_baseline(const gg_wordnet* wn, const char* kind, uint64_t seed,
                             unsigned workers, const char* entries_path, char** out_predictions,
                             char** out_failures, gg_run_stats* stats);

GG_API gg_status gg_evaluate(const gg_wordnet* wn, const char* predictions_path,
                             const char* gold_path, char** out_json, char** out_table);

typedef struct gg_sweep_options {
  unsigned workers;  /* 0 is treated as 1 */
  int all_pos;       /* count every part of speech, not just the corpus ones */
  int per_synset;    /* count each synset once instead of once per sense */
} gg_sweep_options;

/* Runs duluth1 once per gloss size and reports token count and scores. */
GG_API gg_status gg_sweep(const gg_wordnet* wn, const gg_stoplist* stop, const size_t* sizes,
                          size_t n_sizes, const char* entries_path, const char* gold_path,
                          const gg_sweep_options* options, char** out_json, char** out_table);

/* Regenerates the feline#n#1 reference representations. Returns
 * GG_ERR_FIXTURE_MISMATCH (with the report still filled in) on any diff. */
GG_API gg_status gg_fixture_check(const gg_wordnet* wn, const gg_stoplist* stop,
                                  char** out_report);

#ifdef __cplusplus
}
#endif

#endif /* GLOSSGRAFT_H */
