#include "glossgraft/glossgraft.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "glossgraft/engine.hpp"
#include "glossgraft/error.hpp"
#include "glossgraft/eval.hpp"
#include "glossgraft/fixtures.hpp"
#include "glossgraft/io.hpp"
#include "glossgraft/overlap.hpp"
#include "glossgraft/variants.hpp"
#include "glossgraft/wordnet.hpp"

using namespace glossgraft;

struct gg_wordnet {
  WordNetIndex index;
};

struct gg_stoplist {
  Stoplist stop;
};

struct gg_variant {
  VariantConfig cfg;
};

namespace {

thread_local std::string last_error;

gg_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::MissingFile: return GG_ERR_MISSING_FILE;
    case ErrorCode::ParseError: return GG_ERR_PARSE;
    case ErrorCode::UnknownSynset: return GG_ERR_UNKNOWN_SYNSET;
    case ErrorCode::UnsupportedPos: return GG_ERR_UNSUPPORTED_POS;
    case ErrorCode::EmptyGloss: return GG_ERR_EMPTY_GLOSS;
    case ErrorCode::NoAttachableWord: return GG_ERR_NO_ATTACHABLE_WORD;
    case ErrorCode::MismatchedId: return GG_ERR_MISMATCHED_ID;
    case ErrorCode::InvalidArgument: return GG_ERR_INVALID_ARGUMENT;
    case ErrorCode::Io: return GG_ERR_IO;
  }
  return GG_ERR_INTERNAL;
}

gg_status fail(gg_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename F>
gg_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(GG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(GG_ERR_INTERNAL, e.what());
  }
}

#define GG_REQUIRE(cond, what) \
  if (!(cond)) return fail(GG_ERR_INVALID_ARGUMENT, std::string(what) + " must not be null")

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

std::string join(const std::vector<std::string>& units) {
  std::string out;
  for (const auto& u : units) {
    if (!out.empty()) out.push_back(' ');
    out += u;
  }
  return out;
}

RelationKind parse_relation(std::string_view name) {
  for (auto k : {RelationKind::Hypernym, RelationKind::Hyponym, RelationKind::Meronym,
                 RelationKind::Derived}) {
    if (name == relation_name(k)) return k;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown relation '" + std::string(name) + "'");
}

std::string failures_tsv(const std::vector<EntryFailure>& failures) {
  std::ostringstream out;
  for (const auto& f : failures)
    out << f.position << '\t' << f.entry_id << '\t' << error_code_name(f.code) << '\t'
        << f.message << '\n';
  return out.str();
}

void fill_stats(const BatchStats& s, gg_run_stats* out) {
  if (!out) return;
  out->entries = s.entries;
  out->attached = s.attached;
  out->failed = s.failed;
  out->pool_size = s.pool_size;
  out->candidates_scored = s.candidates_scored;
  out->pruning_rate = s.pruning_rate();
  out->seconds = s.seconds;
}

void emit_batch(const BatchResult& result, char** out_predictions, char** out_failures,
                gg_run_stats* stats) {
  std::ostringstream preds;
  write_predictions(preds, result.attachments);
  auto pred_text = dup_string(preds.str());
  if (out_failures) {
    try {
      *out_failures = dup_string(failures_tsv(result.failures));
    } catch (...) {
      std::free(pred_text);
      throw;
    }
  }
  *out_predictions = pred_text;
  fill_stats(result.stats, stats);
}

}  // namespace

extern "C" {

const char* gg_version(void) { return "0.1.0"; }

const char* gg_status_name(gg_status status) {
  switch (status) {
    case GG_OK: return "ok";
    case GG_ERR_MISSING_FILE: return "missing file";
    case GG_ERR_PARSE: return "parse error";
    case GG_ERR_UNKNOWN_SYNSET: return "unknown synset";
    case GG_ERR_UNSUPPORTED_POS: return "unsupported part of speech";
    case GG_ERR_EMPTY_GLOSS: return "empty gloss";
    case GG_ERR_NO_ATTACHABLE_WORD: return "no attachable word";
    case GG_ERR_MISMATCHED_ID: return "mismatched id";
    case GG_ERR_INVALID_ARGUMENT: return "invalid argument";
    case GG_ERR_IO: return "i/o error";
    case GG_ERR_FIXTURE_MISMATCH: return "fixture mismatch";
    case GG_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* gg_last_error(void) { return last_error.c_str(); }

void gg_string_free(char* s) { std::free(s); }

gg_status gg_wordnet_load(const char* db_dir, gg_wordnet** out) {
  GG_REQUIRE(db_dir && out, "db_dir and out");
  return guarded([&] {
    *out = new gg_wordnet{WordNetIndex::load(db_dir)};
    return GG_OK;
  });
}

void gg_wordnet_free(gg_wordnet* wn) { delete wn; }

size_t gg_wordnet_synset_count(const gg_wordnet* wn, char pos) {
  if (!wn) return 0;
  auto p = pos_from_char(pos);
  return p ? wn->index.synsets_of(*p).size() : 0;
}

gg_status gg_wordnet_resolve(const gg_wordnet* wn, const char* sense, char out_id[16]) {
  GG_REQUIRE(wn && sense && out_id, "wn, sense and out_id");
  return guarded([&] {
    auto text = wn->index.resolve(sense).str();
    std::memcpy(out_id, text.c_str(), std::min<std::size_t>(text.size() + 1, 16));
    out_id[15] = '\0';
    return GG_OK;
  });
}

gg_status gg_wordnet_gloss(const gg_wordnet* wn, const char* synset, char** out) {
  GG_REQUIRE(wn && synset && out, "wn, synset and out");
  return guarded([&] {
    *out = dup_string(wn->index.synset(wn->index.resolve(synset)).gloss);
    return GG_OK;
  });
}

gg_status gg_wordnet_related(const gg_wordnet* wn, const char* synset, const char* relation,
                             char** out_ids) {
  GG_REQUIRE(wn && synset && relation && out_ids, "wn, synset, relation and out_ids");
  return guarded([&] {
    std::vector<std::string> ids;
    for (const auto& id : wn->index.related(wn->index.resolve(synset), parse_relation(relation)))
      ids.push_back(id.str());
    *out_ids = dup_string(join(ids));
    return GG_OK;
  });
}

gg_status gg_wordnet_depth(const gg_wordnet* wn, const char* synset, int* out) {
  GG_REQUIRE(wn && synset && out, "wn, synset and out");
  return guarded([&] {
    *out = wn->index.depth(wn->index.resolve(synset));
    return GG_OK;
  });
}

gg_status gg_wordnet_wup(const gg_wordnet* wn, const char* a, const char* b, double* out) {
  GG_REQUIRE(wn && a && b && out, "wn, a, b and out");
  return guarded([&] {
    *out = wn->index.wup(wn->index.resolve(a), wn->index.resolve(b));
    return GG_OK;
  });
}

gg_status gg_stoplist_load(const char* path, gg_stoplist** out) {
  GG_REQUIRE(path && out, "path and out");
  return guarded([&] {
    *out = new gg_stoplist{Stoplist::load(path)};
    return GG_OK;
  });
}

gg_stoplist* gg_stoplist_empty(void) { return new (std::nothrow) gg_stoplist{}; }

size_t gg_stoplist_size(const gg_stoplist* stop) { return stop ? stop->stop.size() : 0; }

void gg_stoplist_free(gg_stoplist* stop) { delete stop; }

gg_status gg_stoplist_convert_nsp(const char* in_path, const char* out_path, size_t* words,
                                  size_t* skipped) {
  GG_REQUIRE(in_path && out_path, "in_path and out_path");
  return guarded([&] {
    std::ifstream in(in_path);
    if (!in) throw Error(ErrorCode::MissingFile, std::string("cannot open ") + in_path);
    auto conv = convert_nsp_stoplist(in);
    std::ofstream out(out_path);
    if (!out) throw Error(ErrorCode::Io, std::string("cannot write ") + out_path);
    out << "# converted from " << in_path << "\n";
    for (const auto& w : conv.words) out << w << '\n';
    if (!out) throw Error(ErrorCode::Io, std::string("write failed: ") + out_path);
    if (words) *words = conv.words.size();
    if (skipped) *skipped = conv.skipped.size();
    return GG_OK;
  });
}

gg_status gg_variant_create(const char* name, gg_variant** out) {
  GG_REQUIRE(name && out, "name and out");
  return guarded([&] {
    *out = new gg_variant{VariantConfig::preset(std::string_view(name))};
    return GG_OK;
  });
}

gg_status gg_variant_set_gloss_size(gg_variant* v, size_t n) {
  GG_REQUIRE(v, "v");
  return guarded([&] {
    v->cfg = v->cfg.with_gloss_size(n);
    return GG_OK;
  });
}

void gg_variant_set_entry_compounds(gg_variant* v, int enabled) {
  if (v) v->cfg.mark_entry_compounds = enabled != 0;
}

const char* gg_variant_name(const gg_variant* v) { return v ? variant_name(v->cfg.name) : ""; }

void gg_variant_free(gg_variant* v) { delete v; }

gg_status gg_represent_sense(const gg_wordnet* wn, const gg_stoplist* stop, const gg_variant* v,
                             const char* synset, char** out_units) {
  GG_REQUIRE(wn && stop && v && synset && out_units, "wn, stop, v, synset and out_units");
  return guarded([&] {
    auto rep = represent_wordnet_sense(wn->index, wn->index.resolve(synset), v->cfg, stop->stop);
    *out_units = dup_string(join(rep.units));
    return GG_OK;
  });
}

gg_status gg_represent_gloss(const gg_wordnet* wn, const gg_stoplist* stop, const gg_variant* v,
                             const char* gloss, char** out_units) {
  GG_REQUIRE(wn && stop && v && gloss && out_units, "wn, stop, v, gloss and out_units");
  return guarded([&] {
    OtherDictEntry e{"text", "", PartOfSpeech::Noun, gloss};
    auto rep = represent_entry(e, v->cfg, stop->stop, &wn->index);
    *out_units = dup_string(join(rep.units));
    return GG_OK;
  });
}

gg_status gg_overlap_score(const char* a_units, const char* b_units, uint64_t* out) {
  GG_REQUIRE(a_units && b_units && out, "a_units, b_units and out");
  return guarded([&] {
    *out = score(tokenize(a_units), tokenize(b_units)).total;
    return GG_OK;
  });
}

gg_status gg_run(const gg_wordnet* wn, const gg_stoplist* stop, const gg_variant* v,
                 const gg_run_options* options, const char* entries_path, char** out_predictions,
                 char** out_failures, gg_run_stats* stats) {
  GG_REQUIRE(wn && stop && v && entries_path && out_predictions,
             "wn, stop, v, entries_path and out_predictions");
  return guarded([&] {
    RunOptions opts;
    if (options) {
      opts.workers = options->workers == 0 ? 1 : options->workers;
      if (options->use_attach_threshold) opts.attach.attach_threshold = options->attach_threshold;
    }
    auto entries = read_entries(entries_path);
    auto result = run_batch(entries, v->cfg, wn->index, stop->stop, opts);
    emit_batch(result, out_predictions, out_failures, stats);
    return GG_OK;
  });
}

gg_status gg_baseline(const gg_wordnet* wn, const char* kind, uint64_t seed, unsigned workers,
                      const char* entries_path, char** out_predictions, char** out_failures,
                      gg_run_stats* stats) {
  GG_REQUIRE(wn && kind && entries_path && out_predictions,
             "wn, kind, entries_path and out_predictions");
  return guarded([&] {
    auto baseline = parse_baseline_kind(kind);
    auto entries = read_entries(entries_path);
    auto result = run_baseline(entries, baseline, wn->index, seed, workers == 0 ? 1 : workers);
    emit_batch(result, out_predictions, out_failures, stats);
    return GG_OK;
  });
}

gg_status gg_evaluate(const gg_wordnet* wn, const char* predictions_path, const char* gold_path,
                      char** out_json, char** out_table) {
  GG_REQUIRE(wn && predictions_path && gold_path && out_json,
             "wn, predictions_path, gold_path and out_json");
  return guarded([&] {
    auto preds = read_predictions(predictions_path);
    auto gold = read_gold(gold_path, wn->index);
    auto report = evaluate(preds, gold, wn->index);
    auto json = dup_string(report_json(report));
    if (out_table) {
      try {
        *out_table = dup_string(report_table(report));
      } catch (...) {
        std::free(json);
        throw;
      }
    }
    *out_json = json;
    return GG_OK;
  });
}

gg_status gg_sweep(const gg_wordnet* wn, const gg_stoplist* stop, const size_t* sizes,
                   size_t n_sizes, const char* entries_path, const char* gold_path,
                   const gg_sweep_options* options, char** out_json, char** out_table) {
  GG_REQUIRE(wn && stop && sizes && entries_path && gold_path && out_json,
             "wn, stop, sizes, entries_path, gold_path and out_json");
  return guarded([&] {
    if (n_sizes == 0) throw Error(ErrorCode::InvalidArgument, "no gloss sizes given");
    auto entries = read_entries(entries_path);
    auto gold = read_gold(gold_path, wn->index);
    SweepOptions opts;
    if (options) {
      opts.workers = options->workers == 0 ? 1 : options->workers;
      if (options->all_pos) opts.count_pos.assign(std::begin(kAllPos), std::end(kAllPos));
      opts.count_per_sense = options->per_synset == 0;
    }
    std::vector<std::size_t> size_list(sizes, sizes + n_sizes);
    auto rows = sweep_gloss_size(size_list, entries, gold, wn->index, stop->stop, opts);
    auto json = dup_string(sweep_json(rows));
    if (out_table) {
      try {
        *out_table = dup_string(sweep_table(rows));
      } catch (...) {
        std::free(json);
        throw;
      }
    }
    *out_json = json;
    return GG_OK;
  });
}

gg_status gg_fixture_check(const gg_wordnet* wn, const gg_stoplist* stop, char** out_report) {
  GG_REQUIRE(wn && stop && out_report, "wn, stop and out_report");
  return guarded([&] {
    auto results = check_fixtures(wn->index, stop->stop);
    std::ostringstream report;
    bool all = true;
    for (const auto& r : results) {
      all = all && r.passed;
      report << (r.passed ? "PASS " : "FAIL ") << variant_name(r.variant) << " " << kFixtureSense
             << " (" << r.actual.size() << " units)";
      if (!r.passed) report << ": " << r.message;
      report << '\n';
    }
    *out_report = dup_string(report.str());
    if (!all) return fail(GG_ERR_FIXTURE_MISMATCH, "fixture mismatch");
    return GG_OK;
  });
}

}  // extern "C"
