#pragma once

// Scoring of predicted attachments against gold placements: mean Wu & Palmer
// similarity, lemma match rate, recall and their F1.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "glossgraft/engine.hpp"
#include "glossgraft/wordnet.hpp"

namespace glossgraft {

struct GoldEntry {
  std::string entry_id;
  Operation operation = Operation::Merge;
  SynsetId target;
};

// "entry_id <TAB> operation <TAB> synset_id"; the synset may also be given in
// lemma#pos#sense notation. Targets must resolve in the index.
std::vector<GoldEntry> parse_gold(std::istream& in, const WordNetIndex& index);
std::vector<GoldEntry> read_gold(const std::filesystem::path& path, const WordNetIndex& index);

struct ItemScore {
  std::string entry_id;
  double wup = 0.0;
  bool lemma_match = false;
};

ItemScore score_item(const Attachment& pred, const GoldEntry& gold, const WordNetIndex& index);

struct EvalReport {
  double mean_wup = 0.0;
  double lemma_match_rate = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t answered = 0;
  std::size_t total_gold = 0;
  std::size_t missing = 0;     // gold items without a prediction
  std::size_t unmatched = 0;   // predictions without a gold item
  std::vector<ItemScore> per_item;
};

// Harmonic mean of mean Wu & Palmer and recall; 0 unless both are positive.
double f1_score(double mean_wup, double recall) noexcept;

EvalReport aggregate(std::span<const ItemScore> items, std::size_t total_gold);

// Pairs predictions with gold items by entry id. Per-item wup follows gold
// order; predictions for unknown ids are counted as unmatched.
EvalReport evaluate(std::span<const Attachment> predictions, std::span<const GoldEntry> gold,
                    const WordNetIndex& index);

std::string report_json(const EvalReport& report);
std::string report_table(const EvalReport& report, const std::string& title = {});

struct SweepRow {
  std::size_t gloss_size = 0;
  std::size_t token_count = 0;
  double mean_wup = 0.0;
  double lemma_match = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct SweepOptions {
  unsigned workers = 1;
  // Parts of speech whose synset representations are counted for the token
  // column. Empty: the parts of speech present in the corpus.
  std::vector<PartOfSpeech> count_pos;
  // Count each representation once per lemma of its synset, as a dictionary
  // keyed by word sense would hold it. False: once per synset.
  bool count_per_sense = true;
};

// Runs duluth1 once per gloss size over the corpus and scores it.
std::vector<SweepRow> sweep_gloss_size(std::span<const std::size_t> sizes,
                                       std::span<const OtherDictEntry> corpus,
                                       std::span<const GoldEntry> gold, const WordNetIndex& index,
                                       const Stoplist& stop, const SweepOptions& options = {});

// Total units across the representations of every synset of the given
// parts of speech, optionally weighted by the synset's lemma count.
std::size_t count_representation_units(const WordNetIndex& index,
                                       std::span<const PartOfSpeech> pos,
                                       const VariantConfig& cfg, const Stoplist& stop,
                                       unsigned workers = 1, bool per_sense = false);

std::string sweep_json(std::span<const SweepRow> rows);
std::string sweep_table(std::span<const SweepRow> rows);

}  // namespace glossgraft
