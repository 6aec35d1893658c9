#pragma once

// Attachment engine: places each dictionary entry on the WordNet synset whose
// representation overlaps its gloss the most, plus the First Word and Random
// baselines.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "glossgraft/error.hpp"
#include "glossgraft/gloss.hpp"
#include "glossgraft/variants.hpp"
#include "glossgraft/wordnet.hpp"

namespace glossgraft {

enum class Operation { Merge, Attach };
const char* operation_name(Operation op) noexcept;
Operation parse_operation(std::string_view text);

enum class Provenance {
  Overlap,
  FirstWordFallback,
  RootFallback,
  FirstWordBaseline,
  RandomBaseline,
};
const char* provenance_name(Provenance p) noexcept;
Provenance parse_provenance(std::string_view text);

struct Attachment {
  std::string entry_id;
  SynsetId target;
  Operation operation = Operation::Merge;
  std::uint64_t score = 0;
  Provenance provenance = Provenance::Overlap;

  friend bool operator==(const Attachment&, const Attachment&) = default;
};

// Every synset of one part of speech represented under one variant, with an
// inverted index from unit to the candidates containing it. Immutable after
// construction and safe to share between threads.
class CandidatePool {
 public:
  // Nouns and verbs only (Error UnsupportedPos otherwise).
  static CandidatePool build(const WordNetIndex& index, PartOfSpeech pos, const VariantConfig& cfg,
                             const Stoplist& stop, unsigned workers = 1);

  PartOfSpeech pos() const noexcept { return pos_; }
  const VariantConfig& config() const noexcept { return cfg_; }

  std::size_t size() const noexcept { return ids_.size(); }
  const SynsetId& id(std::size_t candidate) const { return ids_[candidate]; }
  std::span<const std::uint32_t> units(std::size_t candidate) const;
  std::size_t total_units() const noexcept { return units_.size(); }

  // Candidate indices (ascending, i.e. ascending synset offset) whose
  // representation contains the unit; empty for unseen units.
  std::span<const std::uint32_t> postings(std::string_view unit) const;
  std::span<const std::uint32_t> postings(std::uint32_t unit_id) const;

  // Maps units to pool ids. Units absent from the pool get fresh ids that
  // match nothing in the pool but still match each other.
  std::vector<std::uint32_t> encode(const std::vector<std::string>& units) const;

 private:
  PartOfSpeech pos_ = PartOfSpeech::Noun;
  VariantConfig cfg_;
  std::vector<SynsetId> ids_;
  std::vector<std::size_t> starts_;  // size() + 1 offsets into units_
  std::vector<std::uint32_t> units_;
  std::unordered_map<std::string, std::uint32_t> vocab_;
  std::vector<std::vector<std::uint32_t>> postings_;
};

inline CandidatePool build_candidates(const WordNetIndex& index, PartOfSpeech pos,
                                      const VariantConfig& cfg, const Stoplist& stop,
                                      unsigned workers = 1) {
  return CandidatePool::build(index, pos, cfg, stop, workers);
}

struct AttachOptions {
  // Winners scoring below the threshold are attached as hyponyms instead of
  // merged. Unset: every overlap decision is a merge.
  std::optional<double> attach_threshold;
};

struct AttachDiagnostics {
  std::size_t candidates_scored = 0;
};

Attachment attach_entry(const OtherDictEntry& entry, const CandidatePool& pool,
                        const WordNetIndex& index, const Stoplist& stop,
                        const AttachOptions& options = {},
                        AttachDiagnostics* diagnostics = nullptr);

// First sense of the first normalized gloss token that is a WordNet lemma of
// the entry's part of speech. Error NoAttachableWord when there is none.
Attachment first_word_baseline(const OtherDictEntry& entry, const WordNetIndex& index);

// Uniform choice among the synsets of the entry's part of speech, seeded by
// (seed, entry id) so results do not depend on batch order or threading.
Attachment random_baseline(const OtherDictEntry& entry, const WordNetIndex& index,
                           std::uint64_t seed);

struct RunOptions {
  unsigned workers = 1;
  AttachOptions attach;
};

struct EntryFailure {
  std::size_t position = 0;
  std::string entry_id;
  ErrorCode code = ErrorCode::InvalidArgument;
  std::string message;
};

struct BatchStats {
  std::size_t entries = 0;
  std::size_t attached = 0;
  std::size_t failed = 0;
  std::size_t pool_size = 0;           // candidates across the pools used
  std::size_t candidates_scored = 0;
  std::size_t candidates_possible = 0; // sum over entries of their pool size
  double seconds = 0.0;

  double pruning_rate() const noexcept {
    return candidates_possible == 0
               ? 0.0
               : 1.0 - static_cast<double>(candidates_scored) / static_cast<double>(candidates_possible);
  }
};

struct BatchResult {
  std::vector<Attachment> attachments;  // input order, failed entries omitted
  std::vector<EntryFailure> failures;
  BatchStats stats;
};

BatchResult run_batch(std::span<const OtherDictEntry> entries, const VariantConfig& cfg,
                      const WordNetIndex& index, const Stoplist& stop,
                      const RunOptions& options = {});

enum class BaselineKind { FirstWord, Random };
BaselineKind parse_baseline_kind(std::string_view text);

BatchResult run_baseline(std::span<const OtherDictEntry> entries, BaselineKind kind,
                         const WordNetIndex& index, std::uint64_t seed = 0,
                         unsigned workers = 1);

}  // namespace glossgraft
