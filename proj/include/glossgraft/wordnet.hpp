#pragma once

// In-memory WordNet 3.0 store built from the wndb database files
// (data.{noun,verb,adj,adv} and index.{noun,verb,adj,adv}).

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "glossgraft/gloss.hpp"

namespace glossgraft {

enum class PartOfSpeech : char { Noun = 'n', Verb = 'v', Adjective = 'a', Adverb = 'r' };

inline constexpr PartOfSpeech kAllPos[] = {PartOfSpeech::Noun, PartOfSpeech::Verb,
                                           PartOfSpeech::Adjective, PartOfSpeech::Adverb};

char pos_char(PartOfSpeech pos) noexcept;
// Accepts n, v, a, r and the satellite tag s (folded into a).
std::optional<PartOfSpeech> pos_from_char(char c) noexcept;
PartOfSpeech parse_pos(std::string_view text);
// "noun", "verb", "adj", "adv": the suffix used by the database file names.
const char* pos_file_suffix(PartOfSpeech pos) noexcept;

struct SynsetId {
  PartOfSpeech pos = PartOfSpeech::Noun;
  std::uint32_t offset = 0;

  // "02121620-n"
  std::string str() const;
  static SynsetId parse(std::string_view text);

  friend bool operator==(const SynsetId&, const SynsetId&) = default;
  // Offset first, then part of speech: the engine's tie-break order.
  friend bool operator<(const SynsetId& a, const SynsetId& b) noexcept {
    if (a.offset != b.offset) return a.offset < b.offset;
    return static_cast<char>(a.pos) < static_cast<char>(b.pos);
  }
};

struct SynsetIdHash {
  std::size_t operator()(const SynsetId& id) const noexcept {
    return std::hash<std::uint64_t>{}((std::uint64_t{id.offset} << 8) |
                                      static_cast<unsigned char>(id.pos));
  }
};

enum class RelationKind { Hypernym, Hyponym, Meronym, Derived };

const char* relation_name(RelationKind kind) noexcept;
// Maps a wndb pointer symbol onto the relations used here; nullopt for the
// pointer kinds that are not traversed (antonyms, holonyms, similar-to, ...).
std::optional<RelationKind> relation_from_symbol(std::string_view symbol) noexcept;

struct Pointer {
  RelationKind relation;
  SynsetId target;
};

struct Synset {
  SynsetId id;
  std::vector<std::string> lemmas;
  std::string gloss;
  std::vector<Pointer> pointers;
};

// One record of data.<pos>. Pointers are restricted to the four relation
// kinds; other pointer symbols are dropped.
Synset parse_data_line(std::string_view line, PartOfSpeech pos);

class WordNetIndex {
 public:
  // Throws Error(MissingFile) when a database file is absent and
  // Error(ParseError) with file:line context on malformed records.
  static WordNetIndex load(const std::filesystem::path& db_dir);

  // Builds an index from already-parsed synsets (synthetic taxonomies).
  // Lemma senses follow synset offset order.
  static WordNetIndex from_synsets(std::vector<Synset> synsets);

  bool contains(const SynsetId& id) const noexcept { return synsets_.contains(id); }
  const Synset& synset(const SynsetId& id) const;

  // Sense order as listed in index.<pos>; empty when the lemma is unknown.
  const std::vector<SynsetId>& senses(std::string_view lemma, PartOfSpeech pos) const;

  // "feline#n#1" notation or the textual SynsetId form.
  SynsetId resolve(std::string_view text) const;

  const CompoundSet& compounds() const noexcept { return compounds_; }

  // All synsets of one part of speech, ascending by offset.
  const std::vector<SynsetId>& synsets_of(PartOfSpeech pos) const;
  std::size_t size() const noexcept { return synsets_.size(); }

  std::vector<SynsetId> related(const SynsetId& id, RelationKind kind) const;

  // Taxonomy depth with a virtual root above all roots of the part of
  // speech: the virtual root has depth 1, every real root depth 2. Nouns and
  // verbs only.
  int depth(const SynsetId& id) const;
  // Roots of the noun or verb hypernym forest, ascending by offset. One
  // member of each hypernym cycle is treated as a root.
  const std::vector<SynsetId>& roots(PartOfSpeech pos) const;

  // Deepest shared hypernym ancestor (including a and b themselves); nullopt
  // when only the virtual root subsumes both.
  std::optional<SynsetId> lowest_common_subsumer(const SynsetId& a, const SynsetId& b) const;
  // Wu & Palmer similarity: 2 * depth(lcs) / (depth(a) + depth(b)), where
  // depth(a) and depth(b) are measured through the lcs. Always in (0, 1].
  double wup(const SynsetId& a, const SynsetId& b) const;

 private:
  using LemmaKey = std::pair<std::string, PartOfSpeech>;
  struct LemmaKeyHash {
    std::size_t operator()(const LemmaKey& k) const noexcept {
      return std::hash<std::string>{}(k.first) ^ (static_cast<std::size_t>(k.second) << 1);
    }
  };

  void finalize();
  std::unordered_map<SynsetId, int, SynsetIdHash> ancestor_distances(const SynsetId& start) const;
  std::optional<SynsetId> subsumer(const SynsetId& a, const SynsetId& b, int* hops_a,
                                   int* hops_b) const;
  void require_taxonomy(const SynsetId& id) const;

  std::unordered_map<SynsetId, Synset, SynsetIdHash> synsets_;
  std::unordered_map<LemmaKey, std::vector<SynsetId>, LemmaKeyHash> lemma_index_;
  CompoundSet compounds_;
  std::unordered_map<char, std::vector<SynsetId>> by_pos_;
  std::unordered_map<char, std::vector<SynsetId>> roots_;
  std::unordered_map<SynsetId, int, SynsetIdHash> depth_;
};

}  // namespace glossgraft
