#pragma once

// The four system recipes: which relations expand a WordNet gloss, which
// token filter applies on each side, truncation, and the matching unit.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "glossgraft/gloss.hpp"
#include "glossgraft/wordnet.hpp"

namespace glossgraft {

enum class VariantName { Duluth1, Duluth2, Duluth3, Duluth4 };

const char* variant_name(VariantName name) noexcept;
VariantName parse_variant_name(std::string_view text);

struct TokenFilter {
  enum class Kind { None, Stoplist, MinLength };
  Kind kind = Kind::None;
  std::size_t min_length = 0;

  static TokenFilter none() { return {}; }
  static TokenFilter stoplist() { return {Kind::Stoplist, 0}; }
  static TokenFilter min_chars(std::size_t k) { return {Kind::MinLength, k}; }

  TokenSeq apply(const TokenSeq& seq, const Stoplist& stop) const;
};

enum class UnitKind { Word, Trigram };

struct VariantConfig {
  VariantName name = VariantName::Duluth2;
  std::vector<RelationKind> expand_relations;
  TokenFilter filter;
  std::optional<std::size_t> truncate_tokens;
  UnitKind unit = UnitKind::Word;
  std::size_t trigram_cap = 0;
  TokenFilter otherdict_filter;
  // Compound marking on the dictionary-entry side; off in all presets.
  bool mark_entry_compounds = false;

  static VariantConfig preset(VariantName name);
  static VariantConfig preset(std::string_view name) { return preset(parse_variant_name(name)); }

  // Overrides the truncation length (duluth1 only).
  VariantConfig with_gloss_size(std::size_t n) const;
};

// A dictionary sense that is not in WordNet.
struct OtherDictEntry {
  std::string id;
  std::string lemma;
  PartOfSpeech pos = PartOfSpeech::Noun;
  std::string gloss;
};

struct Representation {
  std::string sense;  // synset id text or entry id
  VariantName variant = VariantName::Duluth2;
  UnitKind unit = UnitKind::Word;
  std::vector<std::string> units;
};

// Own gloss followed by the glosses of every target of each relation, in the
// given relation order and data-file pointer order, joined by single spaces.
std::string expand_gloss(const WordNetIndex& index, const SynsetId& id,
                         std::span<const RelationKind> relations);

Representation represent_wordnet_sense(const WordNetIndex& index, const SynsetId& id,
                                       const VariantConfig& cfg, const Stoplist& stop);

// compounds is consulted only when cfg.mark_entry_compounds is set.
Representation represent_entry(const OtherDictEntry& entry, const VariantConfig& cfg,
                               const Stoplist& stop, const WordNetIndex* compounds = nullptr);

}  // namespace glossgraft
