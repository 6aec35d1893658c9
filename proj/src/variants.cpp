#include "glossgraft/variants.hpp"

#include "glossgraft/error.hpp"
#include "text_util.hpp"

namespace glossgraft {

const char* variant_name(VariantName name) noexcept {
  switch (name) {
    case VariantName::Duluth1: return "duluth1";
    case VariantName::Duluth2: return "duluth2";
    case VariantName::Duluth3: return "duluth3";
    case VariantName::Duluth4: return "duluth4";
  }
  return "";
}

VariantName parse_variant_name(std::string_view text) {
  auto t = detail::to_lower_ascii(detail::trim(text));
  if (t == "duluth1") return VariantName::Duluth1;
  if (t == "duluth2") return VariantName::Duluth2;
  if (t == "duluth3") return VariantName::Duluth3;
  if (t == "duluth4") return VariantName::Duluth4;
  throw Error(ErrorCode::InvalidArgument,
              "unknown variant '" + std::string(text) + "' (expected duluth1..duluth4)");
}

TokenSeq TokenFilter::apply(const TokenSeq& seq, const Stoplist& stop) const {
  switch (kind) {
    case Kind::None: return seq;
    case Kind::Stoplist: return remove_stopwords(seq, stop);
    case Kind::MinLength: return remove_short(seq, min_length);
  }
  return seq;
}

VariantConfig VariantConfig::preset(VariantName name) {
  using R = RelationKind;
  VariantConfig cfg;
  cfg.name = name;
  switch (name) {
    case VariantName::Duluth1:
      cfg.expand_relations = {R::Hypernym, R::Hyponym, R::Derived, R::Meronym};
      cfg.filter = TokenFilter::min_chars(5);
      cfg.truncate_tokens = 9;
      cfg.otherdict_filter = TokenFilter::min_chars(5);
      break;
    case VariantName::Duluth2:
      cfg.filter = TokenFilter::stoplist();
      cfg.otherdict_filter = TokenFilter::stoplist();
      break;
    case VariantName::Duluth3:
      cfg.expand_relations = {R::Hypernym, R::Hyponym};
      cfg.unit = UnitKind::Trigram;
      cfg.trigram_cap = 250;
      break;
    case VariantName::Duluth4:
      cfg.expand_relations = {R::Hypernym, R::Hyponym};
      cfg.filter = TokenFilter::stoplist();
      cfg.otherdict_filter = TokenFilter::stoplist();
      break;
  }
  return cfg;
}

VariantConfig VariantConfig::with_gloss_size(std::size_t n) const {
  if (name != VariantName::Duluth1)
    throw Error(ErrorCode::InvalidArgument, "gloss size applies to duluth1 only");
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "gloss size must be positive");
  VariantConfig out = *this;
  out.truncate_tokens = n;
  return out;
}

std::string expand_gloss(const WordNetIndex& index, const SynsetId& id,
                         std::span<const RelationKind> relations) {
  const auto& self = index.synset(id);
  std::string text = self.gloss;
  for (auto kind : relations) {
    for (const auto& p : self.pointers) {
      if (p.relation != kind) continue;
      text.push_back(' ');
      text += index.synset(p.target).gloss;
    }
  }
  return text;
}

namespace {

std::vector<std::string> finish_units(TokenSeq tokens, const VariantConfig& cfg) {
  if (cfg.unit == UnitKind::Trigram) return to_trigrams(tokens, cfg.trigram_cap);
  return tokens;
}

}  // namespace

Representation represent_wordnet_sense(const WordNetIndex& index, const SynsetId& id,
                                       const VariantConfig& cfg, const Stoplist& stop) {
  auto tokens = tokenize(normalize(expand_gloss(index, id, cfg.expand_relations)));
  tokens = mark_compounds(tokens, index.compounds());
  tokens = cfg.filter.apply(tokens, stop);
  if (cfg.truncate_tokens) tokens = truncate(tokens, *cfg.truncate_tokens);
  return Representation{id.str(), cfg.name, cfg.unit, finish_units(std::move(tokens), cfg)};
}

Representation represent_entry(const OtherDictEntry& entry, const VariantConfig& cfg,
                               const Stoplist& stop, const WordNetIndex* compounds) {
  if (detail::trim(entry.gloss).empty())
    throw Error(ErrorCode::EmptyGloss, "entry '" + entry.id + "' has an empty gloss");
  auto tokens = tokenize(normalize(entry.gloss));
  if (cfg.mark_entry_compounds && compounds != nullptr)
    tokens = mark_compounds(tokens, compounds->compounds());
  tokens = cfg.otherdict_filter.apply(tokens, stop);
  return Representation{entry.id, cfg.name, cfg.unit, finish_units(std::move(tokens), cfg)};
}

}  // namespace glossgraft
