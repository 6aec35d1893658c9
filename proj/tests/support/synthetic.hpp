#pragma once

// Small hand-built taxonomies.

#include <stdexcept>
#include <string>
#include <vector>

#include "glossgraft/wordnet.hpp"

namespace synth {

using glossgraft::PartOfSpeech;
using glossgraft::Pointer;
using glossgraft::RelationKind;
using glossgraft::Synset;
using glossgraft::SynsetId;

inline SynsetId n(unsigned offset) { return SynsetId{PartOfSpeech::Noun, offset}; }
inline SynsetId v(unsigned offset) { return SynsetId{PartOfSpeech::Verb, offset}; }

struct Builder {
  std::vector<Synset> synsets;

  Builder& add(SynsetId id, std::vector<std::string> lemmas, std::string gloss) {
    synsets.push_back(Synset{id, std::move(lemmas), std::move(gloss), {}});
    return *this;
  }
  Synset& get(SynsetId id) {
    for (auto& s : synsets)
      if (s.id == id) return s;
    throw std::logic_error("no synset " + id.str());
  }
  // child @ parent and parent ~ child
  Builder& isa(SynsetId child, SynsetId parent) {
    get(child).pointers.push_back(Pointer{RelationKind::Hypernym, parent});
    get(parent).pointers.push_back(Pointer{RelationKind::Hyponym, child});
    return *this;
  }
  Builder& link(SynsetId from, RelationKind kind, SynsetId to) {
    get(from).pointers.push_back(Pointer{kind, to});
    return *this;
  }
  glossgraft::WordNetIndex build() const { return glossgraft::WordNetIndex::from_synsets(synsets); }
};

// r <- a <- b, plus an unrelated root q with child c.
inline glossgraft::WordNetIndex chain() {
  Builder b;
  b.add(n(10), {"root_thing"}, "the top of the chain")
      .add(n(20), {"middle"}, "a thing in the middle")
      .add(n(30), {"leaf"}, "a thing at the bottom")
      .add(n(40), {"other_root"}, "an unrelated top")
      .add(n(50), {"other_leaf"}, "below the unrelated top");
  b.isa(n(20), n(10)).isa(n(30), n(20)).isa(n(50), n(40));
  return b.build();
}

}  // namespace synth
