#pragma once

// Gloss preprocessing: normalization, tokenization, compound marking and the
// token filters that the system variants compose.

#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace glossgraft {

// Lowercase tokens over [a-z0-9_]; underscores only come from compound marking.
using TokenSeq = std::vector<std::string>;
// Fixed-width three-character units.
using TrigramSeq = std::vector<std::string>;

class Stoplist {
 public:
  Stoplist() = default;
  explicit Stoplist(std::unordered_set<std::string> words) : words_(std::move(words)) {}

  // One lowercase word per line, '#' starts a comment line. Lines in the NSP
  // regex format (/^word$/) are accepted and converted on the fly.
  static Stoplist load(const std::filesystem::path& path);

  bool contains(std::string_view word) const { return words_.contains(std::string(word)); }
  std::size_t size() const noexcept { return words_.size(); }
  const std::unordered_set<std::string>& words() const noexcept { return words_; }

 private:
  std::unordered_set<std::string> words_;
};

struct NspConversion {
  std::vector<std::string> words;    // in file order, deduplicated
  std::vector<std::string> skipped;  // patterns that are not a single literal word
};

// Converts the regex stoplist format of the Ngram Statistics Package
// ("/^word$/", "/\bword\b/", case classes such as "[aA]") to plain words.
NspConversion convert_nsp_stoplist(std::istream& in);

// Non-alphanumeric characters become spaces, the result is lowercased and
// runs of spaces collapse to one. Leading/trailing spaces are dropped.
std::string normalize(std::string_view text);

TokenSeq tokenize(std::string_view normalized);

// Multiword lemmas ("light_year"), plus every underscore-joined leading part
// of one so a scan can stop as soon as a window cannot grow into a compound.
class CompoundSet {
 public:
  CompoundSet() = default;
  explicit CompoundSet(std::unordered_set<std::string> words);

  bool contains(const std::string& word) const { return words_.contains(word); }
  // "new" and "new_york" both extend "new_york_city".
  bool extends(const std::string& prefix) const { return prefixes_.contains(prefix); }
  std::size_t max_parts() const noexcept { return max_parts_; }
  std::size_t size() const noexcept { return words_.size(); }
  const std::unordered_set<std::string>& words() const noexcept { return words_; }

 private:
  std::unordered_set<std::string> words_;
  std::unordered_set<std::string> prefixes_;
  std::size_t max_parts_ = 1;
};

// Greedy longest match, left to right: the longest window of consecutive
// tokens whose underscore-join is a known compound is fused into one token.
TokenSeq mark_compounds(const TokenSeq& seq, const CompoundSet& compounds);

// Drops stop words and single-character tokens. Compound tokens are kept.
TokenSeq remove_stopwords(const TokenSeq& seq, const Stoplist& stop);

// Keeps tokens with at least min_len characters.
TokenSeq remove_short(const TokenSeq& seq, std::size_t min_len);

TokenSeq truncate(const TokenSeq& seq, std::size_t n);

// Concatenates the tokens without separators and cuts the text into
// consecutive three-character units. A trailing one- or two-character
// residue is discarded; at most cap units are kept.
TrigramSeq to_trigrams(const TokenSeq& seq, std::size_t cap);

}  // namespace glossgraft
