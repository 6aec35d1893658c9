#include "glossgraft/gloss.hpp"

#include <algorithm>
#include <fstream>

#include "glossgraft/error.hpp"
#include "text_util.hpp"

namespace glossgraft {

namespace {

bool is_alnum_ascii(char c) noexcept {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

// "/^word$/" -> "word"; "[aA]bout" -> "about". Returns empty on anything
// that is not a single literal word.
std::string nsp_pattern_word(std::string_view pattern) {
  if (pattern.size() < 2 || pattern.front() != '/' || pattern.back() != '/') return {};
  pattern = pattern.substr(1, pattern.size() - 2);
  auto strip = [&](std::string_view prefix, std::string_view suffix) {
    if (pattern.starts_with(prefix) && pattern.ends_with(suffix) &&
        pattern.size() >= prefix.size() + suffix.size()) {
      pattern = pattern.substr(prefix.size(), pattern.size() - prefix.size() - suffix.size());
      return true;
    }
    return false;
  };
  if (!strip("^", "$")) strip("\\b", "\\b");

  std::string word;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    char c = pattern[i];
    if (c == '[') {
      auto close = pattern.find(']', i);
      if (close == std::string_view::npos || close == i + 1) return {};
      auto cls = pattern.substr(i + 1, close - i - 1);
      // Only case classes like [aA] reduce to a single letter.
      auto lower = detail::to_lower_ascii(cls);
      if (std::any_of(lower.begin(), lower.end(), [&](char x) { return x != lower[0]; }))
        return {};
      word.push_back(lower[0]);
      i = close;
    } else if (is_alnum_ascii(c) || c == '\'' || c == '-' || c == '_') {
      word.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
    } else {
      return {};
    }
  }
  return word;
}

}  // namespace

NspConversion convert_nsp_stoplist(std::istream& in) {
  NspConversion out;
  std::unordered_set<std::string> seen;
  std::string line;
  while (std::getline(in, line)) {
    auto t = detail::trim(line);
    if (t.empty() || t.front() == '#' || t.front() == '@') continue;
    auto word = nsp_pattern_word(t);
    if (word.empty()) {
      out.skipped.emplace_back(t);
      continue;
    }
    if (seen.insert(word).second) out.words.push_back(std::move(word));
  }
  return out;
}

Stoplist Stoplist::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MissingFile, "cannot open stoplist " + path.string());
  std::unordered_set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    auto t = detail::trim(line);
    if (t.empty() || t.front() == '#' || t.front() == '@') continue;
    if (t.front() == '/') {
      auto w = nsp_pattern_word(t);
      if (!w.empty()) words.insert(std::move(w));
      continue;
    }
    words.insert(detail::to_lower_ascii(t));
  }
  return Stoplist(std::move(words));
}

std::string normalize(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    if (is_alnum_ascii(c)) {
      if (pending_space && !out.empty()) out.push_back(' ');
      pending_space = false;
      out.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
    } else {
      pending_space = true;
    }
  }
  return out;
}

TokenSeq tokenize(std::string_view normalized) {
  TokenSeq out;
  for (auto piece : detail::split_char(normalized, ' '))
    if (!piece.empty()) out.emplace_back(piece);
  return out;
}

CompoundSet::CompoundSet(std::unordered_set<std::string> words) : words_(std::move(words)) {
  for (const auto& w : words_) {
    std::size_t parts = 1;
    for (std::size_t at = w.find('_'); at != std::string::npos; at = w.find('_', at + 1)) {
      prefixes_.insert(w.substr(0, at));
      ++parts;
    }
    prefixes_.insert(w);
    max_parts_ = std::max(max_parts_, parts);
  }
}

TokenSeq mark_compounds(const TokenSeq& seq, const CompoundSet& compounds) {
  TokenSeq out;
  out.reserve(seq.size());
  std::string joined;
  std::size_t i = 0;
  while (i < seq.size()) {
    std::size_t best = 1;
    std::size_t limit = std::min(compounds.max_parts(), seq.size() - i);
    if (limit >= 2 && compounds.extends(seq[i])) {
      joined = seq[i];
      for (std::size_t len = 2; len <= limit; ++len) {
        joined.push_back('_');
        joined += seq[i + len - 1];
        if (!compounds.extends(joined)) break;
        if (compounds.contains(joined)) best = len;
      }
    }
    if (best == 1) {
      out.push_back(seq[i]);
    } else {
      std::string fused = seq[i];
      for (std::size_t k = 1; k < best; ++k) {
        fused.push_back('_');
        fused += seq[i + k];
      }
      out.push_back(std::move(fused));
    }
    i += best;
  }
  return out;
}

TokenSeq remove_stopwords(const TokenSeq& seq, const Stoplist& stop) {
  TokenSeq out;
  for (const auto& t : seq) {
    bool compound = t.find('_') != std::string::npos;
    if (compound || (t.size() > 1 && !stop.contains(t))) out.push_back(t);
  }
  return out;
}

TokenSeq remove_short(const TokenSeq& seq, std::size_t min_len) {
  TokenSeq out;
  for (const auto& t : seq)
    if (t.size() >= min_len) out.push_back(t);
  return out;
}

TokenSeq truncate(const TokenSeq& seq, std::size_t n) {
  return TokenSeq(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(std::min(n, seq.size())));
}

TrigramSeq to_trigrams(const TokenSeq& seq, std::size_t cap) {
  std::string text;
  for (const auto& t : seq) text += t;
  TrigramSeq out;
  for (std::size_t i = 0; i + 3 <= text.size() && out.size() < cap; i += 3)
    out.push_back(text.substr(i, 3));
  return out;
}

}  // namespace glossgraft
