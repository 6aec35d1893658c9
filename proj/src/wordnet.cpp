#include "glossgraft/wordnet.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <fstream>
#include <unordered_map>
#include <unordered_set>

#include "glossgraft/error.hpp"
#include "text_util.hpp"

namespace glossgraft {

using detail::parse_number;
using detail::split_ws;
using detail::trim;

char pos_char(PartOfSpeech pos) noexcept { return static_cast<char>(pos); }

std::optional<PartOfSpeech> pos_from_char(char c) noexcept {
  switch (c) {
    case 'n': return PartOfSpeech::Noun;
    case 'v': return PartOfSpeech::Verb;
    case 'a':
    case 's': return PartOfSpeech::Adjective;
    case 'r': return PartOfSpeech::Adverb;
    default: return std::nullopt;
  }
}

PartOfSpeech parse_pos(std::string_view text) {
  text = trim(text);
  if (text.size() == 1) {
    if (auto p = pos_from_char(text[0])) return *p;
  }
  if (text == "noun") return PartOfSpeech::Noun;
  if (text == "verb") return PartOfSpeech::Verb;
  if (text == "adj") return PartOfSpeech::Adjective;
  if (text == "adv") return PartOfSpeech::Adverb;
  throw Error(ErrorCode::InvalidArgument, "unknown part of speech '" + std::string(text) + "'");
}

const char* pos_file_suffix(PartOfSpeech pos) noexcept {
  switch (pos) {
    case PartOfSpeech::Noun: return "noun";
    case PartOfSpeech::Verb: return "verb";
    case PartOfSpeech::Adjective: return "adj";
    case PartOfSpeech::Adverb: return "adv";
  }
  return "";
}

std::string SynsetId::str() const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%08u-%c", offset, pos_char(pos));
  return buf;
}

SynsetId SynsetId::parse(std::string_view text) {
  text = trim(text);
  auto dash = text.rfind('-');
  if (dash == std::string_view::npos || dash + 2 != text.size())
    throw Error(ErrorCode::InvalidArgument, "malformed synset id '" + std::string(text) + "'");
  auto offset = parse_number<std::uint32_t>(text.substr(0, dash));
  auto pos = pos_from_char(text[dash + 1]);
  if (!offset || !pos)
    throw Error(ErrorCode::InvalidArgument, "malformed synset id '" + std::string(text) + "'");
  return SynsetId{*pos, *offset};
}

const char* relation_name(RelationKind kind) noexcept {
  switch (kind) {
    case RelationKind::Hypernym: return "hypernym";
    case RelationKind::Hyponym: return "hyponym";
    case RelationKind::Meronym: return "meronym";
    case RelationKind::Derived: return "derived";
  }
  return "";
}

std::optional<RelationKind> relation_from_symbol(std::string_view symbol) noexcept {
  if (symbol == "@" || symbol == "@i") return RelationKind::Hypernym;
  if (symbol == "~" || symbol == "~i") return RelationKind::Hyponym;
  if (symbol == "%p" || symbol == "%m" || symbol == "%s") return RelationKind::Meronym;
  if (symbol == "+") return RelationKind::Derived;
  return std::nullopt;
}

namespace {

[[noreturn]] void bad_record(const std::string& why) {
  throw Error(ErrorCode::ParseError, why);
}

// data.adj marks some lemmas with a syntactic position: "(a)", "(p)", "(ip)".
std::string strip_adj_marker(std::string_view word) {
  if (!word.empty() && word.back() == ')') {
    auto open = word.rfind('(');
    if (open != std::string_view::npos) word = word.substr(0, open);
  }
  return std::string(word);
}

}  // namespace

Synset parse_data_line(std::string_view line, PartOfSpeech pos) {
  auto bar = line.find('|');
  if (bar == std::string_view::npos) bad_record("missing '|' gloss separator");
  auto fields = split_ws(line.substr(0, bar));
  Synset s;
  s.gloss = std::string(trim(line.substr(bar + 1)));

  std::size_t i = 0;
  auto need = [&](std::size_t n) {
    if (i + n > fields.size()) bad_record("record truncated after field " + std::to_string(i));
  };
  need(4);
  auto offset = parse_number<std::uint32_t>(fields[0]);
  if (!offset) bad_record("invalid synset offset '" + std::string(fields[0]) + "'");
  if (!parse_number<unsigned>(fields[1])) bad_record("invalid lex_filenum");
  auto ss_type = fields[2].size() == 1 ? pos_from_char(fields[2][0]) : std::nullopt;
  if (!ss_type || *ss_type != pos)
    bad_record("synset type '" + std::string(fields[2]) + "' does not match file");
  s.id = SynsetId{pos, *offset};
  auto w_cnt = parse_number<unsigned>(fields[3], 16);
  if (!w_cnt) bad_record("invalid word count");
  if (*w_cnt == 0) bad_record("word count is zero");
  i = 4;
  need(2 * *w_cnt);
  for (unsigned w = 0; w < *w_cnt; ++w, i += 2) {
    if (!parse_number<unsigned>(fields[i + 1], 16)) bad_record("invalid lex_id");
    s.lemmas.push_back(strip_adj_marker(fields[i]));
  }
  need(1);
  auto p_cnt = parse_number<unsigned>(fields[i]);
  if (!p_cnt) bad_record("invalid pointer count");
  ++i;
  need(4 * *p_cnt);
  for (unsigned p = 0; p < *p_cnt; ++p, i += 4) {
    auto target_offset = parse_number<std::uint32_t>(fields[i + 1]);
    auto target_pos = fields[i + 2].size() == 1 ? pos_from_char(fields[i + 2][0]) : std::nullopt;
    if (!target_offset || !target_pos || !parse_number<unsigned>(fields[i + 3], 16))
      bad_record("invalid pointer " + std::to_string(p));
    if (auto kind = relation_from_symbol(fields[i]))
      s.pointers.push_back(Pointer{*kind, SynsetId{*target_pos, *target_offset}});
  }
  // Verb frames (if any) follow; they are not used.
  return s;
}

namespace {

std::ifstream open_db_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MissingFile, "missing WordNet file " + path.string());
  return in;
}

std::string with_context(const std::filesystem::path& path, std::size_t line_no,
                         const std::string& msg) {
  return path.filename().string() + ":" + std::to_string(line_no) + ": " + msg;
}

}  // namespace

WordNetIndex WordNetIndex::load(const std::filesystem::path& db_dir) {
  // Check every file up front so a missing one is reported before any parsing.
  for (auto pos : kAllPos) {
    for (const char* kind : {"data.", "index."}) {
      auto path = db_dir / (std::string(kind) + pos_file_suffix(pos));
      if (!std::filesystem::is_regular_file(path))
        throw Error(ErrorCode::MissingFile, "missing WordNet file " + path.string());
    }
  }

  WordNetIndex index;
  std::string line;
  for (auto pos : kAllPos) {
    auto path = db_dir / (std::string("data.") + pos_file_suffix(pos));
    auto in = open_db_file(path);
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty() || line[0] == ' ') continue;
      try {
        Synset s = parse_data_line(line, pos);
        auto id = s.id;
        index.synsets_.emplace(id, std::move(s));
      } catch (const Error& e) {
        throw Error(ErrorCode::ParseError, with_context(path, line_no, e.what()));
      }
    }
  }

  for (auto pos : kAllPos) {
    auto path = db_dir / (std::string("index.") + pos_file_suffix(pos));
    auto in = open_db_file(path);
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty() || line[0] == ' ') continue;
      auto fields = split_ws(line);
      auto fail = [&](const std::string& msg) {
        throw Error(ErrorCode::ParseError, with_context(path, line_no, msg));
      };
      if (fields.size() < 6) fail("index record too short");
      auto synset_cnt = parse_number<std::size_t>(fields[2]);
      auto p_cnt = parse_number<std::size_t>(fields[3]);
      if (!synset_cnt || !p_cnt) fail("invalid count field");
      // lemma pos synset_cnt p_cnt [symbols] sense_cnt tagsense_cnt [offsets]
      if (fields.size() != 4 + *p_cnt + 2 + *synset_cnt) fail("field count mismatch");
      std::vector<SynsetId> senses;
      senses.reserve(*synset_cnt);
      for (std::size_t k = fields.size() - *synset_cnt; k < fields.size(); ++k) {
        auto off = parse_number<std::uint32_t>(fields[k]);
        if (!off) fail("invalid synset offset");
        SynsetId id{pos, *off};
        if (!index.synsets_.contains(id)) fail("sense " + id.str() + " has no data record");
        senses.push_back(id);
      }
      std::string lemma(fields[0]);
      index.lemma_index_[{std::move(lemma), pos}] = std::move(senses);
    }
  }

  index.finalize();
  return index;
}

WordNetIndex WordNetIndex::from_synsets(std::vector<Synset> synsets) {
  WordNetIndex index;
  std::sort(synsets.begin(), synsets.end(),
            [](const Synset& a, const Synset& b) { return a.id < b.id; });
  for (auto& s : synsets) {
    if (s.lemmas.empty())
      throw Error(ErrorCode::InvalidArgument, "synset " + s.id.str() + " has no lemmas");
    for (const auto& lemma : s.lemmas) {
      auto key = detail::to_lower_ascii(lemma);
      auto& senses = index.lemma_index_[{key, s.id.pos}];
      if (std::find(senses.begin(), senses.end(), s.id) == senses.end()) senses.push_back(s.id);
    }
    auto id = s.id;
    index.synsets_.emplace(id, std::move(s));
  }
  index.finalize();
  return index;
}

void WordNetIndex::finalize() {
  for (const auto& [id, s] : synsets_) {
    for (const auto& p : s.pointers) {
      if (!synsets_.contains(p.target))
        throw Error(ErrorCode::ParseError,
                    "synset " + id.str() + " points to unknown synset " + p.target.str());
    }
    by_pos_[pos_char(id.pos)].push_back(id);
  }
  for (auto& [_, ids] : by_pos_) std::sort(ids.begin(), ids.end());

  std::unordered_set<std::string> compounds;
  for (const auto& [key, _] : lemma_index_)
    if (key.first.find('_') != std::string::npos) compounds.insert(key.first);
  compounds_ = CompoundSet(std::move(compounds));

  // Shortest-path depth: breadth-first from the roots along reversed
  // hypernym edges, so depth(s) = 1 + min over hypernyms.
  for (auto pos : {PartOfSpeech::Noun, PartOfSpeech::Verb}) {
    std::unordered_map<SynsetId, std::vector<SynsetId>, SynsetIdHash> children;
    auto& roots = roots_[pos_char(pos)];
    for (const auto& id : synsets_of(pos)) {
      bool has_hypernym = false;
      for (const auto& p : synsets_.at(id).pointers) {
        if (p.relation != RelationKind::Hypernym || p.target.pos != pos) continue;
        has_hypernym = true;
        children[p.target].push_back(id);
      }
      if (!has_hypernym) roots.push_back(id);
    }
    std::deque<SynsetId> queue;
    auto spread = [&] {
      while (!queue.empty()) {
        auto cur = queue.front();
        queue.pop_front();
        auto it = children.find(cur);
        if (it == children.end()) continue;
        int d = depth_.at(cur) + 1;
        for (const auto& child : it->second) {
          if (depth_.emplace(child, d).second) queue.push_back(child);
        }
      }
    };
    for (const auto& r : roots) {
      depth_[r] = 2;
      queue.push_back(r);
    }
    spread();
    // WordNet 3.0 has hypernym cycles among verbs (restrain/inhibit) that no
    // root reaches. Walk up from the smallest unreached synset until a node
    // repeats, and promote that cycle member to a root.
    for (const auto& id : synsets_of(pos)) {
      if (depth_.contains(id)) continue;
      std::unordered_set<SynsetId, SynsetIdHash> path;
      auto cur = id;
      while (path.insert(cur).second) {
        std::optional<SynsetId> up;
        for (const auto& p : synsets_.at(cur).pointers) {
          if (p.relation == RelationKind::Hypernym && p.target.pos == pos &&
              (!up || p.target < *up))
            up = p.target;
        }
        cur = *up;
      }
      roots.push_back(cur);
      depth_[cur] = 2;
      queue.push_back(cur);
      spread();
    }
    std::sort(roots.begin(), roots.end());
  }
}

const Synset& WordNetIndex::synset(const SynsetId& id) const {
  auto it = synsets_.find(id);
  if (it == synsets_.end()) throw Error(ErrorCode::UnknownSynset, "unknown synset " + id.str());
  return it->second;
}

const std::vector<SynsetId>& WordNetIndex::senses(std::string_view lemma, PartOfSpeech pos) const {
  static const std::vector<SynsetId> kNone;
  auto it = lemma_index_.find({std::string(lemma), pos});
  return it == lemma_index_.end() ? kNone : it->second;
}

SynsetId WordNetIndex::resolve(std::string_view text) const {
  text = trim(text);
  auto parts = detail::split_char(text, '#');
  SynsetId id;
  if (parts.size() == 3) {
    auto pos = parse_pos(parts[1]);
    auto n = parse_number<std::size_t>(parts[2]);
    std::string lemma = detail::to_lower_ascii(parts[0]);
    std::replace(lemma.begin(), lemma.end(), ' ', '_');
    const auto& list = senses(lemma, pos);
    if (!n || *n == 0 || *n > list.size())
      throw Error(ErrorCode::UnknownSynset, "no sense " + std::string(text));
    id = list[*n - 1];
  } else {
    id = SynsetId::parse(text);
  }
  if (!contains(id)) throw Error(ErrorCode::UnknownSynset, "unknown synset " + id.str());
  return id;
}

const std::vector<SynsetId>& WordNetIndex::synsets_of(PartOfSpeech pos) const {
  static const std::vector<SynsetId> kNone;
  auto it = by_pos_.find(pos_char(pos));
  return it == by_pos_.end() ? kNone : it->second;
}

std::vector<SynsetId> WordNetIndex::related(const SynsetId& id, RelationKind kind) const {
  std::vector<SynsetId> out;
  for (const auto& p : synset(id).pointers)
    if (p.relation == kind) out.push_back(p.target);
  return out;
}

void WordNetIndex::require_taxonomy(const SynsetId& id) const {
  if (!contains(id)) throw Error(ErrorCode::UnknownSynset, "unknown synset " + id.str());
  if (id.pos != PartOfSpeech::Noun && id.pos != PartOfSpeech::Verb)
    throw Error(ErrorCode::UnsupportedPos,
                "synset " + id.str() + " has no hypernym taxonomy (nouns and verbs only)");
}

int WordNetIndex::depth(const SynsetId& id) const {
  require_taxonomy(id);
  return depth_.at(id);
}

const std::vector<SynsetId>& WordNetIndex::roots(PartOfSpeech pos) const {
  static const std::vector<SynsetId> kNone;
  auto it = roots_.find(pos_char(pos));
  return it == roots_.end() ? kNone : it->second;
}

std::unordered_map<SynsetId, int, SynsetIdHash> WordNetIndex::ancestor_distances(
    const SynsetId& start) const {
  // Breadth-first, so the first visit records the fewest hypernym hops.
  std::unordered_map<SynsetId, int, SynsetIdHash> dist{{start, 0}};
  std::vector<SynsetId> order{start};
  for (std::size_t k = 0; k < order.size(); ++k) {
    int next = dist.at(order[k]) + 1;
    for (const auto& p : synsets_.at(order[k]).pointers) {
      if (p.relation == RelationKind::Hypernym && p.target.pos == start.pos &&
          dist.emplace(p.target, next).second)
        order.push_back(p.target);
    }
  }
  return dist;
}

std::optional<SynsetId> WordNetIndex::subsumer(const SynsetId& a, const SynsetId& b, int* hops_a,
                                               int* hops_b) const {
  require_taxonomy(a);
  require_taxonomy(b);
  if (a.pos != b.pos)
    throw Error(ErrorCode::UnsupportedPos, "synsets " + a.str() + " and " + b.str() +
                                               " belong to different taxonomies");
  auto up_a = ancestor_distances(a);
  auto up_b = ancestor_distances(b);
  std::optional<SynsetId> best;
  for (const auto& [id, _] : up_b) {
    if (!up_a.contains(id)) continue;
    if (!best || depth_.at(id) > depth_.at(*best) ||
        (depth_.at(id) == depth_.at(*best) && id < *best))
      best = id;
  }
  if (best) {
    if (hops_a) *hops_a = up_a.at(*best);
    if (hops_b) *hops_b = up_b.at(*best);
  }
  return best;
}

std::optional<SynsetId> WordNetIndex::lowest_common_subsumer(const SynsetId& a,
                                                              const SynsetId& b) const {
  return subsumer(a, b, nullptr, nullptr);
}

double WordNetIndex::wup(const SynsetId& a, const SynsetId& b) const {
  if (a == b) {
    require_taxonomy(a);
    return 1.0;
  }
  int hops_a = 0, hops_b = 0;
  auto lcs = subsumer(a, b, &hops_a, &hops_b);
  if (!lcs) return 2.0 / (depth_.at(a) + depth_.at(b));
  // Depths of a and b are taken along their paths through the subsumer.
  // With multiple hypernyms the shortest path to a root can bypass it, and
  // the plain depths would then push the ratio above 1.
  double d = depth_.at(*lcs);
  return 2.0 * d / (2.0 * d + hops_a + hops_b);
}

}  // namespace glossgraft
