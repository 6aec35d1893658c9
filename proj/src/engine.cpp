#include "glossgraft/engine.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <unordered_set>

#include "glossgraft/overlap.hpp"
#include "parallel.hpp"
#include "text_util.hpp"

namespace glossgraft {

const char* operation_name(Operation op) noexcept {
  return op == Operation::Merge ? "merge" : "attach";
}

Operation parse_operation(std::string_view text) {
  auto t = detail::trim(text);
  if (t == "merge") return Operation::Merge;
  if (t == "attach") return Operation::Attach;
  throw Error(ErrorCode::InvalidArgument, "unknown operation '" + std::string(t) + "'");
}

const char* provenance_name(Provenance p) noexcept {
  switch (p) {
    case Provenance::Overlap: return "overlap";
    case Provenance::FirstWordFallback: return "first_word_fallback";
    case Provenance::RootFallback: return "root_fallback";
    case Provenance::FirstWordBaseline: return "first_word";
    case Provenance::RandomBaseline: return "random";
  }
  return "";
}

Provenance parse_provenance(std::string_view text) {
  auto t = detail::trim(text);
  for (auto p : {Provenance::Overlap, Provenance::FirstWordFallback, Provenance::RootFallback,
                 Provenance::FirstWordBaseline, Provenance::RandomBaseline}) {
    if (t == provenance_name(p)) return p;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown provenance '" + std::string(t) + "'");
}

BaselineKind parse_baseline_kind(std::string_view text) {
  auto t = detail::trim(text);
  if (t == "first-word" || t == "first_word") return BaselineKind::FirstWord;
  if (t == "random") return BaselineKind::Random;
  throw Error(ErrorCode::InvalidArgument,
              "unknown baseline '" + std::string(t) + "' (expected first-word or random)");
}

CandidatePool CandidatePool::build(const WordNetIndex& index, PartOfSpeech pos,
                                   const VariantConfig& cfg, const Stoplist& stop,
                                   unsigned workers) {
  if (pos != PartOfSpeech::Noun && pos != PartOfSpeech::Verb)
    throw Error(ErrorCode::UnsupportedPos,
                std::string("candidate pools exist for nouns and verbs only, not '") +
                    pos_char(pos) + "'");
  CandidatePool pool;
  pool.pos_ = pos;
  pool.cfg_ = cfg;
  pool.ids_ = index.synsets_of(pos);

  std::vector<std::vector<std::string>> reps(pool.ids_.size());
  detail::parallel_for(reps.size(), workers, [&](std::size_t i) {
    reps[i] = represent_wordnet_sense(index, pool.ids_[i], cfg, stop).units;
  });

  // Sequential interning keeps unit ids independent of the worker count.
  pool.starts_.reserve(reps.size() + 1);
  pool.starts_.push_back(0);
  for (std::size_t c = 0; c < reps.size(); ++c) {
    for (const auto& u : reps[c]) {
      auto [it, inserted] =
          pool.vocab_.try_emplace(u, static_cast<std::uint32_t>(pool.vocab_.size()));
      if (inserted) pool.postings_.emplace_back();
      auto& plist = pool.postings_[it->second];
      if (plist.empty() || plist.back() != c) plist.push_back(static_cast<std::uint32_t>(c));
      pool.units_.push_back(it->second);
    }
    pool.starts_.push_back(pool.units_.size());
    std::vector<std::string>().swap(reps[c]);
  }
  return pool;
}

std::span<const std::uint32_t> CandidatePool::units(std::size_t candidate) const {
  return std::span<const std::uint32_t>(units_).subspan(
      starts_[candidate], starts_[candidate + 1] - starts_[candidate]);
}

std::span<const std::uint32_t> CandidatePool::postings(std::string_view unit) const {
  auto it = vocab_.find(std::string(unit));
  if (it == vocab_.end()) return {};
  return postings_[it->second];
}

std::span<const std::uint32_t> CandidatePool::postings(std::uint32_t unit_id) const {
  if (unit_id >= postings_.size()) return {};
  return postings_[unit_id];
}

std::vector<std::uint32_t> CandidatePool::encode(const std::vector<std::string>& units) const {
  std::vector<std::uint32_t> out;
  out.reserve(units.size());
  std::unordered_map<std::string_view, std::uint32_t> unseen;
  auto next = static_cast<std::uint32_t>(vocab_.size());
  for (const auto& u : units) {
    auto it = vocab_.find(u);
    if (it != vocab_.end()) {
      out.push_back(it->second);
    } else {
      auto [slot, inserted] = unseen.try_emplace(u, next);
      if (inserted) ++next;
      out.push_back(slot->second);
    }
  }
  return out;
}

namespace {

Attachment fallback(const OtherDictEntry& entry, const WordNetIndex& index) {
  try {
    auto a = first_word_baseline(entry, index);
    a.provenance = Provenance::FirstWordFallback;
    return a;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoAttachableWord) throw;
  }
  const auto& roots = index.roots(entry.pos);
  if (roots.empty())
    throw Error(ErrorCode::UnsupportedPos, "no taxonomy root for entry '" + entry.id + "'");
  return Attachment{entry.id, roots.front(), Operation::Merge, 0, Provenance::RootFallback};
}

}  // namespace

Attachment attach_entry(const OtherDictEntry& entry, const CandidatePool& pool,
                        const WordNetIndex& index, const Stoplist& stop,
                        const AttachOptions& options, AttachDiagnostics* diagnostics) {
  if (entry.pos != pool.pos())
    throw Error(ErrorCode::InvalidArgument,
                "entry '" + entry.id + "' has part of speech '" + pos_char(entry.pos) +
                    "' but the pool holds '" + pos_char(pool.pos()) + "'");
  auto rep = represent_entry(entry, pool.config(), stop, &index);
  auto ids = pool.encode(rep.units);

  // Only candidates sharing at least one unit can score above zero.
  std::vector<std::uint32_t> candidates;
  for (auto u : ids) {
    auto plist = pool.postings(u);
    candidates.insert(candidates.end(), plist.begin(), plist.end());
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  if (diagnostics) diagnostics->candidates_scored = candidates.size();

  std::uint64_t best_score = 0;
  std::size_t best = 0;
  // Ascending candidate order is ascending offset, so strict '>' keeps the
  // smallest synset among equal scores.
  for (auto c : candidates) {
    auto s = score_total(pool.units(c), ids);
    if (s > best_score) {
      best_score = s;
      best = c;
    }
  }
  if (best_score == 0) return fallback(entry, index);

  Attachment a{entry.id, pool.id(best), Operation::Merge, best_score, Provenance::Overlap};
  if (options.attach_threshold && static_cast<double>(best_score) < *options.attach_threshold)
    a.operation = Operation::Attach;
  return a;
}

Attachment first_word_baseline(const OtherDictEntry& entry, const WordNetIndex& index) {
  if (detail::trim(entry.gloss).empty())
    throw Error(ErrorCode::EmptyGloss, "entry '" + entry.id + "' has an empty gloss");
  for (const auto& token : tokenize(normalize(entry.gloss))) {
    const auto& senses = index.senses(token, entry.pos);
    if (!senses.empty())
      return Attachment{entry.id, senses.front(), Operation::Merge, 0,
                        Provenance::FirstWordBaseline};
  }
  throw Error(ErrorCode::NoAttachableWord,
              "no gloss word of entry '" + entry.id + "' is a WordNet lemma for its part of speech");
}

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

Attachment random_baseline(const OtherDictEntry& entry, const WordNetIndex& index,
                           std::uint64_t seed) {
  const auto& pool = index.synsets_of(entry.pos);
  if (pool.empty())
    throw Error(ErrorCode::UnsupportedPos,
                std::string("no synsets with part of speech '") + pos_char(entry.pos) + "'");
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(fnv1a(entry.id))));
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  return Attachment{entry.id, pool[pick(rng)], Operation::Merge, 0, Provenance::RandomBaseline};
}

namespace {

struct Slot {
  std::optional<Attachment> attachment;
  std::optional<EntryFailure> failure;
  std::size_t scored = 0;
  std::size_t possible = 0;
};

// Rejects repeated ids; the first occurrence is kept.
std::vector<bool> find_duplicates(std::span<const OtherDictEntry> entries) {
  std::unordered_set<std::string_view> seen;
  std::vector<bool> dup(entries.size(), false);
  for (std::size_t i = 0; i < entries.size(); ++i)
    dup[i] = !seen.insert(entries[i].id).second;
  return dup;
}

BatchResult gather(std::vector<Slot>& slots) {
  BatchResult result;
  result.stats.entries = slots.size();
  for (auto& s : slots) {
    if (s.attachment) result.attachments.push_back(std::move(*s.attachment));
    if (s.failure) result.failures.push_back(std::move(*s.failure));
    result.stats.candidates_scored += s.scored;
    result.stats.candidates_possible += s.possible;
  }
  result.stats.attached = result.attachments.size();
  result.stats.failed = result.failures.size();
  return result;
}

template <typename Attach>
void run_slots(std::span<const OtherDictEntry> entries, std::vector<Slot>& slots,
               unsigned workers, Attach&& attach) {
  auto dup = find_duplicates(entries);
  detail::parallel_for(entries.size(), workers, [&](std::size_t i) {
    const auto& e = entries[i];
    try {
      if (dup[i]) throw Error(ErrorCode::InvalidArgument, "duplicate entry id '" + e.id + "'");
      slots[i].attachment = attach(e, slots[i]);
    } catch (const Error& err) {
      slots[i].failure = EntryFailure{i, e.id, err.code(), err.what()};
    }
  });
}

}  // namespace

BatchResult run_batch(std::span<const OtherDictEntry> entries, const VariantConfig& cfg,
                      const WordNetIndex& index, const Stoplist& stop,
                      const RunOptions& options) {
  auto start = std::chrono::steady_clock::now();
  std::map<char, CandidatePool> pools;
  for (const auto& e : entries) {
    if ((e.pos == PartOfSpeech::Noun || e.pos == PartOfSpeech::Verb) &&
        !pools.contains(pos_char(e.pos)))
      pools.emplace(pos_char(e.pos),
                    CandidatePool::build(index, e.pos, cfg, stop, options.workers));
  }

  std::vector<Slot> slots(entries.size());
  run_slots(entries, slots, options.workers, [&](const OtherDictEntry& e, Slot& slot) {
    auto it = pools.find(pos_char(e.pos));
    if (it == pools.end())
      throw Error(ErrorCode::UnsupportedPos,
                  "entry '" + e.id + "': only nouns and verbs can be attached");
    AttachDiagnostics diag;
    auto a = attach_entry(e, it->second, index, stop, options.attach, &diag);
    slot.scored = diag.candidates_scored;
    slot.possible = it->second.size();
    return a;
  });

  auto result = gather(slots);
  for (const auto& [_, pool] : pools) result.stats.pool_size += pool.size();
  result.stats.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

BatchResult run_baseline(std::span<const OtherDictEntry> entries, BaselineKind kind,
                         const WordNetIndex& index, std::uint64_t seed, unsigned workers) {
  auto start = std::chrono::steady_clock::now();
  std::vector<Slot> slots(entries.size());
  run_slots(entries, slots, workers, [&](const OtherDictEntry& e, Slot&) {
    return kind == BaselineKind::FirstWord ? first_word_baseline(e, index)
                                           : random_baseline(e, index, seed);
  });
  auto result = gather(slots);
  result.stats.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace glossgraft
