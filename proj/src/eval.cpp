#include "glossgraft/eval.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <set>
#include <unordered_map>

#include <json.hpp>

#include "glossgraft/error.hpp"
#include "parallel.hpp"
#include "text_util.hpp"

namespace glossgraft {

std::vector<GoldEntry> parse_gold(std::istream& in, const WordNetIndex& index) {
  std::vector<GoldEntry> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    auto cols = detail::split_char(line, '\t');
    auto where = "line " + std::to_string(line_no) + ": ";
    if (cols.size() != 3) throw Error(ErrorCode::ParseError, where + "expected 3 tab-separated columns");
    GoldEntry g;
    g.entry_id = std::string(detail::trim(cols[0]));
    try {
      g.operation = parse_operation(cols[1]);
      g.target = index.resolve(cols[2]);
    } catch (const Error& e) {
      throw Error(e.code() == ErrorCode::InvalidArgument ? ErrorCode::ParseError : e.code(),
                  where + e.what());
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<GoldEntry> read_gold(const std::filesystem::path& path, const WordNetIndex& index) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MissingFile, "cannot open gold file " + path.string());
  try {
    return parse_gold(in, index);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

ItemScore score_item(const Attachment& pred, const GoldEntry& gold, const WordNetIndex& index) {
  if (pred.entry_id != gold.entry_id)
    throw Error(ErrorCode::MismatchedId,
                "prediction '" + pred.entry_id + "' scored against gold '" + gold.entry_id + "'");
  const auto& p = index.synset(pred.target);
  const auto& g = index.synset(gold.target);
  ItemScore item{gold.entry_id, 0.0, false};
  if (pred.target == gold.target) {
    item.wup = 1.0;
    item.lemma_match = true;
    return item;
  }
  bool taxonomy = p.id.pos == g.id.pos &&
                  (p.id.pos == PartOfSpeech::Noun || p.id.pos == PartOfSpeech::Verb);
  if (!taxonomy) return item;
  item.wup = index.wup(p.id, g.id);
  for (const auto& a : p.lemmas) {
    auto la = detail::to_lower_ascii(a);
    for (const auto& b : g.lemmas) {
      if (la == detail::to_lower_ascii(b)) item.lemma_match = true;
    }
  }
  return item;
}

double f1_score(double mean_wup, double recall) noexcept {
  if (mean_wup <= 0.0 || recall <= 0.0) return 0.0;
  return 2.0 * mean_wup * recall / (mean_wup + recall);
}

EvalReport aggregate(std::span<const ItemScore> items, std::size_t total_gold) {
  EvalReport r;
  r.per_item.assign(items.begin(), items.end());
  r.answered = items.size();
  r.total_gold = total_gold;
  if (!items.empty()) {
    // Sum in a fixed order so the result does not depend on item order.
    std::vector<double> wups;
    std::size_t matches = 0;
    for (const auto& it : items) {
      wups.push_back(it.wup);
      matches += it.lemma_match ? 1 : 0;
    }
    std::sort(wups.begin(), wups.end());
    double sum = 0.0;
    for (double w : wups) sum += w;
    r.mean_wup = sum / static_cast<double>(items.size());
    r.lemma_match_rate = static_cast<double>(matches) / static_cast<double>(items.size());
  }
  r.recall = total_gold == 0 ? 0.0
                             : static_cast<double>(r.answered) / static_cast<double>(total_gold);
  r.f1 = f1_score(r.mean_wup, r.recall);
  return r;
}

EvalReport evaluate(std::span<const Attachment> predictions, std::span<const GoldEntry> gold,
                    const WordNetIndex& index) {
  std::unordered_map<std::string, const Attachment*> by_id;
  for (const auto& p : predictions) by_id.try_emplace(p.entry_id, &p);
  std::vector<ItemScore> items;
  std::size_t missing = 0, used = 0;
  for (const auto& g : gold) {
    auto it = by_id.find(g.entry_id);
    if (it == by_id.end()) {
      ++missing;
      continue;
    }
    ++used;
    items.push_back(score_item(*it->second, g, index));
  }
  auto report = aggregate(items, gold.size());
  report.missing = missing;
  report.unmatched = by_id.size() - used;
  return report;
}

std::string report_json(const EvalReport& r) {
  nlohmann::ordered_json j;
  j["wu_palmer"] = r.mean_wup;
  j["lemma_match"] = r.lemma_match_rate;
  j["recall"] = r.recall;
  j["f1"] = r.f1;
  j["answered"] = r.answered;
  j["total_gold"] = r.total_gold;
  j["missing"] = r.missing;
  j["unmatched_predictions"] = r.unmatched;
  auto items = nlohmann::ordered_json::array();
  for (const auto& it : r.per_item) {
    nlohmann::ordered_json row;
    row["entry_id"] = it.entry_id;
    row["wup"] = it.wup;
    row["lemma_match"] = it.lemma_match;
    items.push_back(std::move(row));
  }
  j["items"] = std::move(items);
  return j.dump(2) + "\n";
}

std::string report_table(const EvalReport& r, const std::string& title) {
  char buf[256];
  std::string out;
  std::snprintf(buf, sizeof buf, "%-12s %8s %8s %8s %8s\n", "system", "W&P", "Lemma", "Recall",
                "F1");
  out += buf;
  std::snprintf(buf, sizeof buf, "%-12s %8.4f %8.4f %8.4f %8.4f\n",
                title.empty() ? "predictions" : title.c_str(), r.mean_wup, r.lemma_match_rate,
                r.recall, r.f1);
  out += buf;
  if (r.missing || r.unmatched) {
    std::snprintf(buf, sizeof buf, "(%zu gold items unanswered, %zu predictions without gold)\n",
                  r.missing, r.unmatched);
    out += buf;
  }
  return out;
}

std::size_t count_representation_units(const WordNetIndex& index,
                                       std::span<const PartOfSpeech> pos,
                                       const VariantConfig& cfg, const Stoplist& stop,
                                       unsigned workers, bool per_sense) {
  std::vector<SynsetId> ids;
  for (auto p : pos) {
    const auto& list = index.synsets_of(p);
    ids.insert(ids.end(), list.begin(), list.end());
  }
  std::vector<std::size_t> counts(ids.size());
  detail::parallel_for(ids.size(), workers, [&](std::size_t i) {
    counts[i] = represent_wordnet_sense(index, ids[i], cfg, stop).units.size();
    if (per_sense) counts[i] *= index.synset(ids[i]).lemmas.size();
  });
  std::size_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

std::vector<SweepRow> sweep_gloss_size(std::span<const std::size_t> sizes,
                                       std::span<const OtherDictEntry> corpus,
                                       std::span<const GoldEntry> gold, const WordNetIndex& index,
                                       const Stoplist& stop, const SweepOptions& options) {
  std::vector<PartOfSpeech> count_pos = options.count_pos;
  if (count_pos.empty()) {
    std::set<char> seen;
    for (const auto& e : corpus) {
      if ((e.pos == PartOfSpeech::Noun || e.pos == PartOfSpeech::Verb) &&
          seen.insert(pos_char(e.pos)).second)
        count_pos.push_back(e.pos);
    }
    std::sort(count_pos.begin(), count_pos.end());
  }
  std::vector<SweepRow> rows;
  for (auto size : sizes) {
    auto cfg = VariantConfig::preset(VariantName::Duluth1).with_gloss_size(size);
    auto batch = run_batch(corpus, cfg, index, stop, RunOptions{options.workers, {}});
    auto report = evaluate(batch.attachments, gold, index);
    SweepRow row;
    row.gloss_size = size;
    row.token_count = count_representation_units(index, count_pos, cfg, stop, options.workers,
                                                 options.count_per_sense);
    row.mean_wup = report.mean_wup;
    row.lemma_match = report.lemma_match_rate;
    row.recall = report.recall;
    row.f1 = report.f1;
    rows.push_back(row);
  }
  return rows;
}

std::string sweep_json(std::span<const SweepRow> rows) {
  auto j = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["gloss_size"] = r.gloss_size;
    row["token_count"] = r.token_count;
    row["wu_palmer"] = r.mean_wup;
    row["lemma_match"] = r.lemma_match;
    row["recall"] = r.recall;
    row["f1"] = r.f1;
    j.push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

std::string sweep_table(std::span<const SweepRow> rows) {
  char buf[256];
  std::string out;
  std::snprintf(buf, sizeof buf, "%6s %12s %8s %8s %8s\n", "size", "tokens", "W&P", "Lemma", "F1");
  out += buf;
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%6zu %12zu %8.4f %8.4f %8.4f\n", r.gloss_size, r.token_count,
                  r.mean_wup, r.lemma_match, r.f1);
    out += buf;
  }
  return out;
}

}  // namespace glossgraft
