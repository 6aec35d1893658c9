#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <json.hpp>

#include "glossgraft/eval.hpp"
#include "glossgraft/io.hpp"
#include "shared.hpp"
#include "synthetic.hpp"

using namespace glossgraft;
using synth::n;

namespace {

Attachment pred(std::string id, SynsetId target) {
  return Attachment{std::move(id), target, Operation::Merge, 0, Provenance::Overlap};
}

}  // namespace

TEST_SUITE("eval") {
  TEST_CASE("f1 arithmetic") {
    CHECK(std::abs(f1_score(.2269, 1.0) - .3699) <= 1e-4);
    CHECK(std::abs(f1_score(.3471, 1.0) - .5153) <= 1e-4);
    CHECK(f1_score(1.0, 1.0) == 1.0);
    CHECK(f1_score(0.0, 1.0) == 0.0);
    CHECK(f1_score(0.5, 0.0) == 0.0);
  }

  TEST_CASE("score_item") {
    auto wn = synth::chain();
    GoldEntry g{"x", Operation::Merge, n(30)};
    auto same = score_item(pred("x", n(30)), g, wn);
    CHECK(same.wup == 1.0);
    CHECK(same.lemma_match);
    auto near = score_item(pred("x", n(20)), g, wn);
    CHECK(near.wup == 6.0 / 7.0);
    CHECK_FALSE(near.lemma_match);
    CHECK_THROWS_AS(score_item(pred("y", n(20)), g, wn), Error);
    CHECK_THROWS_AS(score_item(pred("x", n(99)), g, wn), Error);
  }

  TEST_CASE("shared lemma counts as a lemma match") {
    const auto& wn = wordnet30();
    GoldEntry g{"x", Operation::Merge, n(2127808)};  // big_cat, cat
    auto item = score_item(pred("x", wn.resolve("cat#n#1")), g, wn);
    CHECK(item.lemma_match);
    CHECK(item.wup < 1.0);
    CHECK(item.wup > 0.0);
  }

  TEST_CASE("other parts of speech score zero unless identical") {
    const auto& wn = wordnet30();
    auto adj = wn.resolve("feline#a#1");
    GoldEntry g{"x", Operation::Merge, wn.resolve("feline#n#1")};
    CHECK(score_item(pred("x", adj), g, wn).wup == 0.0);
    GoldEntry ga{"x", Operation::Merge, adj};
    CHECK(score_item(pred("x", adj), ga, wn).wup == 1.0);
  }

  TEST_CASE("aggregate") {
    std::vector<ItemScore> items{{"a", 0.2269, false}};
    auto r = aggregate(items, 1);
    CHECK(r.recall == 1.0);
    CHECK(std::abs(r.f1 - .3699) <= 1e-4);
    std::vector<ItemScore> perfect{{"a", 1.0, true}, {"b", 1.0, true}};
    auto p = aggregate(perfect, 2);
    CHECK(p.f1 == 1.0);
    CHECK(p.lemma_match_rate == 1.0);
    auto half = aggregate(perfect, 4);
    CHECK(half.recall == 0.5);
    CHECK(aggregate({}, 0).f1 == 0.0);
  }

  TEST_CASE("aggregate is permutation invariant") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<ItemScore> items;
    for (int i = 0; i < 200; ++i) items.push_back({std::to_string(i), u(rng), rng() % 3 == 0});
    auto base = aggregate(items, 250);
    for (int k = 0; k < 20; ++k) {
      std::shuffle(items.begin(), items.end(), rng);
      auto r = aggregate(items, 250);
      CHECK(r.mean_wup == base.mean_wup);
      CHECK(r.f1 == base.f1);
    }
  }

  TEST_CASE("evaluate") {
    auto wn = synth::chain();
    std::vector<GoldEntry> gold{{"a", Operation::Merge, n(30)}, {"b", Operation::Attach, n(20)}};
    std::vector<Attachment> identity{pred("a", n(30)), pred("b", n(20))};
    auto r = evaluate(identity, gold, wn);
    CHECK(r.mean_wup == 1.0);
    CHECK(r.lemma_match_rate == 1.0);
    CHECK(r.f1 == 1.0);
    std::vector<Attachment> partial{pred("a", n(20)), pred("zzz", n(10))};
    auto m = evaluate(partial, gold, wn);
    CHECK(m.answered == 1);
    CHECK(m.missing == 1);
    CHECK(m.unmatched == 1);
    CHECK(m.recall == 0.5);
    CHECK(m.mean_wup == 6.0 / 7.0);
  }

  TEST_CASE("gold files") {
    const auto& wn = wordnet30();
    std::istringstream in("# header\nx1\tmerge\t02120997-n\nx2\tattach\tcat#n#1\n\n");
    auto gold = parse_gold(in, wn);
    REQUIRE(gold.size() == 2);
    CHECK(gold[1].operation == Operation::Attach);
    CHECK(gold[1].target == wn.resolve("cat#n#1"));
    std::istringstream bad("x1\tmerge\n");
    CHECK_THROWS_AS(parse_gold(bad, wn), Error);
    std::istringstream unknown("x1\tmerge\t99999999-n\n");
    try {
      parse_gold(unknown, wn);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::UnknownSynset);
    }
    CHECK(read_gold(paths::gold, wn).size() == 50);
  }

  TEST_CASE("report formats") {
    auto wn = synth::chain();
    std::vector<GoldEntry> gold{{"a", Operation::Merge, n(30)}};
    auto r = evaluate(std::vector<Attachment>{pred("a", n(20))}, gold, wn);
    auto j = nlohmann::json::parse(report_json(r));
    for (const char* key : {"wu_palmer", "lemma_match", "recall", "f1", "answered", "total_gold",
                            "missing", "unmatched_predictions", "items"})
      CHECK(j.contains(key));
    CHECK(j["items"][0]["entry_id"] == "a");
    auto table = report_table(r, "duluth2");
    CHECK(table.find("duluth2") != std::string::npos);
    CHECK(table.find("0.8571") != std::string::npos);
  }

  TEST_CASE("gloss-size sweep on the mini-corpus") {
    const auto& wn = wordnet30();
    auto entries = read_entries(paths::entries);
    auto gold = read_gold(paths::gold, wn);
    std::vector<std::size_t> sizes{1, 5, 9};
    auto rows = sweep_gloss_size(sizes, entries, gold, wn, stoplist(), {4, {}, true});
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].token_count <= rows[1].token_count);
    CHECK(rows[1].token_count <= rows[2].token_count);
    for (const auto& r : rows) CHECK(r.recall == 1.0);
    auto j = nlohmann::json::parse(sweep_json(rows));
    CHECK(j.size() == 3);
    CHECK(j[2]["gloss_size"] == 9);
    CHECK(sweep_table(rows).find("tokens") != std::string::npos);
  }

  TEST_CASE("token counting") {
    synth::Builder b;
    b.add(n(1), {"one", "uno"}, "alpha bravo charlie deltas").add(n(2), {"two"}, "echoes foxtrot");
    auto wn = b.build();
    auto d1 = VariantConfig::preset(VariantName::Duluth1);
    std::vector<PartOfSpeech> nouns{PartOfSpeech::Noun};
    CHECK(count_representation_units(wn, nouns, d1, Stoplist{}, 1, false) == 6);
    CHECK(count_representation_units(wn, nouns, d1, Stoplist{}, 2, true) == 10);
    CHECK(count_representation_units(wn, nouns, d1.with_gloss_size(1), Stoplist{}, 1, false) == 2);
  }
}
