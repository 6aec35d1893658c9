#include "glossgraft/fixtures.hpp"

#include <algorithm>

#include "glossgraft/error.hpp"

namespace glossgraft {

const char* fixture_expected(VariantName variant) noexcept {
  switch (variant) {
    case VariantName::Duluth1:
      return "various lithe bodied roundheaded fissiped mammals retractile claws terrestrial";
    case VariantName::Duluth2:
      return "lithe bodied roundheaded fissiped mammals retractile claws";
    case VariantName::Duluth3:
      return "any ofv ari ous lit heb odi edr oun dhe ade dfi ssi ped mam mal sma nyw ith ret "
             "rac til ecl aws ate rre str ial ora qua tic fle she ati ngm amm alt err est ria "
             "lca rni vor esh ave fou ror fiv ecl awe ddi git son eac hli mbf eli nem amm alu "
             "sua lly hav ing thi cks oft fur and noa bil ity tor oar dom est icc ats wil dca "
             "tsa nyo fse ver all arg eca tst ypi cal lya ble tor oar and liv ing int hew ild";
    case VariantName::Duluth4:
      return "lithe bodied roundheaded fissiped mammals retractile claws terrestrial aquatic "
             "flesh eating mammal terrestrial carnivores four five clawed digits limb feline "
             "mammal having thick soft fur ability roar domestic cats wildcats several large "
             "cats typically able roar living wild";
  }
  return "";
}

namespace {

std::string context(const std::vector<std::string>& units, std::size_t at) {
  std::string out;
  std::size_t from = at >= 3 ? at - 3 : 0;
  std::size_t to = std::min(units.size(), at + 4);
  for (std::size_t i = from; i < to; ++i) {
    if (!out.empty()) out.push_back(' ');
    if (i == at) out += "[" + units[i] + "]";
    else out += units[i];
  }
  if (at >= units.size()) out += " [<end>]";
  return out;
}

}  // namespace

std::vector<FixtureResult> check_fixtures(const WordNetIndex& index, const Stoplist& stop) {
  std::vector<FixtureResult> results;
  SynsetId id;
  bool resolved = true;
  std::string resolve_error;
  try {
    id = index.resolve(kFixtureSense);
  } catch (const Error& e) {
    resolved = false;
    resolve_error = e.what();
  }
  for (auto variant : {VariantName::Duluth2, VariantName::Duluth1, VariantName::Duluth4,
                       VariantName::Duluth3}) {
    FixtureResult r;
    r.variant = variant;
    r.expected = tokenize(fixture_expected(variant));
    if (!resolved) {
      r.message = resolve_error;
      results.push_back(std::move(r));
      continue;
    }
    r.actual = represent_wordnet_sense(index, id, VariantConfig::preset(variant), stop).units;
    auto mismatch = std::mismatch(r.expected.begin(), r.expected.end(), r.actual.begin(),
                                  r.actual.end());
    if (mismatch.first == r.expected.end() && mismatch.second == r.actual.end()) {
      r.passed = true;
    } else {
      auto at = static_cast<std::size_t>(mismatch.first - r.expected.begin());
      r.first_difference = at;
      r.message = "unit " + std::to_string(at) + ": expected " + context(r.expected, at) +
                  " got " + context(r.actual, at);
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace glossgraft
