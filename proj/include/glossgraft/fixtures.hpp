#pragma once

// Reference representations of feline#n#1 under each variant, regenerated
// from WordNet 3.0 and compared unit by unit.

#include <optional>
#include <string>
#include <vector>

#include "glossgraft/gloss.hpp"
#include "glossgraft/variants.hpp"
#include "glossgraft/wordnet.hpp"

namespace glossgraft {

inline constexpr const char* kFixtureSense = "feline#n#1";

// Space-separated expected units for the variant.
const char* fixture_expected(VariantName variant) noexcept;

struct FixtureResult {
  VariantName variant = VariantName::Duluth2;
  bool passed = false;
  std::vector<std::string> expected;
  std::vector<std::string> actual;
  std::optional<std::size_t> first_difference;
  std::string message;  // empty on success
};

std::vector<FixtureResult> check_fixtures(const WordNetIndex& index, const Stoplist& stop);

}  // namespace glossgraft
