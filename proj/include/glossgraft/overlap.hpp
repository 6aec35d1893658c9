#pragma once

// Gloss overlap scoring. Overlaps are found greedily, longest first: the
// longest run of units shared by the unconsumed parts of both sequences is
// recorded and its positions consumed on both sides, so later phrases cannot
// span it. Ties go to the smallest start in the first sequence, then in the
// second. The score is the sum of squared overlap lengths.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace glossgraft {

struct Overlap {
  std::size_t pos_a = 0;
  std::size_t pos_b = 0;
  std::size_t length = 0;

  friend bool operator==(const Overlap&, const Overlap&) = default;
};

struct OverlapScore {
  std::uint64_t total = 0;
  std::vector<Overlap> overlaps;
};

std::vector<Overlap> find_overlaps(std::span<const std::uint32_t> a,
                                   std::span<const std::uint32_t> b);
OverlapScore score(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);

// Total only; avoids materializing the overlap list. Hot path of the engine.
std::uint64_t score_total(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);

std::vector<Overlap> find_overlaps(const std::vector<std::string>& a,
                                   const std::vector<std::string>& b);
OverlapScore score(const std::vector<std::string>& a, const std::vector<std::string>& b);

}  // namespace glossgraft
