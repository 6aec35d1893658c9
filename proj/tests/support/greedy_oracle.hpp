#pragma once

// Brute-force reference for greedy overlap matching. Enumerates every
// (start_a, start_b, length) triple on each round; shares no code with the
// library.

#include <cstddef>
#include <cstdint>
#include <tuple>
#include <vector>

namespace oracle {

struct Match {
  std::size_t a, b, len;
};

template <typename T>
std::vector<Match> greedy_matches(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<bool> used_a(a.size(), false), used_b(b.size(), false);
  std::vector<Match> out;
  for (;;) {
    Match best{0, 0, 0};
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        std::size_t len = 0;
        while (i + len < a.size() && j + len < b.size() && !used_a[i + len] &&
               !used_b[j + len] && a[i + len] == b[j + len])
          ++len;
        // Strict '>' over ascending (i, j) keeps the smallest starts on ties.
        if (len > best.len) best = {i, j, len};
      }
    }
    if (best.len == 0) return out;
    for (std::size_t k = 0; k < best.len; ++k) used_a[best.a + k] = used_b[best.b + k] = true;
    out.push_back(best);
  }
}

template <typename T>
std::uint64_t greedy_score(const std::vector<T>& a, const std::vector<T>& b) {
  std::uint64_t total = 0;
  for (const auto& m : greedy_matches(a, b)) total += m.len * m.len;
  return total;
}

}  // namespace oracle
