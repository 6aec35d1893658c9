#include "glossgraft/overlap.hpp"

#include <algorithm>
#include <unordered_map>

namespace glossgraft {

namespace {

struct Scratch {
  std::vector<std::uint32_t> prev, cur;
  std::vector<char> used_a, used_b;
};

// Runs the greedy matching; visit(overlap) is called for each overlap in
// the order found.
template <typename Visit>
void greedy_overlaps(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                     Visit&& visit) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  if (n == 0 || m == 0) return;

  thread_local Scratch s;
  s.prev.assign(m + 1, 0);
  s.cur.assign(m + 1, 0);
  s.used_a.assign(n, 0);
  s.used_b.assign(m, 0);

  for (;;) {
    std::size_t best_len = 0, best_a = 0, best_b = 0;
    std::fill(s.prev.begin(), s.prev.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      s.cur[0] = 0;
      if (s.used_a[i]) {
        std::fill(s.cur.begin(), s.cur.end(), 0);
      } else {
        const std::uint32_t ai = a[i];
        for (std::size_t j = 0; j < m; ++j) {
          std::uint32_t len = 0;
          if (ai == b[j] && !s.used_b[j]) {
            len = s.prev[j] + 1;
            std::size_t sa = i + 1 - len, sb = j + 1 - len;
            if (len > best_len ||
                (len == best_len && (sa < best_a || (sa == best_a && sb < best_b)))) {
              best_len = len;
              best_a = sa;
              best_b = sb;
            }
          }
          s.cur[j + 1] = len;
        }
      }
      std::swap(s.prev, s.cur);
    }
    if (best_len == 0) return;
    for (std::size_t k = 0; k < best_len; ++k) {
      s.used_a[best_a + k] = 1;
      s.used_b[best_b + k] = 1;
    }
    visit(Overlap{best_a, best_b, best_len});
  }
}

std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> intern(
    const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::unordered_map<std::string, std::uint32_t> ids;
  auto map = [&](const std::vector<std::string>& seq) {
    std::vector<std::uint32_t> out;
    out.reserve(seq.size());
    for (const auto& u : seq)
      out.push_back(ids.try_emplace(u, static_cast<std::uint32_t>(ids.size())).first->second);
    return out;
  };
  auto ia = map(a);
  auto ib = map(b);
  return {std::move(ia), std::move(ib)};
}

}  // namespace

std::vector<Overlap> find_overlaps(std::span<const std::uint32_t> a,
                                   std::span<const std::uint32_t> b) {
  std::vector<Overlap> out;
  greedy_overlaps(a, b, [&](const Overlap& o) { out.push_back(o); });
  return out;
}

OverlapScore score(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  OverlapScore result;
  greedy_overlaps(a, b, [&](const Overlap& o) {
    result.total += static_cast<std::uint64_t>(o.length) * o.length;
    result.overlaps.push_back(o);
  });
  return result;
}

std::uint64_t score_total(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  std::uint64_t total = 0;
  greedy_overlaps(a, b, [&](const Overlap& o) {
    total += static_cast<std::uint64_t>(o.length) * o.length;
  });
  return total;
}

std::vector<Overlap> find_overlaps(const std::vector<std::string>& a,
                                   const std::vector<std::string>& b) {
  auto [ia, ib] = intern(a, b);
  return find_overlaps(std::span<const std::uint32_t>(ia), std::span<const std::uint32_t>(ib));
}

OverlapScore score(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  auto [ia, ib] = intern(a, b);
  return score(std::span<const std::uint32_t>(ia), std::span<const std::uint32_t>(ib));
}

}  // namespace glossgraft
