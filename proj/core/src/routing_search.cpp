#include "mld/routing_search.h"

namespace mld {
namespace {

struct Search {
  std::array<std::vector<unsigned>, kNumLayers> allowed;  // masks usable for a bit of stream k
  StreamLengths lengths{};
  std::array<std::uint64_t, kNumDescriptions> capacity{};
  std::array<std::uint64_t, kNumDescriptions> used{};
  std::array<std::vector<unsigned>, kNumLayers> chosen;
  std::uint64_t nodes = 0;

  // Place bit `i` of stream `k`, choosing masks in non-decreasing index order
  // within a stream.
  bool place(std::size_t k, std::uint64_t i, std::size_t min_index) {
    ++nodes;
    if (k == kNumLayers) return true;
    if (i == lengths[k]) return place(k + 1, 0, 0);
    for (std::size_t m = min_index; m < allowed[k].size(); ++m) {
      const unsigned mask = allowed[k][m];
      bool fits = true;
      for (std::size_t d = 0; d < kNumDescriptions; ++d) {
        if (((mask >> d) & 1U) && used[d] + 1 > capacity[d]) fits = false;
      }
      if (!fits) continue;
      for (std::size_t d = 0; d < kNumDescriptions; ++d) used[d] += (mask >> d) & 1U;
      chosen[k].push_back(mask);
      if (place(k, i + 1, m)) return true;
      chosen[k].pop_back();
      for (std::size_t d = 0; d < kNumDescriptions; ++d) used[d] -= (mask >> d) & 1U;
    }
    return false;
  }
};

}  // namespace

RoutingSearchResult search_routing_scheme(const StreamLengths& lengths,
                                          const std::array<std::uint64_t, kNumDescriptions>& capacity) {
  const Ordering& order = l1_ordering();
  Search s;
  s.lengths = lengths;
  s.capacity = capacity;
  for (int k = 1; k <= kNumLayers; ++k) {
    // A bit of stream k must appear in every decoder subset of level >= k.
    for (unsigned mask = 0; mask < 8; ++mask) {
      bool ok = true;
      for (const SubsetId& sub : SubsetId::all()) {
        if (order.level_of(sub) >= k && (mask & sub.mask()) == 0) ok = false;
      }
      if (ok) s.allowed[static_cast<std::size_t>(k - 1)].push_back(mask);
    }
  }
  RoutingSearchResult result;
  result.feasible = s.place(0, 0, 0);
  result.nodes = s.nodes;
  if (result.feasible) result.placement = s.chosen;
  return result;
}

}  // namespace mld
