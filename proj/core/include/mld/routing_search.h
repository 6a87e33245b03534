#pragma once

// Exhaustive search over concatenation-only (routing) schemes for the chain
// ordering: every description carries plain copies of source bits, and a
// decoder recovers exactly the bits present in the descriptions it receives.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "mld/codec.h"

namespace mld {

struct RoutingSearchResult {
  bool feasible = false;
  // For a feasible search: per stream, the description mask (bit d-1 for Gd)
  // carrying each bit.
  std::optional<std::array<std::vector<unsigned>, kNumLayers>> placement;
  std::uint64_t nodes = 0;
};

// Decides whether some routing scheme with description sizes at most
// `capacity` bits lets every decoder S recover streams 1..L(S). Bits of one
// stream are interchangeable, so placements are enumerated as multisets.
RoutingSearchResult search_routing_scheme(const StreamLengths& lengths,
                                          const std::array<std::uint64_t, kNumDescriptions>& capacity);

}  // namespace mld
