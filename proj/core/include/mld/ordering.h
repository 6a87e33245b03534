#pragma once

// Description subsets of {G1, G2, G3} and the level orderings that assign each
// decoder (subset) the number of source layers it must reconstruct.

#include <array>
#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mld/errors.h"

namespace mld {

inline constexpr int kNumDescriptions = 3;
inline constexpr int kNumSubsets = 7;
inline constexpr int kNumLayers = 7;

// A nonempty subset of the three descriptions, stored as a 3-bit mask
// (bit d-1 set when description Gd is present).
class SubsetId {
 public:
  constexpr explicit SubsetId(unsigned mask) : mask_(mask) {
    if (mask == 0 || mask > 7) throw std::invalid_argument("subset mask must be in 1..7");
  }

  // Accepts the canonical names "G1", "G2", "G3", "G12", "G13", "G23", "G123".
  static SubsetId parse(std::string_view name);

  // Canonical order G1 < G2 < G3 < G12 < G13 < G23 < G123. Every subset precedes
  // all of its supersets in this order.
  static const std::array<SubsetId, kNumSubsets>& all();

  constexpr unsigned mask() const { return mask_; }
  constexpr bool contains(int description) const { return (mask_ >> (description - 1)) & 1u; }
  constexpr bool is_subset_of(SubsetId other) const { return (mask_ & other.mask_) == mask_; }
  constexpr bool is_proper_subset_of(SubsetId other) const {
    return is_subset_of(other) && mask_ != other.mask_;
  }
  int size() const;
  int canonical_index() const;
  std::string name() const;

  constexpr bool operator==(const SubsetId&) const = default;
  std::strong_ordering operator<=>(const SubsetId& other) const {
    return canonical_index() <=> other.canonical_index();
  }

 private:
  unsigned mask_;
};

inline constexpr SubsetId kG1{1}, kG2{2}, kG3{4}, kG12{3}, kG13{5}, kG23{6}, kG123{7};

constexpr SubsetId single(int description) { return SubsetId(1u << (description - 1)); }
constexpr SubsetId pair(int i, int j) { return SubsetId((1u << (i - 1)) | (1u << (j - 1))); }

using Level = int;
using LevelAssignment = std::map<SubsetId, Level>;

enum class OrderingErrc {
  kIncompleteAssignment,
  kNotBijective,
  kSinglesOutOfOrder,
  kMonotonicityViolated,
  kUnknownRow,
};
using OrderingError = Error<OrderingErrc>;

// A validated level assignment. Value type, compared by its level mapping.
class Ordering {
 public:
  Level level_of(SubsetId s) const { return level_by_mask_[s.mask()]; }
  SubsetId inverse_level(Level k) const;

  // Row of the eight-row ordering table, 1..8. Row 1 is the chain
  // G1 < G2 < G3 < G12 < G13 < G23 < G123.
  int table_row() const { return row_; }

  // Levels in canonical subset order.
  std::array<Level, kNumSubsets> levels() const;

  bool operator==(const Ordering& other) const { return level_by_mask_ == other.level_by_mask_; }

 private:
  friend Ordering validate_ordering(const LevelAssignment& assignment);

  std::array<Level, 8> level_by_mask_{};
  std::array<unsigned, 8> mask_by_level_{};
  int row_ = 0;
};

// Checks that the assignment is a bijection onto 1..7, that singles are ordered
// G1 < G2 < G3, and that S strictly inside T implies level(S) < level(T).
Ordering validate_ordering(const LevelAssignment& assignment);

// The eight valid orderings in table-row order.
const std::vector<Ordering>& enumerate_orderings();

// Throws OrderingError(kUnknownRow) unless 1 <= row <= 8.
const Ordering& ordering_from_row(int row);

inline const Ordering& l1_ordering() { return ordering_from_row(1); }

}  // namespace mld
