#include "mld/ordering.h"

#include <algorithm>
#include <bit>

namespace mld {
namespace {

constexpr std::array<unsigned, kNumSubsets> kCanonicalMasks = {1, 2, 4, 3, 5, 6, 7};

// Subsets listed from level 1 to level 7 for each table row.
constexpr std::array<std::array<unsigned, kNumSubsets>, 8> kTableRows = {{
    {1, 2, 4, 3, 5, 6, 7},
    {1, 2, 4, 3, 6, 5, 7},
    {1, 2, 4, 5, 3, 6, 7},
    {1, 2, 4, 5, 6, 3, 7},
    {1, 2, 4, 6, 3, 5, 7},
    {1, 2, 4, 6, 5, 3, 7},
    {1, 2, 3, 4, 5, 6, 7},
    {1, 2, 3, 4, 6, 5, 7},
}};

LevelAssignment assignment_for_row(std::size_t row) {
  LevelAssignment a;
  for (std::size_t k = 0; k < kNumSubsets; ++k) {
    a.emplace(SubsetId(kTableRows[row][k]), static_cast<Level>(k + 1));
  }
  return a;
}

}  // namespace

SubsetId SubsetId::parse(std::string_view name) {
  for (SubsetId s : all()) {
    if (s.name() == name) return s;
  }
  throw std::invalid_argument("unknown description subset '" + std::string(name) + "'");
}

const std::array<SubsetId, kNumSubsets>& SubsetId::all() {
  static const std::array<SubsetId, kNumSubsets> subsets = {kG1, kG2, kG3, kG12, kG13, kG23, kG123};
  return subsets;
}

int SubsetId::size() const { return std::popcount(mask_); }

int SubsetId::canonical_index() const {
  auto it = std::find(kCanonicalMasks.begin(), kCanonicalMasks.end(), mask_);
  return static_cast<int>(it - kCanonicalMasks.begin());
}

std::string SubsetId::name() const {
  std::string out = "G";
  for (int d = 1; d <= kNumDescriptions; ++d) {
    if (contains(d)) out += static_cast<char>('0' + d);
  }
  return out;
}

SubsetId Ordering::inverse_level(Level k) const {
  if (k < 1 || k > kNumLayers) throw std::out_of_range("level must be in 1..7");
  return SubsetId(mask_by_level_[k]);
}

std::array<Level, kNumSubsets> Ordering::levels() const {
  std::array<Level, kNumSubsets> out{};
  for (SubsetId s : SubsetId::all()) out[s.canonical_index()] = level_of(s);
  return out;
}

Ordering validate_ordering(const LevelAssignment& assignment) {
  if (assignment.size() != kNumSubsets) {
    throw OrderingError(OrderingErrc::kIncompleteAssignment,
                        "ordering must assign a level to all 7 subsets");
  }

  Ordering o;
  for (const auto& [subset, level] : assignment) {
    if (level < 1 || level > kNumLayers || o.mask_by_level_[level] != 0) {
      throw OrderingError(OrderingErrc::kNotBijective,
                          "levels must be a permutation of 1..7 (offending subset " +
                              subset.name() + ")");
    }
    o.level_by_mask_[subset.mask()] = level;
    o.mask_by_level_[level] = subset.mask();
  }

  if (!(o.level_of(kG1) < o.level_of(kG2) && o.level_of(kG2) < o.level_of(kG3))) {
    throw OrderingError(OrderingErrc::kSinglesOutOfOrder,
                        "single-description levels must satisfy G1 < G2 < G3");
  }

  for (SubsetId s : SubsetId::all()) {
    for (SubsetId t : SubsetId::all()) {
      if (s.is_proper_subset_of(t) && !(o.level_of(s) < o.level_of(t))) {
        throw OrderingError(OrderingErrc::kMonotonicityViolated,
                            s.name() + " is contained in " + t.name() +
                                " but does not have a smaller level");
      }
    }
  }

  // Every valid ordering is one of the table rows.
  for (std::size_t row = 0; row < kTableRows.size(); ++row) {
    bool match = true;
    for (std::size_t k = 0; k < kNumSubsets && match; ++k) {
      match = o.mask_by_level_[k + 1] == kTableRows[row][k];
    }
    if (match) {
      o.row_ = static_cast<int>(row + 1);
      break;
    }
  }
  return o;
}

const std::vector<Ordering>& enumerate_orderings() {
  static const std::vector<Ordering> table = [] {
    std::vector<Ordering> out;
    for (std::size_t row = 0; row < kTableRows.size(); ++row) {
      out.push_back(validate_ordering(assignment_for_row(row)));
    }
    return out;
  }();
  return table;
}

const Ordering& ordering_from_row(int row) {
  if (row < 1 || row > 8) {
    throw OrderingError(OrderingErrc::kUnknownRow,
                        "ordering row must be in 1..8, got " + std::to_string(row));
  }
  return enumerate_orderings()[static_cast<std::size_t>(row - 1)];
}

}  // namespace mld
