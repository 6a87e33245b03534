#pragma once

// Exact A-MLD admissible rate regions over (R1, R2, R3): constraint
// generation for any ordering, regime classification for the chain ordering,
// vertex enumeration and membership.

#include <array>
#include <string>
#include <vector>

#include "mld/errors.h"
#include "mld/linear_form.h"
#include "mld/ordering.h"
#include "mld/rational.h"

namespace mld {

enum class RegionErrc {
  kNegativeEntropy,
  kNotL1,
};
using RegionError = Error<RegionErrc>;

// Per-layer entropies h_1..h_7 in bits per symbol, with cumulative sums
// H_j = h_1 + ... + h_j.
class EntropyProfile {
 public:
  explicit EntropyProfile(std::array<Rational, kNumLayers> layers);

  static EntropyProfile uniform(const Rational& value);

  const Rational& h(int k) const { return h_.at(static_cast<std::size_t>(k - 1)); }
  Rational H(int j) const;
  const std::array<Rational, kNumLayers>& layers() const { return h_; }

  EntropyProfile scaled(const Rational& lambda) const;

 private:
  std::array<Rational, kNumLayers> h_;
};

using RateTriple = std::array<Rational, kNumDescriptions>;

struct LinearInequality {
  std::array<Rational, kNumDescriptions> a;
  Rational b;
  std::string tag;

  Rational lhs(const RateTriple& rates) const;
  bool satisfied_by(const RateTriple& rates) const { return lhs(rates) >= b; }
  bool tight_at(const RateTriple& rates) const { return lhs(rates) == b; }
};

// Right-hand side kept as a linear form over h_1..h_7.
struct SymbolicInequality {
  std::array<Rational, kNumDescriptions> a;
  LinearForm rhs;
  std::string tag;
};

// The region is the set of non-negative triples meeting every constraint.
// All eleven bounds are kept even when some are implied by others.
struct RateRegion {
  Ordering ordering;
  std::vector<LinearInequality> constraints;
};

struct CornerPoint {
  RateTriple rates;
  std::vector<std::string> tight;
  // Catalog names (X1..X10, Y1..Y12, Z1..Z10); several when corners coincide.
  std::vector<std::string> labels;
};

enum class Regime { kI, kII, kIII };

std::string regime_name(Regime r);

// Constraint tags: "Q1".."Q11" for the chain ordering (table row 1), and the
// generic "P1.i", "P2.ij", "P3.i", "P4", "P5" for the other rows.
std::vector<SymbolicInequality> symbolic_mld_region(const Ordering& ordering);

// Eleven inequalities: three single-rate bounds, three pair bounds, three
// weighted bounds 2R_i + R_j + R_k, and two sum-rate bounds.
RateRegion build_mld_region(const Ordering& ordering, const EntropyProfile& profile);

// Chain-ordering regimes, checked in order: I if h3 >= h4 + h5, else II if
// h3 >= h4, else III.
Regime classify_regime(const EntropyProfile& profile);

// Tags for the coordinate planes R_i = 0, as they appear in tight sets.
std::string nonnegativity_tag(int description);

bool contains(const RateRegion& region, const RateTriple& rates);

// Tags of all region constraints and coordinate planes holding with equality.
std::vector<std::string> tight_constraints(const RateRegion& region, const RateTriple& rates);

// All vertices of the region polyhedron, sorted lexicographically by rate.
// Every triple of bounding planes (including R_i = 0) with an invertible
// normal matrix is intersected exactly; feasible points are kept once.
std::vector<CornerPoint> enumerate_corners(const RateRegion& region);

}  // namespace mld
