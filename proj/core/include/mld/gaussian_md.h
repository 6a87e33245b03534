#pragma once

// Inner, outer and parametric outer bounds for the asymmetric three-description
// Gaussian multiple description problem (unit-variance source, squared error,
// rates in bits per symbol).

#include <array>
#include <string>
#include <vector>

#include "mld/errors.h"
#include "mld/ordering.h"

namespace mld {

enum class GaussianErrc {
  kInvalidDistortion,
  kNotNormalized,
  kUnsortedSingles,
  kNonMonotoneNoise,
};
using GaussianError = Error<GaussianErrc>;

inline constexpr double kBoundTolerance = 1e-9;

// Distortion targets D_S in (0, 1], stored in canonical subset order.
class DistortionVector {
 public:
  explicit DistortionVector(const std::array<double, kNumSubsets>& values);

  double operator[](SubsetId s) const { return d_[static_cast<std::size_t>(s.canonical_index())]; }
  const std::array<double, kNumSubsets>& values() const { return d_; }

  bool operator==(const DistortionVector&) const = default;

 private:
  std::array<double, kNumSubsets> d_;
};

// Noise variances d_1 >= ... >= d_6 >= 0 with d_7 = 0.
class NoiseParams {
 public:
  explicit NoiseParams(const std::array<double, 6>& d);

  double operator[](Level i) const { return d_.at(static_cast<std::size_t>(i - 1)); }

 private:
  std::array<double, kNumLayers> d_{};
};

struct BoundConstraint {
  std::array<double, kNumDescriptions> a;
  double b = 0.0;
  std::string tag;
};

struct BoundSet {
  Ordering ordering;
  std::vector<BoundConstraint> constraints;
};

// D~_S = min over nonempty T subset of S of D_T.
DistortionVector normalize_distortions(const DistortionVector& D);

// Levels by decreasing D~_S with ties in canonical order. Throws
// kNotNormalized unless D~ is subset-monotone and kUnsortedSingles unless
// D~_G1 >= D~_G2 >= D~_G3.
Ordering induced_ordering(const DistortionVector& normalized);

// h'_k = 1/2 log2(D_{L^-1(k-1)} / D_{L^-1(k)}) with D_{L^-1(0)} = 1.
std::array<double, kNumLayers> sr_layer_rates(const DistortionVector& normalized, const Ordering& ordering);

// d_i = D~_{L^-1(i)}.
NoiseParams default_noise(const DistortionVector& normalized, const Ordering& ordering);

// Eleven constraints each, in the order singles (x.1..x.3), pairs (x.12, x.13,
// x.23), weighted (x.3.1..3), sum-rate x-4 and x-5, with x = I, O, PO.
BoundSet inner_bound(const DistortionVector& D);
BoundSet outer_bound(const DistortionVector& D);
BoundSet parametric_outer_bound(const DistortionVector& D, const NoiseParams& d);
BoundSet parametric_outer_bound(const DistortionVector& D);

// Inner minus outer right-hand side for each constraint position.
inline constexpr std::array<double, 11> kOuterSlack = {0, 0, 0, 1, 1, 1, 3, 3, 3, 2, 4.5};

struct FacetGap {
  std::string family;  // e.g. "(1,1,0)"
  std::string inner_tag;
  std::string outer_tag;
  double distance = 0.0;
};

struct GapReport {
  std::vector<std::pair<std::string, double>> family_max;  // fixed family order
  std::vector<FacetGap> facets;
  // Reference value for the (1,1,1) family; reported, not derived.
  double reference_111 = 9.0 / (4.0 * 1.7320508075688772);

  double family(const std::string& name) const;
};

std::string normal_family(const std::array<double, kNumDescriptions>& a);

GapReport facet_gap(const DistortionVector& D);

// Non-negative rates meeting every constraint within kBoundTolerance.
bool md_contains(const BoundSet& bound, const std::array<double, kNumDescriptions>& rates);

}  // namespace mld
