#include "mld/rate_region.h"

#include <algorithm>
#include <optional>

namespace mld {
namespace {

using Normal = std::array<Rational, kNumDescriptions>;

Normal normal(int c1, int c2, int c3) { return {Rational(c1), Rational(c2), Rational(c3)}; }

Normal unit(int i) {
  Normal n = normal(0, 0, 0);
  n[static_cast<std::size_t>(i - 1)] = 1;
  return n;
}

Rational det3(const std::array<Normal, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Cramer's rule; nullopt when the normals are linearly dependent.
std::optional<RateTriple> intersect(const std::array<const LinearInequality*, 3>& planes) {
  std::array<Normal, 3> m = {planes[0]->a, planes[1]->a, planes[2]->a};
  Rational det = det3(m);
  if (det == 0) return std::nullopt;
  RateTriple x;
  for (std::size_t col = 0; col < 3; ++col) {
    std::array<Normal, 3> mc = m;
    for (std::size_t row = 0; row < 3; ++row) mc[row][col] = planes[row]->b;
    x[col] = det3(mc) / det;
  }
  return x;
}

std::vector<LinearInequality> bounding_planes(const RateRegion& region) {
  std::vector<LinearInequality> planes = region.constraints;
  for (int i = 1; i <= kNumDescriptions; ++i) {
    planes.push_back({unit(i), Rational(0), nonnegativity_tag(i)});
  }
  return planes;
}

}  // namespace

EntropyProfile::EntropyProfile(std::array<Rational, kNumLayers> layers) : h_(std::move(layers)) {
  for (std::size_t k = 0; k < h_.size(); ++k) {
    h_[k].canonicalize();  // mpq_class(p, q) does not reduce
    if (h_[k] < 0) {
      throw RegionError(RegionErrc::kNegativeEntropy,
                        "layer entropy h" + std::to_string(k + 1) + " is negative");
    }
  }
}

EntropyProfile EntropyProfile::uniform(const Rational& value) {
  std::array<Rational, kNumLayers> layers;
  layers.fill(value);
  return EntropyProfile(layers);
}

Rational EntropyProfile::H(int j) const { return LinearForm::cumulative(j).evaluate(h_); }

EntropyProfile EntropyProfile::scaled(const Rational& lambda) const {
  std::array<Rational, kNumLayers> out = h_;
  for (auto& v : out) v *= lambda;
  return EntropyProfile(out);
}

Rational LinearInequality::lhs(const RateTriple& rates) const {
  return a[0] * rates[0] + a[1] * rates[1] + a[2] * rates[2];
}

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::kI: return "I";
    case Regime::kII: return "II";
    case Regime::kIII: return "III";
  }
  return "?";
}

std::string nonnegativity_tag(int description) { return "R" + std::to_string(description) + ">=0"; }

std::vector<SymbolicInequality> symbolic_mld_region(const Ordering& o) {
  const bool chain = o.table_row() == 1;
  auto L = [&](SubsetId s) { return o.level_of(s); };
  auto lmin = [](auto... levels) { return std::min({levels...}); };

  std::vector<SymbolicInequality> out;
  out.reserve(11);
  int q = 0;
  auto tag = [&](std::string generic) {
    ++q;
    return chain ? "Q" + std::to_string(q) : generic;
  };

  for (int i = 1; i <= 3; ++i) {
    out.push_back({unit(i), H(L(single(i))), tag("P1." + std::to_string(i))});
  }

  constexpr std::array<std::array<int, 2>, 3> kPairs = {{{1, 2}, {1, 3}, {2, 3}}};
  for (auto [i, j] : kPairs) {
    Normal a = normal(0, 0, 0);
    a[i - 1] = a[j - 1] = 1;
    LinearForm rhs = H(lmin(L(single(i)), L(single(j)))) + H(L(pair(i, j)));
    out.push_back({a, rhs, tag("P2." + std::to_string(i) + std::to_string(j))});
  }

  for (int i = 1; i <= 3; ++i) {
    int j = i == 1 ? 2 : 1;
    int k = i == 3 ? 2 : 3;
    Normal a = normal(1, 1, 1);
    a[i - 1] = 2;
    LinearForm rhs = H(lmin(L(single(i)), L(single(j)))) + H(lmin(L(single(i)), L(single(k)))) +
                     H(lmin(L(pair(i, j)), L(pair(i, k)))) + H(L(kG123));
    out.push_back({a, rhs, tag("P3." + std::to_string(i))});
  }

  out.push_back({normal(1, 1, 1), H(L(kG1)) + H(lmin(L(kG12), L(kG3))) + H(L(kG123)), tag("P4")});

  const Rational half(1, 2);
  out.push_back({normal(1, 1, 1),
                 H(L(kG1)) + half * H(L(kG2)) + half * H(lmin(L(kG12), L(kG13), L(kG23))) +
                     H(L(kG123)),
                 tag("P5")});
  return out;
}

RateRegion build_mld_region(const Ordering& ordering, const EntropyProfile& profile) {
  RateRegion region{ordering, {}};
  for (const auto& s : symbolic_mld_region(ordering)) {
    region.constraints.push_back({s.a, s.rhs.evaluate(profile.layers()), s.tag});
  }
  return region;
}

Regime classify_regime(const EntropyProfile& e) {
  if (e.h(3) >= e.h(4) + e.h(5)) return Regime::kI;
  if (e.h(3) >= e.h(4)) return Regime::kII;
  return Regime::kIII;
}

bool contains(const RateRegion& region, const RateTriple& rates) {
  for (const auto& r : rates) {
    if (r < 0) return false;
  }
  return std::all_of(region.constraints.begin(), region.constraints.end(),
                     [&](const LinearInequality& c) { return c.satisfied_by(rates); });
}

std::vector<std::string> tight_constraints(const RateRegion& region, const RateTriple& rates) {
  std::vector<std::string> tags;
  for (const auto& plane : bounding_planes(region)) {
    if (plane.tight_at(rates)) tags.push_back(plane.tag);
  }
  return tags;
}

std::vector<CornerPoint> enumerate_corners(const RateRegion& region) {
  const std::vector<LinearInequality> planes = bounding_planes(region);
  std::vector<RateTriple> vertices;

  const std::size_t n = planes.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        auto x = intersect({&planes[i], &planes[j], &planes[k]});
        if (!x) continue;
        bool feasible = std::all_of(planes.begin(), planes.end(),
                                    [&](const LinearInequality& p) { return p.satisfied_by(*x); });
        if (feasible && std::find(vertices.begin(), vertices.end(), *x) == vertices.end()) {
          vertices.push_back(*x);
        }
      }
    }
  }

  std::sort(vertices.begin(), vertices.end());
  std::vector<CornerPoint> corners;
  corners.reserve(vertices.size());
  for (auto& v : vertices) {
    corners.push_back({v, tight_constraints(region, v), {}});
  }
  return corners;
}

}  // namespace mld
