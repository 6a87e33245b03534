#include "mld/gaussian_md.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace mld {
namespace {

constexpr std::array<std::array<int, 2>, 3> kPairs = {{{1, 2}, {1, 3}, {2, 3}}};

std::array<int, 2> others(int i) {
  return i == 1 ? std::array{2, 3} : i == 2 ? std::array{1, 3} : std::array{1, 2};
}

std::array<double, 3> unit(int i) {
  std::array<double, 3> a{};
  a[static_cast<std::size_t>(i - 1)] = 1;
  return a;
}

std::array<double, 3> pair_normal(int i, int j) {
  std::array<double, 3> a{};
  a[static_cast<std::size_t>(i - 1)] = a[static_cast<std::size_t>(j - 1)] = 1;
  return a;
}

std::array<double, 3> weighted_normal(int i) {
  std::array<double, 3> a{1, 1, 1};
  a[static_cast<std::size_t>(i - 1)] = 2;
  return a;
}

std::vector<std::string> tags(const std::string& prefix) {
  return {prefix + "-1.1", prefix + "-1.2", prefix + "-1.3", prefix + "-2.12", prefix + "-2.13", prefix + "-2.23",
          prefix + "-3.1", prefix + "-3.2", prefix + "-3.3", prefix + "-4",    prefix + "-5"};
}

std::vector<std::array<double, 3>> normals() {
  std::vector<std::array<double, 3>> out;
  for (int i = 1; i <= 3; ++i) out.push_back(unit(i));
  for (auto [i, j] : kPairs) out.push_back(pair_normal(i, j));
  for (int i = 1; i <= 3; ++i) out.push_back(weighted_normal(i));
  out.push_back({1, 1, 1});
  out.push_back({1, 1, 1});
  return out;
}

BoundSet assemble(const Ordering& o, const std::string& prefix, const std::vector<double>& rhs) {
  BoundSet out{o, {}};
  const auto n = normals();
  const auto t = tags(prefix);
  for (std::size_t i = 0; i < rhs.size(); ++i) out.constraints.push_back({n[i], rhs[i], t[i]});
  return out;
}

double lg(double x) { return std::log2(x); }

std::vector<double> inner_rhs(const DistortionVector& Dt, const Ordering&) {
  auto R = [&](SubsetId s) { return 0.5 * lg(1.0 / Dt[s]); };
  std::vector<double> out;
  for (int i = 1; i <= 3; ++i) out.push_back(R(single(i)));
  for (auto [i, j] : kPairs) out.push_back(std::min(R(single(i)), R(single(j))) + R(pair(i, j)));
  for (int i = 1; i <= 3; ++i) {
    const auto [j, k] = others(i);
    out.push_back(std::min(R(single(i)), R(single(j))) + std::min(R(single(i)), R(single(k))) +
                  std::min(R(pair(i, j)), R(pair(i, k))) + R(kG123));
  }
  out.push_back(R(kG1) + std::min(R(kG12), R(kG3)) + R(kG123));
  out.push_back(R(kG1) + 0.5 * R(kG2) + 0.5 * std::min({R(kG12), R(kG13), R(kG23)}) + R(kG123));
  return out;
}

}  // namespace

DistortionVector::DistortionVector(const std::array<double, kNumSubsets>& values) : d_(values) {
  for (std::size_t i = 0; i < d_.size(); ++i) {
    if (!(d_[i] > 0.0 && d_[i] <= 1.0)) {
      std::ostringstream msg;
      msg << "distortion for " << SubsetId::all()[i].name() << " must lie in (0, 1], got " << d_[i];
      throw GaussianError(GaussianErrc::kInvalidDistortion, msg.str());
    }
  }
}

NoiseParams::NoiseParams(const std::array<double, 6>& d) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!(d[i] >= 0.0) || (i > 0 && d[i] > d[i - 1])) {
      throw GaussianError(GaussianErrc::kNonMonotoneNoise, "noise variances must be non-negative and non-increasing");
    }
    d_[i] = d[i];
  }
  d_[6] = 0.0;
}

DistortionVector normalize_distortions(const DistortionVector& D) {
  std::array<double, kNumSubsets> out{};
  for (const SubsetId& s : SubsetId::all()) {
    double m = D[s];
    for (const SubsetId& t : SubsetId::all()) {
      if (t.is_subset_of(s)) m = std::min(m, D[t]);
    }
    out[static_cast<std::size_t>(s.canonical_index())] = m;
  }
  return DistortionVector(out);
}

Ordering induced_ordering(const DistortionVector& Dt) {
  for (const SubsetId& s : SubsetId::all()) {
    for (const SubsetId& t : SubsetId::all()) {
      if (t.is_subset_of(s) && Dt[s] > Dt[t]) {
        throw GaussianError(GaussianErrc::kNotNormalized,
                            "distortions are not normalized: D_" + s.name() + " > D_" + t.name());
      }
    }
  }
  if (Dt[kG1] < Dt[kG2] || Dt[kG2] < Dt[kG3]) {
    throw GaussianError(GaussianErrc::kUnsortedSingles, "single-description distortions must satisfy D_G1 >= D_G2 >= D_G3");
  }
  std::array<SubsetId, kNumSubsets> order = SubsetId::all();
  std::stable_sort(order.begin(), order.end(), [&](SubsetId a, SubsetId b) { return Dt[a] > Dt[b]; });
  LevelAssignment levels;
  for (std::size_t i = 0; i < order.size(); ++i) levels[order[i]] = static_cast<Level>(i + 1);
  return validate_ordering(levels);
}

std::array<double, kNumLayers> sr_layer_rates(const DistortionVector& Dt, const Ordering& o) {
  std::array<double, kNumLayers> out{};
  double prev = 1.0;
  for (Level k = 1; k <= kNumLayers; ++k) {
    const double cur = Dt[o.inverse_level(k)];
    out[static_cast<std::size_t>(k - 1)] = std::max(0.0, 0.5 * lg(prev / cur));
    prev = cur;
  }
  return out;
}

NoiseParams default_noise(const DistortionVector& Dt, const Ordering& o) {
  std::array<double, 6> d{};
  for (Level i = 1; i <= 6; ++i) d[static_cast<std::size_t>(i - 1)] = Dt[o.inverse_level(i)];
  return NoiseParams(d);
}

BoundSet inner_bound(const DistortionVector& D) {
  const DistortionVector Dt = normalize_distortions(D);
  const Ordering o = induced_ordering(Dt);
  return assemble(o, "I", inner_rhs(Dt, o));
}

BoundSet outer_bound(const DistortionVector& D) {
  const DistortionVector Dt = normalize_distortions(D);
  const Ordering o = induced_ordering(Dt);
  auto rhs = inner_rhs(Dt, o);
  for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] -= kOuterSlack[i];
  return assemble(o, "O", rhs);
}

BoundSet parametric_outer_bound(const DistortionVector& D, const NoiseParams& d) {
  const DistortionVector Dt = normalize_distortions(D);
  const Ordering o = induced_ordering(Dt);
  auto L = [&](SubsetId s) { return o.level_of(s); };
  // (1 + d_k) / (D_S + d_k)
  auto f = [&](SubsetId s, Level k) { return (1 + d[k]) / (Dt[s] + d[k]); };
  // (1 + d_b)(D_S + d_a) / ((1 + d_a)(D_S + d_b))
  auto q = [&](SubsetId s, Level a, Level b) {
    return (1 + d[b]) * (Dt[s] + d[a]) / ((1 + d[a]) * (Dt[s] + d[b]));
  };
  // (D_S + d_k) / ((1 + d_k) D_S)
  auto top = [&](SubsetId s, Level k) { return (Dt[s] + d[k]) / ((1 + d[k]) * Dt[s]); };

  std::vector<double> rhs;
  for (int i = 1; i <= 3; ++i) rhs.push_back(0.5 * lg(1.0 / Dt[single(i)]));
  for (auto [i, j] : kPairs) {
    const SubsetId si = single(i), sj = single(j), sij = pair(i, j);
    const Level m = std::max(L(si), L(sj));
    rhs.push_back(0.5 * lg(f(si, L(si)) * f(sj, L(sj)) * top(sij, m)));
  }
  for (int i = 1; i <= 3; ++i) {
    const auto [j, k] = others(i);
    const SubsetId si = single(i), sj = single(j), sk = single(k), sij = pair(i, j), sik = pair(i, k);
    const Level mj = std::max(L(si), L(sj));
    const Level mk = std::max(L(si), L(sk));
    const Level mm = std::max(L(sij), L(sik));
    double v = 0.5 * lg(f(si, L(si)) * f(si, L(si)) * f(sj, L(sj)) * f(sk, L(sk)));
    v += 0.5 * lg(q(sij, mj, L(sij)));
    v += 0.5 * lg(q(sik, mk, L(sik)));
    v += 0.5 * lg(top(kG123, mm));
    rhs.push_back(v);
  }
  {
    const Level m = std::min(L(kG12), L(kG3));
    double v = 0.5 * lg(f(kG1, L(kG1)) * f(kG2, L(kG2)) * f(kG3, m));
    v += 0.5 * lg(q(kG12, L(kG2), m));
    v += 0.5 * lg(top(kG123, m));
    rhs.push_back(v);
  }
  {
    const Level a = L(kG3) > L(kG12) ? L(kG3) : std::min({L(kG12), L(kG13), L(kG23)});
    double v = 0.5 * lg(f(kG1, L(kG1)) * f(kG2, L(kG2)) * f(kG3, L(kG3)));
    v += 0.25 * lg(q(kG12, L(kG2), a));
    v += 0.25 * lg(q(kG13, L(kG3), a));
    v += 0.25 * lg(q(kG23, L(kG3), a));
    v += 0.5 * lg(top(kG123, L(kG3)));
    rhs.push_back(v);
  }
  return assemble(o, "PO", rhs);
}

BoundSet parametric_outer_bound(const DistortionVector& D) {
  const DistortionVector Dt = normalize_distortions(D);
  return parametric_outer_bound(D, default_noise(Dt, induced_ordering(Dt)));
}

std::string normal_family(const std::array<double, kNumDescriptions>& a) {
  std::ostringstream out;
  out << "(" << a[0] << "," << a[1] << "," << a[2] << ")";
  return out.str();
}

double GapReport::family(const std::string& name) const {
  for (const auto& [f, v] : family_max) {
    if (f == name) return v;
  }
  throw std::out_of_range("no gap family " + name);
}

GapReport facet_gap(const DistortionVector& D) {
  const BoundSet in = inner_bound(D);
  const BoundSet out = outer_bound(D);
  GapReport report;
  for (std::size_t i = 0; i < in.constraints.size(); ++i) {
    const auto& a = in.constraints[i].a;
    const double norm = std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
    const double dist = (in.constraints[i].b - out.constraints[i].b) / norm;
    const std::string fam = normal_family(a);
    report.facets.push_back({fam, in.constraints[i].tag, out.constraints[i].tag, dist});
    auto it = std::find_if(report.family_max.begin(), report.family_max.end(),
                           [&](const auto& e) { return e.first == fam; });
    if (it == report.family_max.end()) {
      report.family_max.emplace_back(fam, dist);
    } else {
      it->second = std::max(it->second, dist);
    }
  }
  return report;
}

bool md_contains(const BoundSet& bound, const std::array<double, kNumDescriptions>& rates) {
  for (double r : rates) {
    if (r < -kBoundTolerance) return false;
  }
  for (const auto& c : bound.constraints) {
    const double lhs = c.a[0] * rates[0] + c.a[1] * rates[1] + c.a[2] * rates[2];
    if (lhs < c.b - kBoundTolerance) return false;
  }
  return true;
}

}  // namespace mld
