#pragma once

// Seeded random inputs shared by property and acceptance tests.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <random>

#include "mld/codec.h"
#include "mld/gaussian_md.h"
#include "mld/rate_region.h"

namespace mld::testing {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int max_num = 12, int max_den = 6) {
  std::uniform_int_distribution<int> num(0, max_num), den(1, max_den);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

// Profile strictly inside (or, with small probability, on the boundary of)
// the requested chain-ordering regime.
inline EntropyProfile random_profile(Rng& rng, Regime regime) {
  std::array<Rational, kNumLayers> h;
  for (auto& x : h) x = random_rational(rng);
  switch (regime) {
    case Regime::kI:
      h[2] = h[3] + h[4] + random_rational(rng);
      break;
    case Regime::kII: {
      if (h[4] == 0) h[4] = Rational(1, 2);
      // h3 = h4 + u*h5 with u in [0, 1)
      std::uniform_int_distribution<int> u(0, 9);
      h[2] = h[3] + Rational(u(rng), 10) * h[4];
      break;
    }
    case Regime::kIII:
      h[3] = h[2] + random_rational(rng) + Rational(1, 7);
      break;
  }
  for (auto& x : h) x.canonicalize();
  return EntropyProfile(h);
}

// Integer stream lengths meeting the regime conditions of the catalog
// templates (with even l4 - l3 in regime III). Zero lengths appear often.
inline StreamLengths random_lengths(Rng& rng, Regime regime) {
  std::uniform_int_distribution<int> small(0, 9), coin(0, 4);
  StreamLengths l{};
  for (auto& x : l) x = coin(rng) == 0 ? 0 : static_cast<std::uint64_t>(small(rng));
  switch (regime) {
    case Regime::kI:
      l[2] = l[3] + l[4] + static_cast<std::uint64_t>(coin(rng) == 0 ? 0 : small(rng));
      break;
    case Regime::kII: {
      std::uniform_int_distribution<std::uint64_t> u(0, l[4]);
      l[2] = l[3] + u(rng);
      break;
    }
    case Regime::kIII:
      l[3] = l[2] + 2 * static_cast<std::uint64_t>(coin(rng) == 0 ? 0 : small(rng));
      break;
  }
  return l;
}

inline SourceBundle random_bundle(Rng& rng, const StreamLengths& lengths) {
  std::bernoulli_distribution bit(0.5);
  std::array<BitString, kNumLayers> streams;
  for (std::size_t k = 0; k < kNumLayers; ++k) {
    for (std::uint64_t i = 0; i < lengths[k]; ++i) streams[k].push_back(bit(rng));
  }
  return SourceBundle(std::move(streams));
}

// Distortions whose induced ordering is the given one: seven distinct values
// in (0, 1], decreasing with the level.
inline DistortionVector random_distortions(Rng& rng, const Ordering& ordering) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> power(1, 3);
  std::array<double, kNumSubsets> v{};
  for (auto& x : v) x = std::max(std::pow(u(rng), power(rng)), 1e-9);
  std::sort(v.begin(), v.end(), std::greater<>());
  for (std::size_t i = 1; i < v.size(); ++i) v[i] = std::min(v[i], v[i - 1] * 0.999);
  std::array<double, kNumSubsets> out{};
  for (Level k = 1; k <= kNumSubsets; ++k) {
    out[static_cast<std::size_t>(ordering.inverse_level(k).canonical_index())] = v[static_cast<std::size_t>(k - 1)];
  }
  return DistortionVector(out);
}

}  // namespace mld::testing
