#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mld/codec.h"
#include "mld/gaussian_md.h"
#include "mld/ordering.h"
#include "mld/rate_region.h"

namespace mld::json {

using Json = nlohmann::ordered_json;

// Rounds to 12 significant digits so dumps are stable across platforms.
double round12(double value);

// {"levels": {"G1": 1, ...}} or {"ordering": <row>}.
Ordering ordering_from_json(const Json& j);
Json ordering_to_json(const Ordering& o);

Json region_to_json(const RateRegion& region, const std::vector<CornerPoint>& corners);
RateRegion region_from_json(const Json& j);

Json bounds_to_json(const BoundSet& bounds);
BoundSet bounds_from_json(const Json& j);

Json gap_to_json(const GapReport& report);

// {"D": {"G1": 0.5, ...}}
DistortionVector distortion_from_json(const Json& j);
Json distortion_to_json(const DistortionVector& D);

struct Manifest {
  StreamLengths lengths{};
  std::string streams;  // path to the concatenated stream bits
};
Manifest manifest_from_json(const Json& j);
Json manifest_to_json(const Manifest& m);

struct Sidecar {
  std::string scheme;
  std::array<std::uint64_t, kNumDescriptions> bits{};
  StreamLengths lengths{};
  std::array<std::string, kNumDescriptions> files;
};
Sidecar sidecar_from_json(const Json& j);
Json sidecar_to_json(const Sidecar& s);

// Description file: 8-byte big-endian bit count, then the packed bits.
void write_description(std::ostream& out, const BitString& bits);
BitString read_description(std::istream& in);

}  // namespace mld::json
