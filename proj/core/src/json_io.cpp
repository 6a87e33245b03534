#include "mld/json_io.h"

#include <cstdio>
#include <istream>
#include <iterator>
#include <ostream>
#include <stdexcept>

namespace mld::json {
namespace {

std::string rational_string(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return v.dump();
  throw std::invalid_argument("expected a rational number, got " + v.dump());
}

template <typename T>
std::array<T, kNumDescriptions> triple(const Json& v) {
  if (!v.is_array() || v.size() != kNumDescriptions) throw std::invalid_argument("expected a 3-element array");
  return {v[0].get<T>(), v[1].get<T>(), v[2].get<T>()};
}

std::string join_labels(const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& l : labels) out += (out.empty() ? "" : "/") + l;
  return out;
}

}  // namespace

double round12(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  const double r = std::stod(buf);
  return r == 0.0 ? 0.0 : r;
}

Ordering ordering_from_json(const Json& j) {
  if (j.is_number_integer()) return ordering_from_row(j.get<int>());
  if (!j.is_object()) throw OrderingError(OrderingErrc::kIncompleteAssignment, "ordering must be a JSON object");
  if (j.contains("levels")) {
    const Json& levels = j.at("levels");
    if (!levels.is_object()) throw OrderingError(OrderingErrc::kIncompleteAssignment, "\"levels\" must be an object");
    LevelAssignment a;
    for (const auto& [name, level] : levels.items()) {
      if (!level.is_number_integer()) {
        throw OrderingError(OrderingErrc::kIncompleteAssignment, "level of " + name + " must be an integer");
      }
      SubsetId s = [&] {
        try {
          return SubsetId::parse(name);
        } catch (const std::invalid_argument& e) {
          throw OrderingError(OrderingErrc::kIncompleteAssignment, e.what());
        }
      }();
      a[s] = level.get<int>();
    }
    return validate_ordering(a);
  }
  if (j.contains("ordering") && j.at("ordering").is_number_integer()) {
    return ordering_from_row(j.at("ordering").get<int>());
  }
  throw OrderingError(OrderingErrc::kIncompleteAssignment, "ordering JSON needs \"levels\" or \"ordering\"");
}

Json ordering_to_json(const Ordering& o) {
  Json levels = Json::object();
  for (const SubsetId& s : SubsetId::all()) levels[s.name()] = o.level_of(s);
  return Json{{"ordering", o.table_row()}, {"levels", levels}};
}

Json region_to_json(const RateRegion& region, const std::vector<CornerPoint>& corners) {
  Json out = ordering_to_json(region.ordering);
  Json cs = Json::array();
  for (const auto& c : region.constraints) {
    Json a = Json::array();
    for (const auto& x : c.a) a.push_back(x.get_num().get_si());
    cs.push_back({{"a", a}, {"b", format_rational(c.b)}, {"tag", c.tag}});
  }
  out["constraints"] = cs;
  Json ps = Json::array();
  for (const auto& p : corners) {
    Json rates = Json::array();
    for (const auto& r : p.rates) rates.push_back(format_rational(r));
    Json entry{{"rates", rates}, {"tight", p.tight}};
    if (!p.labels.empty()) entry["label"] = join_labels(p.labels);
    ps.push_back(entry);
  }
  out["corners"] = ps;
  return out;
}

RateRegion region_from_json(const Json& j) {
  RateRegion region{ordering_from_json(j), {}};
  for (const auto& c : j.at("constraints")) {
    LinearInequality ineq;
    const Json& a = c.at("a");
    if (!a.is_array() || a.size() != kNumDescriptions) throw std::invalid_argument("constraint \"a\" must have 3 entries");
    for (std::size_t i = 0; i < kNumDescriptions; ++i) ineq.a[i] = parse_rational(rational_string(a[i]));
    ineq.b = parse_rational(rational_string(c.at("b")));
    ineq.tag = c.value("tag", "");
    region.constraints.push_back(std::move(ineq));
  }
  return region;
}

Json bounds_to_json(const BoundSet& bounds) {
  Json out = ordering_to_json(bounds.ordering);
  Json cs = Json::array();
  for (const auto& c : bounds.constraints) {
    cs.push_back({{"a", {c.a[0], c.a[1], c.a[2]}}, {"b", round12(c.b)}, {"tag", c.tag}});
  }
  out["constraints"] = cs;
  return out;
}

BoundSet bounds_from_json(const Json& j) {
  BoundSet out{ordering_from_json(j), {}};
  for (const auto& c : j.at("constraints")) {
    out.constraints.push_back({triple<double>(c.at("a")), c.at("b").get<double>(), c.value("tag", "")});
  }
  return out;
}

Json gap_to_json(const GapReport& report) {
  Json out = Json::object();
  for (const auto& [family, value] : report.family_max) out[family] = round12(value);
  Json facets = Json::array();
  for (const auto& f : report.facets) {
    facets.push_back({{"family", f.family}, {"inner", f.inner_tag}, {"outer", f.outer_tag},
                      {"distance", round12(f.distance)}});
  }
  out["facets"] = facets;
  out["reference_(1,1,1)"] = round12(report.reference_111);
  return out;
}

DistortionVector distortion_from_json(const Json& j) {
  const Json& d = j.contains("D") ? j.at("D") : j;
  std::array<double, kNumSubsets> values{};
  for (const SubsetId& s : SubsetId::all()) {
    if (!d.contains(s.name()) || !d.at(s.name()).is_number()) {
      throw GaussianError(GaussianErrc::kInvalidDistortion, "distortion JSON lacks a numeric entry for " + s.name());
    }
    values[static_cast<std::size_t>(s.canonical_index())] = d.at(s.name()).get<double>();
  }
  return DistortionVector(values);
}

Json distortion_to_json(const DistortionVector& D) {
  Json d = Json::object();
  for (const SubsetId& s : SubsetId::all()) d[s.name()] = D[s];
  return Json{{"D", d}};
}

Manifest manifest_from_json(const Json& j) {
  Manifest m;
  const Json& lengths = j.at("lengths");
  if (!lengths.is_array() || lengths.size() != kNumLayers) {
    throw std::invalid_argument("manifest \"lengths\" must list 7 stream lengths");
  }
  for (std::size_t i = 0; i < kNumLayers; ++i) m.lengths[i] = lengths[i].get<std::uint64_t>();
  m.streams = j.at("streams").get<std::string>();
  return m;
}

Json manifest_to_json(const Manifest& m) { return Json{{"lengths", m.lengths}, {"streams", m.streams}}; }

Sidecar sidecar_from_json(const Json& j) {
  Sidecar s;
  s.scheme = j.at("scheme").get<std::string>();
  s.bits = triple<std::uint64_t>(j.at("bits"));
  const Json& lengths = j.at("lengths");
  if (!lengths.is_array() || lengths.size() != kNumLayers) {
    throw std::invalid_argument("sidecar \"lengths\" must list 7 stream lengths");
  }
  for (std::size_t i = 0; i < kNumLayers; ++i) s.lengths[i] = lengths[i].get<std::uint64_t>();
  s.files = triple<std::string>(j.at("files"));
  return s;
}

Json sidecar_to_json(const Sidecar& s) {
  return Json{{"scheme", s.scheme}, {"bits", s.bits}, {"lengths", s.lengths}, {"files", s.files}};
}

void write_description(std::ostream& out, const BitString& bits) {
  const std::uint64_t n = bits.size();
  for (int shift = 56; shift >= 0; shift -= 8) out.put(static_cast<char>((n >> shift) & 0xFF));
  out.write(reinterpret_cast<const char*>(bits.bytes().data()), static_cast<std::streamsize>(bits.bytes().size()));
}

BitString read_description(std::istream& in) {
  std::uint64_t n = 0;
  for (int i = 0; i < 8; ++i) {
    const int c = in.get();
    if (c == EOF) throw CodecError(CodecErrc::kLengthMismatch, "description file is truncated");
    n = (n << 8) | static_cast<std::uint64_t>(c);
  }
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (bytes.size() != (n + 7) / 8) {
    throw CodecError(CodecErrc::kLengthMismatch, "description payload does not match its bit count");
  }
  return BitString::from_bytes(bytes, n);
}

}  // namespace mld::json
