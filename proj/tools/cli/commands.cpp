#include "cli/commands.h"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "mld/codec.h"
#include "mld/gaussian_md.h"
#include "mld/json_io.h"
#include "mld/rate_region.h"
#include "mld/scheme_catalog.h"

namespace mld::cli {
namespace {

namespace fs = std::filesystem;
using json::Json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return out;
}

std::string read_all(const std::string& path, std::istream& in, bool binary = false) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream f(path, binary ? std::ios::binary : std::ios::in);
  if (!f) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

Json read_json(const std::string& path, std::istream& in) { return Json::parse(read_all(path, in)); }

void write_file(const fs::path& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path.string());
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

std::string bytes_of(const BitString& bits) {
  return {reinterpret_cast<const char*>(bits.bytes().data()), bits.bytes().size()};
}

Ordering parse_ordering(const std::string& text, std::istream& in) {
  if (!text.empty() && text.find_first_not_of("0123456789") == std::string::npos) {
    return ordering_from_row(std::stoi(text));
  }
  try {
    return json::ordering_from_json(text.front() == '{' ? Json::parse(text) : read_json(text, in));
  } catch (const Json::exception& e) {
    throw OrderingError(OrderingErrc::kIncompleteAssignment, std::string("malformed ordering JSON: ") + e.what());
  }
}

EntropyProfile parse_profile(const std::string& text) {
  const auto items = split_list(text);
  if (items.size() != kNumLayers) throw UsageError("--h needs 7 comma-separated entropies");
  std::array<Rational, kNumLayers> h;
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = parse_rational(items[i]);
  return EntropyProfile(h);
}

template <std::size_t N>
std::array<double, N> parse_doubles(const std::string& text, const std::string& flag) {
  const auto items = split_list(text);
  if (items.size() != N) throw UsageError(flag + " needs " + std::to_string(N) + " comma-separated values");
  std::array<double, N> out{};
  for (std::size_t i = 0; i < N; ++i) {
    std::size_t used = 0;
    out[i] = std::stod(items[i], &used);
    if (used != items[i].size()) throw UsageError("malformed number '" + items[i] + "' in " + flag);
  }
  return out;
}

DistortionVector parse_distortions(const std::string& text, std::istream& in) {
  if (text.find(',') != std::string::npos) {
    return DistortionVector(parse_doubles<kNumSubsets>(text, "--D"));
  }
  return json::distortion_from_json(text.front() == '{' ? Json::parse(text) : read_json(text, in));
}

std::string csv_corners(const std::vector<CornerPoint>& corners) {
  std::ostringstream out;
  out << "r1,r2,r3,label,tight\n";
  for (const auto& c : corners) {
    std::string labels, tight;
    for (const auto& l : c.labels) labels += (labels.empty() ? "" : "/") + l;
    for (const auto& t : c.tight) tight += (tight.empty() ? "" : " ") + t;
    out << format_rational(c.rates[0]) << ',' << format_rational(c.rates[1]) << ',' << format_rational(c.rates[2])
        << ',' << labels << ',' << tight << '\n';
  }
  return out.str();
}

// Facets as a1,a2,a3,b,tag rows: a1*R1 + a2*R2 + a3*R3 >= b.
std::string csv_facets(const RateRegion& region) {
  std::ostringstream out;
  out << "a1,a2,a3,b,tag\n";
  for (const auto& c : region.constraints) {
    out << format_rational(c.a[0]) << ',' << format_rational(c.a[1]) << ',' << format_rational(c.a[2]) << ','
        << format_rational(c.b) << ',' << c.tag << '\n';
  }
  return out.str();
}

struct Options {
  std::string ordering = "1";
  std::string h;
  std::string emit = "json";
  std::string D;
  std::string d;
  std::string rates;
  std::string scheme;
  std::string manifest;
  std::string out_dir = ".";
  std::string sidecar;
  std::string subset;
  std::string region;
  std::string bounds;
  std::string bound_kind = "inner";
  std::string lengths;
  std::string bits;
};

int cmd_region(const Options& o, std::istream& in, std::ostream& out, bool corners_only) {
  const Ordering ordering = parse_ordering(o.ordering, in);
  const EntropyProfile profile = parse_profile(o.h);
  const RateRegion region = build_mld_region(ordering, profile);
  const auto corners = label_corners(enumerate_corners(region), ordering, profile);
  if (o.emit == "csv") {
    out << (corners_only ? csv_corners(corners) : csv_facets(region));
    return kOk;
  }
  Json j = json::region_to_json(region, corners);
  if (ordering.table_row() == 1) j["regime"] = regime_name(classify_regime(profile));
  if (corners_only) j = Json{{"corners", j["corners"]}};
  out << j.dump(2) << '\n';
  return kOk;
}

int cmd_encode(const Options& o, std::istream& in, std::ostream& out) {
  const Json mj = read_json(o.manifest, in);
  json::Manifest manifest = json::manifest_from_json(mj);
  fs::path streams_path = manifest.streams;
  if (streams_path.is_relative() && o.manifest != "-") streams_path = fs::path(o.manifest).parent_path() / streams_path;
  const std::string raw = read_all(streams_path.string(), in, true);

  std::uint64_t total = 0;
  for (auto n : manifest.lengths) total += n;
  if (raw.size() != (total + 7) / 8) {
    throw CodecError(CodecErrc::kLengthMismatch, "stream file has " + std::to_string(raw.size()) +
                                                     " bytes, lengths need " + std::to_string((total + 7) / 8));
  }
  const std::vector<std::uint8_t> bytes(raw.begin(), raw.end());
  const SourceBundle bundle = SourceBundle::split(BitString::from_bytes(bytes, total), manifest.lengths);
  const DescriptionScheme scheme = compose_time_share(parse_scheme_spec(o.scheme), manifest.lengths);
  const EncodedDescriptions enc = encode(scheme, bundle);

  fs::create_directories(o.out_dir);
  json::Sidecar sidecar;
  sidecar.scheme = o.scheme;
  sidecar.lengths = manifest.lengths;
  for (std::size_t d = 0; d < kNumDescriptions; ++d) {
    sidecar.files[d] = "G" + std::to_string(d + 1) + ".bin";
    sidecar.bits[d] = enc[d].size();
    std::ofstream f(fs::path(o.out_dir) / sidecar.files[d], std::ios::binary);
    if (!f) throw UsageError("cannot write into " + o.out_dir);
    json::write_description(f, enc[d]);
  }
  const std::string text = json::sidecar_to_json(sidecar).dump(2) + "\n";
  write_file(fs::path(o.out_dir) / "sidecar.json", text);
  out << text;
  return kOk;
}

int cmd_decode(const Options& o, std::istream& in, std::ostream& out) {
  const json::Sidecar sidecar = json::sidecar_from_json(read_json(o.sidecar, in));
  const SubsetId subset = SubsetId::parse(o.subset);
  const DescriptionScheme scheme = compose_time_share(parse_scheme_spec(sidecar.scheme), sidecar.lengths);
  const fs::path base = o.sidecar == "-" ? fs::path(".") : fs::path(o.sidecar).parent_path();

  PartialDescriptions available;
  for (int d = 1; d <= kNumDescriptions; ++d) {
    if (!subset.contains(d)) continue;
    const fs::path p = base / sidecar.files[static_cast<std::size_t>(d - 1)];
    std::ifstream f(p, std::ios::binary);
    if (!f) throw UsageError("cannot open " + p.string());
    available[static_cast<std::size_t>(d - 1)] = json::read_description(f);
  }
  const auto streams = decode(scheme, subset, available);

  fs::create_directories(o.out_dir);
  Json listing = Json::array();
  BitString prefix;
  for (std::size_t k = 0; k < streams.size(); ++k) {
    const std::string name = "V" + std::to_string(k + 1) + ".bin";
    write_file(fs::path(o.out_dir) / name, bytes_of(streams[k]));
    listing.push_back({{"file", name}, {"bits", streams[k].size()}});
    prefix.append(streams[k]);
  }
  write_file(fs::path(o.out_dir) / "streams.bin", bytes_of(prefix));
  out << Json{{"subset", subset.name()}, {"level", streams.size()}, {"streams", listing}}.dump(2) << '\n';
  return kOk;
}

std::optional<NoiseParams> parse_noise(const Options& o, const DistortionVector& D) {
  if (o.d.empty()) return std::nullopt;
  if (o.d == "default") {
    const DistortionVector Dt = normalize_distortions(D);
    return default_noise(Dt, induced_ordering(Dt));
  }
  return NoiseParams(parse_doubles<6>(o.d, "--d"));
}

int cmd_md_bounds(const Options& o, std::istream& in, std::ostream& out) {
  const DistortionVector D = parse_distortions(o.D, in);
  const auto noise = parse_noise(o, D);
  const DistortionVector Dt = normalize_distortions(D);
  Json j = Json::object();
  j["ordering"] = json::ordering_to_json(induced_ordering(Dt));
  j["normalized"] = json::distortion_to_json(Dt)["D"];
  j["inner"] = json::bounds_to_json(inner_bound(D))["constraints"];
  j["outer"] = json::bounds_to_json(outer_bound(D))["constraints"];
  if (noise) j["parametric"] = json::bounds_to_json(parametric_outer_bound(D, *noise))["constraints"];
  j["gaps"] = json::gap_to_json(facet_gap(D));
  out << j.dump(2) << '\n';
  return kOk;
}

int cmd_gap(const Options& o, std::istream& in, std::ostream& out) {
  const GapReport report = facet_gap(parse_distortions(o.D, in));
  if (o.emit == "csv") {
    out << "family,inner,outer,distance\n";
    char buf[32];
    for (const auto& f : report.facets) {
      std::snprintf(buf, sizeof buf, "%.12g", f.distance);
      out << '"' << f.family << "\"," << f.inner_tag << ',' << f.outer_tag << ',' << buf << '\n';
    }
    return kOk;
  }
  out << json::gap_to_json(report).dump(2) << '\n';
  return kOk;
}

int cmd_check(const Options& o, std::istream& in, std::ostream& out) {
  const auto items = split_list(o.rates);
  if (items.size() != kNumDescriptions) throw UsageError("--rates needs 3 comma-separated values");
  Json j = Json::object();

  if (!o.D.empty() || !o.bounds.empty()) {
    BoundSet bound = [&] {
      if (!o.bounds.empty()) return json::bounds_from_json(read_json(o.bounds, in));
      const DistortionVector D = parse_distortions(o.D, in);
      if (o.bound_kind == "outer") return outer_bound(D);
      if (o.bound_kind == "parametric") return parametric_outer_bound(D);
      if (o.bound_kind != "inner") throw UsageError("--bound must be inner, outer or parametric");
      return inner_bound(D);
    }();
    std::array<double, kNumDescriptions> r{};
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = to_double(parse_rational(items[i]));
    std::vector<std::string> tight, violated;
    for (const auto& c : bound.constraints) {
      const double lhs = c.a[0] * r[0] + c.a[1] * r[1] + c.a[2] * r[2];
      if (lhs < c.b - kBoundTolerance) violated.push_back(c.tag);
      if (std::abs(lhs - c.b) <= kBoundTolerance) tight.push_back(c.tag);
    }
    j["inside"] = md_contains(bound, r);
    j["tight"] = tight;
    j["violated"] = violated;
  } else {
    const RateRegion region = !o.region.empty() ? json::region_from_json(read_json(o.region, in))
                                                : build_mld_region(parse_ordering(o.ordering, in), parse_profile(o.h));
    RateTriple r;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = parse_rational(items[i]);
    std::vector<std::string> violated;
    for (const auto& c : region.constraints) {
      if (!c.satisfied_by(r)) violated.push_back(c.tag);
    }
    for (int d = 1; d <= kNumDescriptions; ++d) {
      if (r[static_cast<std::size_t>(d - 1)] < 0) violated.push_back(nonnegativity_tag(d));
    }
    j["inside"] = contains(region, r);
    j["tight"] = tight_constraints(region, r);
    j["violated"] = violated;
  }
  out << j.dump(2) << '\n';
  return kOk;
}

int cmd_pack(const Options& o, std::istream& in, std::ostream& out) {
  const auto items = split_list(o.lengths);
  if (items.size() != kNumLayers) throw UsageError("--lengths needs 7 comma-separated bit counts");
  json::Manifest manifest;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < kNumLayers; ++i) {
    manifest.lengths[i] = std::stoull(items[i]);
    total += manifest.lengths[i];
  }
  std::string text;
  for (char c : read_all(o.bits, in)) {
    if (c == '0' || c == '1') text += c;
  }
  if (text.size() != total) {
    throw CodecError(CodecErrc::kLengthMismatch,
                     "bit text has " + std::to_string(text.size()) + " bits, lengths need " + std::to_string(total));
  }
  fs::create_directories(o.out_dir);
  manifest.streams = "streams.bin";
  write_file(fs::path(o.out_dir) / manifest.streams, bytes_of(BitString::from_string(text)));
  const std::string mtext = json::manifest_to_json(manifest).dump(2) + "\n";
  write_file(fs::path(o.out_dir) / "manifest.json", mtext);
  out << mtext;
  return kOk;
}

int exit_code_for(CodecErrc c) {
  switch (c) {
    case CodecErrc::kRegimeMismatch:
    case CodecErrc::kOddSplit:
    case CodecErrc::kNonIntegralSplit: return kRegimeMismatch;
    case CodecErrc::kLengthMismatch: return kLengthMismatch;
    case CodecErrc::kUnresolvable: return kUsage;
  }
  return kUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Asymmetric multilevel diversity coding: rate regions, corner codecs and Gaussian MD bounds", "amld"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  Options o;

  auto* region = app.add_subcommand("region", "Rate-region constraints and corner points");
  auto* corners = app.add_subcommand("corners", "Corner points only");
  for (auto* sub : {region, corners}) {
    sub->add_option("--ordering", o.ordering, "Table row 1..8, ordering JSON, or a path to one")->capture_default_str();
    sub->add_option("--h", o.h, "Layer entropies h1..h7, comma separated")->required();
    sub->add_option("--emit", o.emit, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  }

  auto* enc = app.add_subcommand("encode", "Encode a stream bundle with a corner scheme");
  enc->add_option("--scheme", o.scheme, "Scheme label, or time sharing such as X1@1/2+X2@1/2")->required();
  enc->add_option("--manifest", o.manifest, "Bundle manifest JSON")->required();
  enc->add_option("--out", o.out_dir, "Output directory")->capture_default_str();

  auto* dec = app.add_subcommand("decode", "Recover the streams a decoder subset is entitled to");
  dec->add_option("--sidecar", o.sidecar, "Sidecar JSON written by encode")->required();
  dec->add_option("--subset", o.subset, "G1, G2, G3, G12, G13, G23 or G123")->required();
  dec->add_option("--out", o.out_dir, "Output directory")->capture_default_str();

  auto* md = app.add_subcommand("md-bounds", "Gaussian MD inner, outer and parametric outer bounds");
  md->add_option("--D", o.D, "Seven distortions in canonical subset order, or distortion JSON")->required();
  md->add_option("--d", o.d, "Noise variances d1..d6, or 'default'");

  auto* gap = app.add_subcommand("gap", "Distances between matching inner and outer bound planes");
  gap->add_option("--D", o.D, "Seven distortions in canonical subset order, or distortion JSON")->required();
  gap->add_option("--emit", o.emit, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  auto* check = app.add_subcommand("check", "Membership of a rate triple");
  check->add_option("--rates", o.rates, "R1,R2,R3")->required();
  check->add_option("--region", o.region, "Region JSON");
  check->add_option("--bounds", o.bounds, "Bound-set JSON");
  check->add_option("--ordering", o.ordering, "Table row or ordering JSON (with --h)");
  check->add_option("--h", o.h, "Layer entropies h1..h7");
  check->add_option("--D", o.D, "Distortions (checks a Gaussian bound)");
  check->add_option("--bound", o.bound_kind, "inner, outer or parametric")->capture_default_str();

  auto* pack = app.add_subcommand("pack", "Write a bundle manifest from text bits");
  pack->add_option("--lengths", o.lengths, "Stream lengths l1..l7 in bits")->required();
  pack->add_option("--bits", o.bits, "Text file of 0/1 characters, stream 1 first")->required();
  pack->add_option("--out", o.out_dir, "Output directory")->capture_default_str();

  std::vector<std::string> argv_store{"amld"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (region->parsed()) return cmd_region(o, in, out, false);
    if (corners->parsed()) return cmd_region(o, in, out, true);
    if (enc->parsed()) return cmd_encode(o, in, out);
    if (dec->parsed()) return cmd_decode(o, in, out);
    if (md->parsed()) return cmd_md_bounds(o, in, out);
    if (gap->parsed()) return cmd_gap(o, in, out);
    if (check->parsed()) {
      if (o.region.empty() && o.bounds.empty() && o.D.empty() && o.h.empty()) {
        throw UsageError("check needs --region, --bounds, --D or --h");
      }
      return cmd_check(o, in, out);
    }
    if (pack->parsed()) return cmd_pack(o, in, out);
  } catch (const OrderingError& e) {
    err << "invalid ordering: " << e.what() << '\n';
    return kInvalidOrdering;
  } catch (const RegionError& e) {
    err << e.what() << '\n';
    return e.code() == RegionErrc::kNegativeEntropy ? kNegativeEntropy : kInvalidOrdering;
  } catch (const CodecError& e) {
    err << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const GaussianError& e) {
    err << e.what() << '\n';
    return kBadDistortion;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace mld::cli
