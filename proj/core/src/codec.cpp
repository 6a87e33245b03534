#include "mld/codec.h"

#include <algorithm>
#include <stdexcept>

namespace mld {
namespace {

std::uint64_t operand_size(const Operand& op) {
  std::uint64_t n = 0;
  for (const auto& r : op) n += r.size();
  return n;
}

void append_range(std::vector<Segment>& segments, const StreamRange& r) {
  if (r.size() == 0) return;
  if (!segments.empty()) {
    if (auto* prev = std::get_if<Copy>(&segments.back());
        prev && prev->range.stream == r.stream && prev->range.end == r.begin) {
      prev->range.end = r.end;
      return;
    }
  }
  segments.push_back(Copy{r});
}

Operand merge(Operand op) {
  Operand out;
  for (const auto& r : op) {
    if (r.size() == 0) continue;
    if (!out.empty() && out.back().stream == r.stream && out.back().end == r.begin) {
      out.back().end = r.end;
    } else {
      out.push_back(r);
    }
  }
  return out;
}

void check_lengths(const DescriptionScheme& scheme, const SourceBundle& bundle) {
  if (bundle.lengths() != scheme.lengths) {
    throw CodecError(CodecErrc::kLengthMismatch, "bundle stream lengths differ from the scheme's lengths");
  }
}

std::array<Rational, kNumLayers> as_rationals(const StreamLengths& lengths) {
  std::array<Rational, kNumLayers> out;
  for (std::size_t i = 0; i < lengths.size(); ++i) out[i] = Rational(std::to_string(lengths[i]));
  return out;
}

std::uint64_t to_u64(const Rational& q) { return std::stoull(q.get_num().get_str()); }

}  // namespace

std::uint64_t segment_size(const Segment& segment) {
  if (const auto* c = std::get_if<Copy>(&segment)) return c->range.size();
  const auto& x = std::get<Xor>(segment);
  return x.operands.empty() ? 0 : operand_size(x.operands.front());
}

std::uint64_t DescriptionScheme::description_size(int d) const {
  std::uint64_t n = 0;
  for (const auto& s : descriptions.at(static_cast<std::size_t>(d - 1))) n += segment_size(s);
  return n;
}

std::array<std::uint64_t, kNumDescriptions> DescriptionScheme::description_sizes() const {
  return {description_size(1), description_size(2), description_size(3)};
}

SourceBundle SourceBundle::split(const BitString& concatenated, const StreamLengths& lengths) {
  std::uint64_t total = 0;
  for (auto n : lengths) total += n;
  if (total != concatenated.size()) {
    throw CodecError(CodecErrc::kLengthMismatch, "stream data has " + std::to_string(concatenated.size()) +
                                                     " bits but the lengths sum to " + std::to_string(total));
  }
  std::array<BitString, kNumLayers> streams;
  std::uint64_t offset = 0;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    streams[i] = concatenated.slice(offset, offset + lengths[i]);
    offset += lengths[i];
  }
  return SourceBundle(std::move(streams));
}

StreamLengths SourceBundle::lengths() const {
  StreamLengths out{};
  for (std::size_t i = 0; i < streams_.size(); ++i) out[i] = streams_[i].size();
  return out;
}

BitString SourceBundle::concatenated() const {
  BitString out;
  for (const auto& s : streams_) out.append(s);
  return out;
}

DescriptionScheme instantiate_scheme(const SchemeTemplate& tmpl, const StreamLengths& lengths) {
  const auto ell = as_rationals(lengths);
  for (const auto& cond : tmpl.conditions) {
    if (cond.evaluate(ell) < 0) {
      throw CodecError(CodecErrc::kRegimeMismatch, "stream lengths violate " + tmpl.label + " condition " +
                                                       cond.to_string("l") + " >= 0");
    }
  }

  DescriptionScheme out;
  out.label = tmpl.label;
  out.lengths = lengths;
  std::vector<std::uint64_t> offset(kNumLayers + 1, 0);
  for (const auto& piece : tmpl.pieces) {
    const Rational n = piece.length.evaluate(ell);
    if (n < 0) {
      throw CodecError(CodecErrc::kRegimeMismatch,
                       "piece " + piece.name + " of " + tmpl.label + " has negative length");
    }
    if (!is_integer(n)) {
      throw CodecError(CodecErrc::kOddSplit, "piece " + piece.name + " of " + tmpl.label +
                                                 " has fractional length " + format_rational(n));
    }
    const std::uint64_t begin = offset[static_cast<std::size_t>(piece.stream)];
    const std::uint64_t end = begin + to_u64(n);
    offset[static_cast<std::size_t>(piece.stream)] = end;
    out.partition.push_back({piece.name, {piece.stream, begin, end}});
  }
  for (int k = 1; k <= kNumLayers; ++k) {
    if (offset[static_cast<std::size_t>(k)] != lengths[static_cast<std::size_t>(k - 1)]) {
      throw std::logic_error("partition of " + tmpl.label + " does not cover stream " + std::to_string(k));
    }
  }

  auto range_of = [&](const std::string& name) {
    for (const auto& p : out.partition) {
      if (p.name == name) return p.range;
    }
    throw std::logic_error("unknown piece " + name);
  };
  for (std::size_t d = 0; d < kNumDescriptions; ++d) {
    for (const auto& seg : tmpl.descriptions[d]) {
      if (seg.size() == 1) {
        for (const auto& name : seg.front()) append_range(out.descriptions[d], range_of(name));
        continue;
      }
      Xor x;
      for (const auto& operand : seg) {
        Operand op;
        for (const auto& name : operand) op.push_back(range_of(name));
        x.operands.push_back(merge(std::move(op)));
      }
      const std::uint64_t n = operand_size(x.operands.front());
      for (const auto& op : x.operands) {
        if (operand_size(op) != n) throw std::logic_error("unequal xor operands in " + tmpl.label);
      }
      if (n > 0) out.descriptions[d].push_back(std::move(x));
    }
  }
  return out;
}

EncodedDescriptions encode(const DescriptionScheme& scheme, const SourceBundle& bundle) {
  check_lengths(scheme, bundle);
  EncodedDescriptions out;
  for (std::size_t d = 0; d < kNumDescriptions; ++d) {
    BitString& g = out[d];
    for (const auto& seg : scheme.descriptions[d]) {
      if (const auto* c = std::get_if<Copy>(&seg)) {
        g.append_range(bundle.stream(c->range.stream), c->range.begin, c->range.end);
        continue;
      }
      const auto& x = std::get<Xor>(seg);
      BitString acc;
      for (std::size_t i = 0; i < x.operands.size(); ++i) {
        BitString value;
        for (const auto& r : x.operands[i]) value.append_range(bundle.stream(r.stream), r.begin, r.end);
        acc = i == 0 ? std::move(value) : acc ^ value;
      }
      g.append(acc);
    }
  }
  return out;
}

std::vector<BitString> decode(const DescriptionScheme& scheme, SubsetId subset,
                              const PartialDescriptions& available) {
  for (int d = 1; d <= kNumDescriptions; ++d) {
    const auto& a = available[static_cast<std::size_t>(d - 1)];
    if (a.has_value() != subset.contains(d)) {
      throw std::invalid_argument("available descriptions do not match subset " + subset.name());
    }
    if (a && a->size() != scheme.description_size(d)) {
      throw CodecError(CodecErrc::kLengthMismatch,
                       "description G" + std::to_string(d) + " has " + std::to_string(a->size()) +
                           " bits, scheme expects " + std::to_string(scheme.description_size(d)));
    }
  }

  // -1 unknown, otherwise the bit value.
  std::array<std::vector<signed char>, kNumLayers> known;
  for (std::size_t k = 0; k < kNumLayers; ++k) known[k].assign(scheme.lengths[k], -1);
  auto cell = [&](int stream, std::uint64_t i) -> signed char& {
    return known[static_cast<std::size_t>(stream - 1)][i];
  };

  struct Pending {
    const Xor* x;
    const BitString* description;
    std::uint64_t offset;
  };
  std::vector<Pending> pending;
  for (int d = 1; d <= kNumDescriptions; ++d) {
    const auto& a = available[static_cast<std::size_t>(d - 1)];
    if (!a) continue;
    std::uint64_t pos = 0;
    for (const auto& seg : scheme.descriptions[static_cast<std::size_t>(d - 1)]) {
      if (const auto* c = std::get_if<Copy>(&seg)) {
        for (std::uint64_t i = 0; i < c->range.size(); ++i) {
          cell(c->range.stream, c->range.begin + i) = a->get(pos + i) ? 1 : 0;
        }
      } else {
        pending.push_back({&std::get<Xor>(seg), &*a, pos});
      }
      pos += segment_size(seg);
    }
  }

  // Peel XOR segments bit by bit: a position with exactly one unknown operand
  // bit determines it.
  auto locate = [](const Operand& op, std::uint64_t i) {
    for (const auto& r : op) {
      if (i < r.size()) return std::pair{r.stream, r.begin + i};
      i -= r.size();
    }
    throw std::logic_error("xor operand index out of range");
  };
  bool progress = true;
  while (progress && !pending.empty()) {
    progress = false;
    for (auto it = pending.begin(); it != pending.end();) {
      const std::uint64_t n = segment_size(*it->x);
      bool done = true;
      for (std::uint64_t i = 0; i < n; ++i) {
        int parity = it->description->get(it->offset + i) ? 1 : 0;
        int unknown = 0;
        std::pair<int, std::uint64_t> missing{};
        for (const auto& op : it->x->operands) {
          const auto loc = locate(op, i);
          const signed char v = cell(loc.first, loc.second);
          if (v < 0) {
            ++unknown;
            missing = loc;
          } else {
            parity ^= v;
          }
        }
        if (unknown == 1) {
          cell(missing.first, missing.second) = static_cast<signed char>(parity);
          progress = true;
        } else if (unknown > 1) {
          done = false;
        }
      }
      it = done ? pending.erase(it) : it + 1;
    }
  }

  const Level level = l1_ordering().level_of(subset);
  std::vector<BitString> out;
  for (int k = 1; k <= level; ++k) {
    BitString s(scheme.lengths[static_cast<std::size_t>(k - 1)]);
    for (std::uint64_t i = 0; i < s.size(); ++i) {
      const signed char v = cell(k, i);
      if (v < 0) {
        throw CodecError(CodecErrc::kUnresolvable, "scheme " + scheme.label + " leaves bit " + std::to_string(i) +
                                                       " of stream " + std::to_string(k) + " unknown for " +
                                                       subset.name());
      }
      s.set(i, v == 1);
    }
    out.push_back(std::move(s));
  }
  return out;
}

DescriptionScheme compose_time_share(const std::vector<TimeSharePart>& parts, const StreamLengths& lengths) {
  if (parts.empty()) throw std::invalid_argument("time sharing needs at least one part");
  Rational total = 0;
  for (const auto& p : parts) {
    if (p.scheme == nullptr || p.weight <= 0) throw std::invalid_argument("time-share weights must be positive");
    total += p.weight;
  }
  if (total != 1) throw std::invalid_argument("time-share weights must sum to 1");

  const auto ell = as_rationals(lengths);
  DescriptionScheme out;
  out.lengths = lengths;
  StreamLengths offset{};
  for (std::size_t j = 0; j < parts.size(); ++j) {
    const auto& p = parts[j];
    StreamLengths slice{};
    for (std::size_t k = 0; k < kNumLayers; ++k) {
      const Rational n = p.weight * ell[k];
      if (!is_integer(n)) {
        throw CodecError(CodecErrc::kNonIntegralSplit, "weight " + format_rational(p.weight) + " of stream " +
                                                           std::to_string(k + 1) + " (" +
                                                           std::to_string(lengths[k]) + " bits) is fractional");
      }
      slice[k] = to_u64(n);
    }
    DescriptionScheme part = instantiate_scheme(*p.scheme, slice);
    auto shift = [&](StreamRange r) {
      const auto base = offset[static_cast<std::size_t>(r.stream - 1)];
      return StreamRange{r.stream, r.begin + base, r.end + base};
    };
    const std::string prefix = parts.size() == 1 ? "" : std::to_string(j + 1) + ":";
    for (const auto& nr : part.partition) out.partition.push_back({prefix + nr.name, shift(nr.range)});
    for (std::size_t d = 0; d < kNumDescriptions; ++d) {
      for (const auto& seg : part.descriptions[d]) {
        if (const auto* c = std::get_if<Copy>(&seg)) {
          append_range(out.descriptions[d], shift(c->range));
          continue;
        }
        Xor x = std::get<Xor>(seg);
        for (auto& op : x.operands) {
          for (auto& r : op) r = shift(r);
        }
        out.descriptions[d].push_back(std::move(x));
      }
    }
    for (std::size_t k = 0; k < kNumLayers; ++k) offset[k] += slice[k];
    if (!out.label.empty()) out.label += "+";
    out.label += parts.size() == 1 && p.weight == 1 ? p.scheme->label
                                                    : p.scheme->label + "@" + format_rational(p.weight);
  }
  return out;
}

std::vector<TimeSharePart> parse_scheme_spec(const std::string& spec) {
  std::vector<TimeSharePart> parts;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t plus = std::min(spec.find('+', start), spec.size());
    const std::string item = spec.substr(start, plus - start);
    const std::size_t at = item.find('@');
    TimeSharePart part;
    part.scheme = &scheme_template(item.substr(0, at));
    part.weight = at == std::string::npos ? Rational(1) : parse_rational(item.substr(at + 1));
    parts.push_back(part);
    start = plus + 1;
  }
  return parts;
}

}  // namespace mld
