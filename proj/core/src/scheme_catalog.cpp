#include "mld/scheme_catalog.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mld {
namespace {

// Piece lengths over l are written with the same helpers as h-forms.
LinearForm l(int k) { return LinearForm::layer(k); }

struct Split {
  int stream;
  std::vector<std::pair<std::string, LinearForm>> parts;
};

std::vector<std::string> split_on(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  out.push_back(current);
  return out;
}

std::vector<PieceSpec> make_pieces(const std::vector<Split>& splits) {
  std::vector<PieceSpec> pieces;
  for (int k = 1; k <= kNumLayers; ++k) {
    auto it = std::find_if(splits.begin(), splits.end(), [k](const Split& s) { return s.stream == k; });
    if (it == splits.end()) {
      pieces.push_back({"V" + std::to_string(k), k, l(k)});
      continue;
    }
    for (const auto& [part, length] : it->parts) {
      pieces.push_back({"V" + std::to_string(k) + "." + part, k, length});
    }
  }
  return pieces;
}

// Layout grammar: segments separated by spaces, XOR operands by '^', pieces
// concatenated inside an operand by ','. "V3" names the whole stream even when
// it is split.
std::vector<SegmentSpec> parse_layout(std::string_view layout, const std::vector<PieceSpec>& pieces) {
  std::vector<SegmentSpec> segments;
  std::istringstream in{std::string(layout)};
  std::string token;
  while (in >> token) {
    SegmentSpec segment;
    for (const auto& operand_text : split_on(token, '^')) {
      OperandSpec operand;
      for (const auto& ref : split_on(operand_text, ',')) {
        bool found = false;
        for (const auto& p : pieces) {
          if (p.name == ref || p.name.rfind(ref + ".", 0) == 0) {
            operand.push_back(p.name);
            found = true;
          }
        }
        if (!found) throw std::logic_error("catalog layout references unknown piece " + ref);
      }
      segment.push_back(std::move(operand));
    }
    segments.push_back(std::move(segment));
  }
  return segments;
}

// A template only constrains the lengths it splits: every split piece must be
// non-negative. Pieces that are a whole stream need no check.
std::vector<LinearForm> split_conditions(const std::vector<Split>& splits) {
  std::vector<LinearForm> out;
  for (const auto& split : splits) {
    for (const auto& part : split.parts) {
      const LinearForm& n = part.second;
      bool whole_stream = false;
      for (int k = 1; k <= kNumLayers; ++k) whole_stream = whole_stream || n == l(k);
      if (!whole_stream && std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
    }
  }
  return out;
}

SchemeTemplate make(std::string label, Regime regime, std::array<LinearForm, 3> rates,
                    std::vector<Split> splits, std::array<std::string_view, 3> layout) {
  SchemeTemplate t;
  t.label = std::move(label);
  t.regime = regime;
  t.rates = std::move(rates);
  t.pieces = make_pieces(splits);
  for (std::size_t d = 0; d < 3; ++d) t.descriptions[d] = parse_layout(layout[d], t.pieces);
  t.conditions = split_conditions(splits);
  return t;
}

std::vector<SchemeTemplate> build_catalog() {
  const Rational half(1, 2);
  const Split v3_minus_45{3, {{"1", l(3) - l(4) - l(5)}, {"2", l(4) + l(5)}}};
  const Split v3_minus_4{3, {{"1", l(3) - l(4)}, {"2", l(4)}}};
  const Split v5_split{5, {{"1", l(3) - l(4)}, {"2", l(4) + l(5) - l(3)}}};
  const Split v4_two{4, {{"1", l(3)}, {"2", l(4) - l(3)}}};
  const Split v4_three{4, {{"1", l(3)}, {"2", half * (l(4) - l(3))}, {"3", half * (l(4) - l(3))}}};

  // Concatenation-only and single-XOR schemes shared between regimes.
  struct Shared {
    std::array<LinearForm, 3> rates;
    std::vector<Split> splits;
    std::array<std::string_view, 3> layout;
  };
  const std::array<Shared, 10> x = {{
      {{H(1), H(4), H(7)}, {}, {"V1", "V1 V2 V3 V4", "V1 V2 V3 V4 V5 V6 V7"}},
      {{H(1), H(7) - h(5), H(5)}, {}, {"V1", "V1 V2 V3 V4 V6 V7", "V1 V2 V3 V4 V5"}},
      {{H(1) + h(3) + h(4), H(2), H(7)}, {}, {"V1 V3 V4", "V1 V2", "V1 V2 V3 V4 V5 V6 V7"}},
      {{H(1) + h(3) + h(4) + h(7), H(2), H(6)}, {}, {"V1 V3 V4 V7", "V1 V2", "V1 V2 V3 V4 V5 V6"}},
      {{H(1) + h(4) + h(5), H(3) + h(6) + h(7), H(3)},
       {v3_minus_45},
       {"V1 V4 V5", "V1 V2 V3.1 V3.2^V4,V5 V6 V7", "V1 V2 V3"}},
      {{H(1) + h(3) + h(7), H(2) + h(4) + h(5) + h(6), H(3)},
       {v3_minus_45},
       {"V1 V3.1 V3.2^V4,V5 V7", "V1 V2 V4 V5 V6", "V1 V2 V3"}},
      {{H(1) + h(4), H(3), H(3) + h(5) + h(6) + h(7)},
       {v3_minus_4},
       {"V1 V4", "V1 V2 V3.1 V3.2^V4", "V1 V2 V3 V5 V6 V7"}},
      {{H(1) + h(3), H(2) + h(4), H(3) + h(5) + h(6) + h(7)},
       {v3_minus_4},
       {"V1 V3.1 V3.2^V4", "V1 V2 V4", "V1 V2 V3 V5 V6 V7"}},
      {{H(1) + h(4), H(3) + h(6) + h(7), H(3) + h(5)},
       {v3_minus_4},
       {"V1 V4", "V1 V2 V3.1 V3.2^V4 V6 V7", "V1 V2 V3 V5"}},
      {{H(1) + h(3) + h(7), H(2) + h(4), H(3) + h(5) + h(6)},
       {v3_minus_4},
       {"V1 V3.1 V3.2^V4 V7", "V1 V2 V4", "V1 V2 V3 V5 V6"}},
  }};

  std::vector<SchemeTemplate> out;
  auto add_shared = [&](char family, Regime regime, int index) {
    const Shared& s = x[static_cast<std::size_t>(index - 1)];
    out.push_back(make(family + std::to_string(index), regime, s.rates, s.splits, s.layout));
  };

  for (int i = 1; i <= 10; ++i) add_shared('X', Regime::kI, i);

  for (int i : {1, 2, 3, 4}) add_shared('Y', Regime::kII, i);
  out.push_back(make("Y5", Regime::kII, {H(1) + h(4) + h(5), H(2) + h(4) + h(5) + h(6) + h(7), H(3)},
                     {v3_minus_4, v5_split},
                     {"V1 V4 V5", "V1 V2 V3.2^V4 V3.1^V5.1 V5.2 V6 V7", "V1 V2 V3"}));
  out.push_back(make("Y6", Regime::kII, {H(1) + h(4) + h(5) + h(7), H(2) + h(4) + h(5) + h(6), H(3)},
                     {v3_minus_4, v5_split},
                     {"V1 V4 V5 V7", "V1 V2 V3.2^V4 V3.1^V5.1 V5.2 V6", "V1 V2 V3"}));
  for (int i : {7, 8, 9, 10}) add_shared('Y', Regime::kII, i);
  out.push_back(make("Y11", Regime::kII, {H(1) + h(3), H(3) + h(6) + h(7), H(2) + h(4) + h(5)},
                     {v3_minus_4, v5_split},
                     {"V1 V4 V5.1", "V1 V2 V3.2^V4 V3.1^V5.1 V6 V7", "V1 V2 V3 V5.2"}));
  out.push_back(make("Y12", Regime::kII, {H(1) + h(3) + h(7), H(3) + h(6), H(2) + h(4) + h(5)},
                     {v3_minus_4, v5_split},
                     {"V1 V4 V5.1 V7", "V1 V2 V3.2^V4 V3.1^V5.1 V6", "V1 V2 V3 V5.2"}));

  for (int i : {1, 2, 3, 4}) add_shared('Z', Regime::kIII, i);
  const LinearForm mid = half * (h(3) + h(4));
  out.push_back(make("Z5", Regime::kIII, {H(1) + h(4) + h(5), H(2) + h(4) + h(5) + h(6) + h(7), H(3)},
                     {v4_two}, {"V1 V4 V5", "V1 V2 V3^V4.1 V4.2 V5 V6 V7", "V1 V2 V3"}));
  out.push_back(make("Z6", Regime::kIII, {H(1) + h(4) + h(5) + h(7), H(2) + h(4) + h(5) + h(6), H(3)},
                     {v4_two}, {"V1 V4 V5 V7", "V1 V2 V3^V4.1 V4.2 V5 V6", "V1 V2 V3"}));
  out.push_back(make("Z7", Regime::kIII, {H(1) + mid, H(2) + mid, H(2) + mid + h(5) + h(6) + h(7)},
                     {v4_three},
                     {"V1 V4.1 V4.2", "V1 V2 V3^V4.1 V4.2^V4.3", "V1 V2 V3 V4.3 V5 V6 V7"}));
  out.push_back(make("Z8", Regime::kIII, {H(1) + mid, H(2) + mid + h(6) + h(7), H(2) + mid + h(5)},
                     {v4_three},
                     {"V1 V4.1 V4.2", "V1 V2 V3^V4.1 V4.2^V4.3 V6 V7", "V1 V2 V3 V4.3 V5"}));
  out.push_back(make("Z9", Regime::kIII, {H(1) + mid + h(7), H(2) + mid, H(2) + mid + h(5) + h(6)},
                     {v4_three},
                     {"V1 V4.1 V4.2 V7", "V1 V2 V3^V4.1 V4.2^V4.3", "V1 V2 V3 V4.3 V5 V6"}));
  out.push_back(make("Z10", Regime::kIII, {H(1) + mid + h(7), H(2) + mid + h(6), H(2) + mid + h(5)},
                     {v4_three},
                     {"V1 V4.1 V4.2 V7", "V1 V2 V3^V4.1 V4.2^V4.3 V6", "V1 V2 V3 V4.3 V5"}));
  return out;
}

}  // namespace

const PieceSpec& SchemeTemplate::piece(std::string_view name) const {
  for (const auto& p : pieces) {
    if (p.name == name) return p;
  }
  throw std::out_of_range("scheme " + label + " has no piece " + std::string(name));
}

const std::vector<SchemeTemplate>& all_scheme_templates() {
  static const std::vector<SchemeTemplate> catalog = build_catalog();
  return catalog;
}

const SchemeTemplate& scheme_template(std::string_view label) {
  for (const auto& t : all_scheme_templates()) {
    if (t.label == label) return t;
  }
  throw std::invalid_argument("unknown corner scheme '" + std::string(label) + "'");
}

std::vector<const SchemeTemplate*> templates_for(Regime regime) {
  std::vector<const SchemeTemplate*> out;
  for (const auto& t : all_scheme_templates()) {
    if (t.regime == regime) out.push_back(&t);
  }
  return out;
}

std::vector<CatalogEntry> corner_scheme_catalog(const Ordering& ordering, const EntropyProfile& profile) {
  if (ordering.table_row() != 1) {
    throw RegionError(RegionErrc::kNotL1, "corner schemes are only catalogued for ordering row 1");
  }
  const RateRegion region = build_mld_region(ordering, profile);
  const auto templates = templates_for(classify_regime(profile));

  std::vector<CatalogEntry> entries;
  for (const SchemeTemplate* t : templates) {
    RateTriple rates;
    for (std::size_t d = 0; d < 3; ++d) rates[d] = t->rates[d].evaluate(profile.layers());
    entries.push_back({{rates, tight_constraints(region, rates), {}}, t});
  }
  for (auto& e : entries) {
    for (const auto& other : entries) {
      if (other.corner.rates == e.corner.rates) e.corner.labels.push_back(other.scheme->label);
    }
  }
  return entries;
}

std::vector<CornerPoint> label_corners(std::vector<CornerPoint> corners, const Ordering& ordering,
                                       const EntropyProfile& profile) {
  if (ordering.table_row() != 1) return corners;
  const auto entries = corner_scheme_catalog(ordering, profile);
  for (auto& c : corners) {
    c.labels.clear();
    for (const auto& e : entries) {
      if (e.corner.rates == c.rates) c.labels.push_back(e.scheme->label);
    }
  }
  return corners;
}

}  // namespace mld
