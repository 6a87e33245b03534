#pragma once

// Corner-point coding schemes for the chain ordering (table row 1). Each
// template is symbolic in the stream lengths l_1..l_7 and is turned into
// concrete bit ranges by the codec (instantiate_scheme).

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "mld/linear_form.h"
#include "mld/rate_region.h"

namespace mld {

// A named consecutive sub-range of one source stream. Unsplit streams are a
// single piece named "V<k>"; split streams use "V<k>.<part>".
struct PieceSpec {
  std::string name;
  int stream = 0;
  LinearForm length;  // over l_1..l_7
};

using OperandSpec = std::vector<std::string>;  // pieces, concatenated
using SegmentSpec = std::vector<OperandSpec>;  // one operand: copy; more: bitwise XOR

struct SchemeTemplate {
  std::string label;
  Regime regime = Regime::kI;
  // Corner rates over h_1..h_7; also the description lengths over l_1..l_7.
  std::array<LinearForm, kNumDescriptions> rates;
  // Ordered partition of every stream into pieces.
  std::vector<PieceSpec> pieces;
  std::array<std::vector<SegmentSpec>, kNumDescriptions> descriptions;
  // Split-piece lengths over l_1..l_7, each required to be >= 0. Templates
  // without splits accept any lengths.
  std::vector<LinearForm> conditions;

  const PieceSpec& piece(std::string_view name) const;
};

// X1..X10, Y1..Y12, Z1..Z10 in that order.
const std::vector<SchemeTemplate>& all_scheme_templates();

// Throws std::invalid_argument for unknown labels.
const SchemeTemplate& scheme_template(std::string_view label);

std::vector<const SchemeTemplate*> templates_for(Regime regime);

struct CatalogEntry {
  CornerPoint corner;
  const SchemeTemplate* scheme = nullptr;
};

// Labeled corners of the active regime with their schemes. Corners that
// coincide at boundary profiles carry every coinciding label. Tight sets are
// recomputed from the coordinates. Throws RegionError(kNotL1) for other rows.
std::vector<CatalogEntry> corner_scheme_catalog(const Ordering& ordering, const EntropyProfile& profile);

// Attaches catalog labels to enumerated corners (chain ordering only; other
// orderings are returned unlabeled).
std::vector<CornerPoint> label_corners(std::vector<CornerPoint> corners, const Ordering& ordering,
                                       const EntropyProfile& profile);

}  // namespace mld
