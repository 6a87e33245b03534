#pragma once

// Bit-exact encoder/decoder for the chain-ordering corner schemes and their
// time-shared combinations.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mld/bit_string.h"
#include "mld/errors.h"
#include "mld/ordering.h"
#include "mld/rational.h"
#include "mld/scheme_catalog.h"

namespace mld {

enum class CodecErrc {
  kRegimeMismatch,
  kOddSplit,
  kLengthMismatch,
  kUnresolvable,
  kNonIntegralSplit,
};
using CodecError = Error<CodecErrc>;

using StreamLengths = std::array<std::uint64_t, kNumLayers>;

// Half-open bit range [begin, end) of stream `stream` (1-based).
struct StreamRange {
  int stream = 1;
  std::uint64_t begin = 0;
  std::uint64_t end = 0;

  std::uint64_t size() const { return end - begin; }
  bool operator==(const StreamRange&) const = default;
};

using Operand = std::vector<StreamRange>;  // concatenated ranges

struct Copy {
  StreamRange range;
  bool operator==(const Copy&) const = default;
};

// Bitwise XOR of operands with equal total length.
struct Xor {
  std::vector<Operand> operands;
  bool operator==(const Xor&) const = default;
};

using Segment = std::variant<Copy, Xor>;

std::uint64_t segment_size(const Segment& segment);

struct NamedRange {
  std::string name;
  StreamRange range;
};

struct DescriptionScheme {
  std::string label;
  StreamLengths lengths{};
  std::vector<NamedRange> partition;
  std::array<std::vector<Segment>, kNumDescriptions> descriptions;

  std::uint64_t description_size(int d) const;  // 1-based
  std::array<std::uint64_t, kNumDescriptions> description_sizes() const;
};

class SourceBundle {
 public:
  explicit SourceBundle(std::array<BitString, kNumLayers> streams) : streams_(std::move(streams)) {}

  // Identity pre-coder: cuts one concatenated bit sequence (stream 1 first)
  // into seven streams. Throws CodecError(kLengthMismatch) if the total
  // differs from the sum of the lengths.
  static SourceBundle split(const BitString& concatenated, const StreamLengths& lengths);

  const BitString& stream(int k) const { return streams_.at(static_cast<std::size_t>(k - 1)); }
  StreamLengths lengths() const;
  BitString concatenated() const;

 private:
  std::array<BitString, kNumLayers> streams_;
};

using EncodedDescriptions = std::array<BitString, kNumDescriptions>;
using PartialDescriptions = std::array<std::optional<BitString>, kNumDescriptions>;

// Resolves piece lengths and bit ranges. Throws kRegimeMismatch when the
// lengths violate the template's regime conditions and kOddSplit when a piece
// length is fractional.
DescriptionScheme instantiate_scheme(const SchemeTemplate& tmpl, const StreamLengths& lengths);

// Throws kLengthMismatch if the bundle does not have the scheme's lengths.
EncodedDescriptions encode(const DescriptionScheme& scheme, const SourceBundle& bundle);

// Recovers streams 1..L(subset) from the descriptions in `subset`. The
// available array must hold exactly those descriptions (std::invalid_argument
// otherwise); wrong description lengths give kLengthMismatch and an
// unrecoverable bit gives kUnresolvable.
std::vector<BitString> decode(const DescriptionScheme& scheme, SubsetId subset,
                              const PartialDescriptions& available);

struct TimeSharePart {
  const SchemeTemplate* scheme = nullptr;
  Rational weight;
};

// Gives each part a weight-proportional slice of every stream and applies its
// scheme to that slice; descriptions are the part outputs concatenated in
// order. Weights must be positive and sum to one (std::invalid_argument);
// fractional slice lengths give kNonIntegralSplit.
DescriptionScheme compose_time_share(const std::vector<TimeSharePart>& parts, const StreamLengths& lengths);

// Parses "X5" or "X1@1/2+X2@1/2".
std::vector<TimeSharePart> parse_scheme_spec(const std::string& spec);

}  // namespace mld
