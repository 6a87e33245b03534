#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>

#include "mld/ordering.h"
#include "mld/rational.h"

namespace mld {

// A linear combination c_1 x_1 + ... + c_7 x_7 of the seven per-layer
// quantities. The same form is read over layer entropies h_k (region
// right-hand sides, corner rates) or over stream bit-lengths l_k (codec
// partition sizes).
class LinearForm {
 public:
  LinearForm() = default;
  explicit LinearForm(std::array<Rational, kNumLayers> coefficients) : c_(std::move(coefficients)) {}

  // x_k, 1-based.
  static LinearForm layer(int k);
  // x_1 + ... + x_j for j in 0..7 (zero form when j == 0).
  static LinearForm cumulative(int j);

  const Rational& coeff(int k) const { return c_.at(static_cast<std::size_t>(k - 1)); }
  const std::array<Rational, kNumLayers>& coefficients() const { return c_; }

  Rational evaluate(std::span<const Rational, kNumLayers> x) const;
  double evaluate(std::span<const double, kNumLayers> x) const;

  // Renders e.g. "2*h1 + h2 + 3/2*h3" with the given variable stem.
  std::string to_string(std::string_view var = "h") const;

  LinearForm& operator+=(const LinearForm& rhs);
  LinearForm& operator-=(const LinearForm& rhs);
  LinearForm& operator*=(const Rational& k);

  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  friend LinearForm operator*(LinearForm a, const Rational& k) { return a *= k; }
  friend LinearForm operator*(const Rational& k, LinearForm a) { return a *= k; }
  friend LinearForm operator/(LinearForm a, const Rational& k) { return a *= Rational(1) / k; }

  bool operator==(const LinearForm& other) const { return c_ == other.c_; }

 private:
  std::array<Rational, kNumLayers> c_{};
};

// Shorthands used throughout the catalog and region builders.
inline LinearForm h(int k) { return LinearForm::layer(k); }
inline LinearForm H(int j) { return LinearForm::cumulative(j); }

}  // namespace mld
