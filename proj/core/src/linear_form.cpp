#include "mld/linear_form.h"

#include <stdexcept>

namespace mld {

LinearForm LinearForm::layer(int k) {
  if (k < 1 || k > kNumLayers) throw std::out_of_range("layer index must be in 1..7");
  LinearForm f;
  f.c_[static_cast<std::size_t>(k - 1)] = 1;
  return f;
}

LinearForm LinearForm::cumulative(int j) {
  if (j < 0 || j > kNumLayers) throw std::out_of_range("cumulative index must be in 0..7");
  LinearForm f;
  for (int k = 0; k < j; ++k) f.c_[static_cast<std::size_t>(k)] = 1;
  return f;
}

Rational LinearForm::evaluate(std::span<const Rational, kNumLayers> x) const {
  Rational sum;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] != 0) sum += c_[k] * x[k];
  }
  return sum;
}

double LinearForm::evaluate(std::span<const double, kNumLayers> x) const {
  double sum = 0.0;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] != 0) sum += c_[k].get_d() * x[k];
  }
  return sum;
}

std::string LinearForm::to_string(std::string_view var) const {
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += format_rational(mag) + "*";
    out += std::string(var) + std::to_string(k + 1);
  }
  return out.empty() ? "0" : out;
}

LinearForm& LinearForm::operator+=(const LinearForm& rhs) {
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += rhs.c_[k];
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& rhs) {
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= rhs.c_[k];
  return *this;
}

LinearForm& LinearForm::operator*=(const Rational& k) {
  for (auto& c : c_) c *= k;
  return *this;
}

}  // namespace mld
