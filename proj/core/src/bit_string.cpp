#include "mld/bit_string.h"

#include <stdexcept>

namespace mld {

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes, std::size_t bits) {
  if (bits == npos) bits = bytes.size() * 8;
  if (bits > bytes.size() * 8) throw std::out_of_range("bit count exceeds buffer");
  BitString out;
  out.size_ = bits;
  out.bytes_.assign(bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>((bits + 7) / 8));
  if (bits % 8 != 0) out.bytes_.back() &= static_cast<std::uint8_t>(0xFF << (8 - bits % 8));
  return out;
}

BitString BitString::from_string(std::string_view bits) {
  BitString out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') throw std::invalid_argument("bit string must contain only 0 and 1");
    out.set(i, bits[i] == '1');
  }
  return out;
}

void BitString::set(std::size_t i, bool value) {
  const auto mask = static_cast<std::uint8_t>(0x80U >> (i & 7));
  if (value) {
    bytes_[i >> 3] |= mask;
  } else {
    bytes_[i >> 3] &= static_cast<std::uint8_t>(~mask);
  }
}

void BitString::push_back(bool value) {
  if (size_ % 8 == 0) bytes_.push_back(0);
  ++size_;
  set(size_ - 1, value);
}

void BitString::append(const BitString& other) { append_range(other, 0, other.size_); }

void BitString::append_range(const BitString& other, std::size_t begin, std::size_t end) {
  if (begin > end || end > other.size_) throw std::out_of_range("bit range out of bounds");
  if (size_ % 8 == 0 && begin % 8 == 0) {
    const std::size_t n = end - begin;
    bytes_.insert(bytes_.end(), other.bytes_.begin() + static_cast<std::ptrdiff_t>(begin / 8),
                  other.bytes_.begin() + static_cast<std::ptrdiff_t>((end + 7) / 8));
    size_ += n;
    bytes_.resize((size_ + 7) / 8);
    if (size_ % 8 != 0) bytes_.back() &= static_cast<std::uint8_t>(0xFF << (8 - size_ % 8));
    return;
  }
  bytes_.reserve((size_ + end - begin + 7) / 8);
  for (std::size_t i = begin; i < end; ++i) push_back(other.get(i));
}

BitString BitString::slice(std::size_t begin, std::size_t end) const {
  BitString out;
  out.append_range(*this, begin, end);
  return out;
}

BitString BitString::operator^(const BitString& other) const {
  if (size_ != other.size_) throw std::invalid_argument("xor of bit strings with different lengths");
  BitString out = *this;
  for (std::size_t i = 0; i < bytes_.size(); ++i) out.bytes_[i] ^= other.bytes_[i];
  return out;
}

std::string BitString::to_string() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) out[i] = '1';
  }
  return out;
}

}  // namespace mld
