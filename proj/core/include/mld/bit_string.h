#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mld {

// Bit sequence stored MSB-first in bytes; unused trailing bits are zero.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t size) : size_(size), bytes_((size + 7) / 8, 0) {}

  // First `bits` bits of the byte buffer (all of it when bits is npos).
  static BitString from_bytes(std::span<const std::uint8_t> bytes, std::size_t bits = npos);
  // Accepts '0' and '1' only.
  static BitString from_string(std::string_view bits);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool get(std::size_t i) const { return (bytes_[i >> 3] >> (7 - (i & 7))) & 1U; }
  void set(std::size_t i, bool value);

  void push_back(bool value);
  void append(const BitString& other);
  void append_range(const BitString& other, std::size_t begin, std::size_t end);
  BitString slice(std::size_t begin, std::size_t end) const;

  // Bitwise XOR of equal-length strings.
  BitString operator^(const BitString& other) const;

  const std::vector<std::uint8_t>& bytes() const { return bytes_; }
  std::string to_string() const;

  bool operator==(const BitString& other) const = default;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t size_ = 0;
  std::vector<std::uint8_t> bytes_;
};

}  // namespace mld
