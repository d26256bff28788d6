#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cc4 {

/// Fixed-length ordered sequence of binary symbols.
///
/// Position 0 is the least significant bit, i.e. the rightmost character of
/// the printed string form. `from_string("0011")` therefore has bits 0 and 1
/// set. The length is fixed at construction.
class BitVector {
 public:
  BitVector() = default;

  /// All-zero vector of the given length.
  explicit BitVector(int length);

  /// Parses a string of '0'/'1' characters, leftmost character = most
  /// significant position. Throws std::invalid_argument on other characters.
  static BitVector from_string(std::string_view text);

  int size() const { return static_cast<int>(bits_.size()); }
  bool empty() const { return bits_.empty(); }

  bool bit(int pos) const { return bits_.at(checked(pos)) != 0; }
  void set_bit(int pos, bool value) { bits_.at(checked(pos)) = value ? 1 : 0; }

  int count_ones() const;

  /// Inverse of from_string.
  std::string to_string() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  static std::size_t checked(int pos);

  std::vector<std::uint8_t> bits_;
};

/// Number of positions where a and b differ. Throws ShapeError on length
/// mismatch.
int hamming(const BitVector& a, const BitVector& b);

/// Joins two vectors; `high` occupies the most significant positions, so the
/// printed form is high.to_string() + low.to_string().
BitVector concat(const BitVector& high, const BitVector& low);

}  // namespace cc4
