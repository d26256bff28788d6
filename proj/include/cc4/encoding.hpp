#pragma once

#include "cc4/bit_vector.hpp"

namespace cc4 {

/// Thermometer code: n is written as n ones, right-aligned in a fixed width.
///
///   width 10:  0 -> 0000000000
///              3 -> 0000000111
///             10 -> 1111111111
///
/// Adjacent values differ in exactly one position, so the Hamming distance
/// between any two codewords is |n1 - n2|.
class UnaryCodec {
 public:
  explicit UnaryCodec(int width);

  int width() const { return width_; }
  int max_value() const { return width_; }

  /// Encodes 0 <= n <= width. Throws std::out_of_range otherwise.
  BitVector encode(int n) const;

  /// Counts the ones of a right-aligned run. Throws ShapeError on wrong
  /// length and MalformedCodeError when the ones are not contiguous and
  /// right-aligned.
  int decode(const BitVector& code) const;

 private:
  int width_;
};

/// Run-of-k code: n >= 1 is a run of `spread` ones whose lowest bit sits at
/// position n-1; n = 0 is all zeros.
///
///   spread 3, width 11:  1 -> 00000000111
///                        2 -> 00000001110
///
/// At the canonical width max_value + spread - 1 every value has a distinct
/// codeword and the distance between positive values n1, n2 is
/// 2 * min(|n1 - n2|, spread): twice the difference until it saturates at
/// 2 * spread. Narrower widths drop the ones that overflow the top bit, which
/// can make distinct values collide; decode refuses the ambiguous cases.
class SpreadUnaryCodec {
 public:
  /// Canonical width max_value + spread - 1.
  SpreadUnaryCodec(int spread, int max_value);

  /// Explicit width >= spread.
  SpreadUnaryCodec(int spread, int max_value, int width);

  static int canonical_width(int spread, int max_value) {
    return max_value + spread - 1;
  }

  int spread() const { return spread_; }
  int max_value() const { return max_value_; }
  int width() const { return width_; }

  /// Encodes 0 <= n <= max_value. Throws std::out_of_range otherwise.
  BitVector encode(int n) const;

  /// Inverse of encode. Throws ShapeError on wrong length and
  /// MalformedCodeError when the string is not a codeword of this codec or
  /// is one that two values share.
  int decode(const BitVector& code) const;

 private:
  int spread_;
  int max_value_;
  int width_;
};

}  // namespace cc4
