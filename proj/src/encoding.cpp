#include "cc4/encoding.hpp"

#include <stdexcept>
#include <string>

#include "cc4/errors.hpp"

namespace cc4 {
namespace {

void check_range(int n, int max_value, const char* codec) {
  if (n < 0 || n > max_value) {
    throw std::out_of_range(std::string(codec) + ": value " +
                            std::to_string(n) + " outside [0, " +
                            std::to_string(max_value) + "]");
  }
}

void check_length(const BitVector& code, int width, const char* codec) {
  if (code.size() != width) {
    throw ShapeError(std::string(codec) + ": code length " +
                     std::to_string(code.size()) + " != width " +
                     std::to_string(width));
  }
}

}  // namespace

UnaryCodec::UnaryCodec(int width) : width_(width) {
  if (width < 1) {
    throw std::invalid_argument("UnaryCodec: width must be >= 1, got " +
                                std::to_string(width));
  }
}

BitVector UnaryCodec::encode(int n) const {
  check_range(n, width_, "UnaryCodec");
  BitVector code(width_);
  for (int i = 0; i < n; ++i) {
    code.set_bit(i, true);
  }
  return code;
}

int UnaryCodec::decode(const BitVector& code) const {
  check_length(code, width_, "UnaryCodec");
  int n = code.count_ones();
  // The n ones must occupy exactly the n lowest positions.
  for (int i = 0; i < n; ++i) {
    if (!code.bit(i)) {
      throw MalformedCodeError(
          "UnaryCodec: ones are not contiguous and right-aligned in " +
          code.to_string());
    }
  }
  return n;
}

SpreadUnaryCodec::SpreadUnaryCodec(int spread, int max_value)
    : SpreadUnaryCodec(spread, max_value, canonical_width(spread, max_value)) {}

SpreadUnaryCodec::SpreadUnaryCodec(int spread, int max_value, int width)
    : spread_(spread), max_value_(max_value), width_(width) {
  if (spread < 1) {
    throw std::invalid_argument("SpreadUnaryCodec: spread must be >= 1, got " +
                                std::to_string(spread));
  }
  if (max_value < 1) {
    throw std::invalid_argument(
        "SpreadUnaryCodec: max_value must be >= 1, got " +
        std::to_string(max_value));
  }
  if (width < spread) {
    throw std::invalid_argument("SpreadUnaryCodec: width " +
                                std::to_string(width) + " < spread " +
                                std::to_string(spread));
  }
}

BitVector SpreadUnaryCodec::encode(int n) const {
  check_range(n, max_value_, "SpreadUnaryCodec");
  BitVector code(width_);
  if (n == 0) {
    return code;
  }
  // Run of `spread` ones at positions n-1 .. n+spread-2; ones past the top
  // bit are dropped (saturation at narrow widths).
  for (int pos = n - 1; pos <= n + spread_ - 2 && pos < width_; ++pos) {
    code.set_bit(pos, true);
  }
  return code;
}

int SpreadUnaryCodec::decode(const BitVector& code) const {
  check_length(code, width_, "SpreadUnaryCodec");

  int lowest = -1;
  int highest = -1;
  for (int i = 0; i < width_; ++i) {
    if (code.bit(i)) {
      if (lowest < 0) {
        lowest = i;
      }
      highest = i;
    }
  }

  if (lowest < 0) {
    // All zeros encodes 0, but when max_value exceeds the width the values
    // above it saturate to all zeros too and the codeword is ambiguous.
    if (max_value_ > width_) {
      throw MalformedCodeError(
          "SpreadUnaryCodec: all-zeros is shared by 0 and values above " +
          std::to_string(width_) + " at width " + std::to_string(width_));
    }
    return 0;
  }

  const int run = highest - lowest + 1;
  if (run > spread_) {
    throw MalformedCodeError("SpreadUnaryCodec: run of " + std::to_string(run) +
                             " ones exceeds spread " + std::to_string(spread_) +
                             " in " + code.to_string());
  }
  for (int i = lowest; i <= highest; ++i) {
    if (!code.bit(i)) {
      throw MalformedCodeError("SpreadUnaryCodec: more than one run of ones in " +
                               code.to_string());
    }
  }
  // A run shorter than `spread` is legal only when it was truncated at the
  // top bit.
  if (run < spread_ && highest != width_ - 1) {
    throw MalformedCodeError("SpreadUnaryCodec: run of " + std::to_string(run) +
                             " ones not anchored at the top bit in " +
                             code.to_string());
  }

  const int n = lowest + 1;
  if (n > max_value_) {
    throw MalformedCodeError("SpreadUnaryCodec: " + code.to_string() +
                             " decodes to " + std::to_string(n) +
                             " beyond max_value " + std::to_string(max_value_));
  }
  return n;
}

}  // namespace cc4
