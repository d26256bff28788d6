#include "cc4/bit_vector.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cc4/errors.hpp"

namespace cc4 {

BitVector::BitVector(int length) {
  if (length < 0) {
    throw std::invalid_argument("BitVector: negative length " +
                                std::to_string(length));
  }
  bits_.assign(static_cast<std::size_t>(length), 0);
}

BitVector BitVector::from_string(std::string_view text) {
  BitVector v(static_cast<int>(text.size()));
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch != '0' && ch != '1') {
      throw std::invalid_argument(std::string("BitVector: invalid character '") +
                                  ch + "' at offset " + std::to_string(i));
    }
    // Leftmost character is the highest position.
    v.bits_[text.size() - 1 - i] = (ch == '1') ? 1 : 0;
  }
  return v;
}

std::size_t BitVector::checked(int pos) {
  if (pos < 0) {
    throw std::out_of_range("BitVector: negative position " +
                            std::to_string(pos));
  }
  return static_cast<std::size_t>(pos);
}

int BitVector::count_ones() const {
  return std::accumulate(bits_.begin(), bits_.end(), 0,
                         [](int acc, std::uint8_t b) { return acc + b; });
}

std::string BitVector::to_string() const {
  std::string out(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) {
      out[bits_.size() - 1 - i] = '1';
    }
  }
  return out;
}

int hamming(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size()) {
    throw ShapeError("hamming: length mismatch (" + std::to_string(a.size()) +
                     " vs " + std::to_string(b.size()) + ")");
  }
  int distance = 0;
  for (int i = 0; i < a.size(); ++i) {
    distance += a.bit(i) != b.bit(i);
  }
  return distance;
}

BitVector concat(const BitVector& high, const BitVector& low) {
  BitVector out(high.size() + low.size());
  for (int i = 0; i < low.size(); ++i) {
    out.set_bit(i, low.bit(i));
  }
  for (int i = 0; i < high.size(); ++i) {
    out.set_bit(low.size() + i, high.bit(i));
  }
  return out;
}

}  // namespace cc4
