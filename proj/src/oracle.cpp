#include "cc4/oracle.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "cc4/errors.hpp"

namespace cc4 {

BitVector oracle_classify(std::span<const TrainingSample> samples, int radius,
                          const BitVector& input, TieBreaker& ties) {
  check_consistent_shapes(samples);
  if (radius < 0) {
    throw std::invalid_argument("radius must be >= 0, got " +
                                std::to_string(radius));
  }
  const int input_width = samples.front().input.size();
  const int output_width = samples.front().output.size();
  if (input.size() != input_width) {
    throw ShapeError("input length " + std::to_string(input.size()) +
                     " != sample input width " + std::to_string(input_width));
  }

  // positive[m] - negative[m] over the samples within the radius sphere.
  std::vector<int> positive(static_cast<std::size_t>(output_width), 0);
  std::vector<int> negative(static_cast<std::size_t>(output_width), 0);
  for (const TrainingSample& sample : samples) {
    if (hamming(input, sample.input) > radius) {
      continue;
    }
    for (int m = 0; m < output_width; ++m) {
      if (sample.output.bit(m)) {
        ++positive[static_cast<std::size_t>(m)];
      } else {
        ++negative[static_cast<std::size_t>(m)];
      }
    }
  }

  BitVector output(output_width);
  for (int m = 0; m < output_width; ++m) {
    const int p = positive[static_cast<std::size_t>(m)];
    const int q = negative[static_cast<std::size_t>(m)];
    const int bit = p > q ? 1 : p < q ? 0 : ties.resolve();
    output.set_bit(m, bit != 0);
  }
  return output;
}

BitVector oracle_classify(std::span<const TrainingSample> samples, int radius,
                          const BitVector& input, const TiePolicy& policy) {
  TieBreaker ties(policy);
  return oracle_classify(samples, radius, input, ties);
}

}  // namespace cc4
