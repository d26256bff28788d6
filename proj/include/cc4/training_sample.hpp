#pragma once

#include <span>
#include <stdexcept>

#include "cc4/bit_vector.hpp"
#include "cc4/errors.hpp"

namespace cc4 {

/// One labelled corner of the input hypercube: an input bit pattern and the
/// desired output bits. The input carries data bits only; the constant bias
/// input is internal to the network.
struct TrainingSample {
  BitVector input;
  BitVector output;

  friend bool operator==(const TrainingSample&, const TrainingSample&) = default;
};

/// Throws std::invalid_argument when empty, ShapeError unless every sample
/// shares one input width and one output width (output width >= 1).
inline void check_consistent_shapes(std::span<const TrainingSample> samples) {
  if (samples.empty()) {
    throw std::invalid_argument("training set is empty");
  }
  const int input_width = samples.front().input.size();
  const int output_width = samples.front().output.size();
  if (output_width < 1) {
    throw ShapeError("training samples need at least one output bit");
  }
  for (const TrainingSample& sample : samples) {
    if (sample.input.size() != input_width ||
        sample.output.size() != output_width) {
      throw ShapeError("training samples disagree on input/output widths");
    }
  }
}

}  // namespace cc4
