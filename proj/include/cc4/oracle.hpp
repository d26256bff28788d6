#pragma once

#include <span>

#include "cc4/bit_vector.hpp"
#include "cc4/tie_policy.hpp"
#include "cc4/training_sample.hpp"

namespace cc4 {

/// Reference classifier stating the radius semantics directly: for each
/// output bit, the samples within Hamming distance `radius` of the input
/// vote with their labels and the majority wins; the tie breaker decides an
/// exact split. There are no weights and no network machinery in here, so it
/// cannot share a bug with the trained-network path it is used to check.
BitVector oracle_classify(std::span<const TrainingSample> samples, int radius,
                          const BitVector& input, TieBreaker& ties);

/// Single-shot overload: builds a fresh TieBreaker from `policy`, so under
/// TieBreak::SeededRandom every call restarts the stream.
BitVector oracle_classify(std::span<const TrainingSample> samples, int radius,
                          const BitVector& input,
                          const TiePolicy& policy = TiePolicy::zero());

}  // namespace cc4
