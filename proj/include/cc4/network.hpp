#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cc4/bit_vector.hpp"
#include "cc4/tie_policy.hpp"
#include "cc4/training_sample.hpp"

namespace cc4 {

/// One hidden neuron, built from a single training sample. The input weights
/// copy the sample bits as +1/-1, the bias weight is radius - ones_count + 1,
/// and the output weights copy the desired output bits as +1/-1. With a
/// strict step activation the neuron fires exactly for inputs within Hamming
/// distance `radius` of its sample.
struct HiddenUnit {
  std::vector<std::int8_t> input_weights;
  int bias_weight = 0;
  std::vector<std::int8_t> output_weights;
  int ones_count = 0;  // ones in the originating sample's input

  friend bool operator==(const HiddenUnit&, const HiddenUnit&) = default;
};

/// Weighted sum the unit sees for `input`: sum of input_weights[j] *
/// input[j] plus the bias weight (the bias input is fixed at 1).
int hidden_net_input(const HiddenUnit& unit, const BitVector& input);

/// Strict step: fires iff the net input is > 0.
bool hidden_fires(const HiddenUnit& unit, const BitVector& input);

/// Corner-classification network trained in a single pass: one hidden unit
/// per training sample, all weights assigned directly from the sample bits
/// and the radius of generalization. No iteration anywhere.
///
/// A trained network is immutable. Classification is safe to run from any
/// number of threads under the deterministic tie policies; under
/// TieBreak::SeededRandom each tie consumes a draw from the network's seeded
/// stream, so calls must be serialized and their order defines the result.
class CC4Network {
 public:
  /// Single-pass training. Throws std::invalid_argument on an empty sample
  /// set or negative radius, ShapeError on inconsistent sample shapes.
  static CC4Network train(std::span<const TrainingSample> samples, int radius,
                          const TiePolicy& tie_policy = TiePolicy::zero());

  int input_width() const { return input_width_; }
  int output_width() const { return output_width_; }
  int radius() const { return radius_; }
  const TiePolicy& tie_policy() const { return tie_policy_; }
  const std::vector<HiddenUnit>& hidden_units() const { return units_; }

  /// Feeds `input` forward: every firing hidden unit votes with its output
  /// weights; output bit m is 1 when the vote sum is positive, 0 when
  /// negative, and the tie policy decides when it is exactly zero.
  BitVector classify(const BitVector& input) const;

  /// Recovers the training set from the weights (the +1/-1 assignment is a
  /// bijection of the sample bits).
  std::vector<TrainingSample> training_samples() const;

  /// Rewinds the seeded tie stream to its initial state. No effect under
  /// deterministic policies.
  void reset_tie_stream() const { tie_breaker_.reset(); }

  /// Canonical JSON model document; to_json . from_json . to_json is
  /// byte-identical.
  std::string to_json() const;

  /// Throws ParseError on malformed documents, naming the offending field
  /// or byte offset.
  static CC4Network from_json(const std::string& text);

  friend bool operator==(const CC4Network& a, const CC4Network& b) {
    return a.input_width_ == b.input_width_ &&
           a.output_width_ == b.output_width_ && a.radius_ == b.radius_ &&
           a.tie_policy_ == b.tie_policy_ && a.units_ == b.units_;
  }

 private:
  CC4Network(int input_width, int output_width, int radius,
             const TiePolicy& tie_policy, std::vector<HiddenUnit> units);

  int input_width_ = 0;
  int output_width_ = 0;
  int radius_ = 0;
  TiePolicy tie_policy_;
  std::vector<HiddenUnit> units_;
  mutable TieBreaker tie_breaker_;
};

/// Free-function spelling of CC4Network::train.
CC4Network train(std::span<const TrainingSample> samples, int radius,
                 const TiePolicy& tie_policy = TiePolicy::zero());

}  // namespace cc4
