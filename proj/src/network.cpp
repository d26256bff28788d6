#include "cc4/network.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "cc4/errors.hpp"

namespace cc4 {
namespace {

void check_input_width(int expected, const BitVector& input) {
  if (input.size() != expected) {
    throw ShapeError("input length " + std::to_string(input.size()) +
                     " != network input width " + std::to_string(expected));
  }
}

}  // namespace

int hidden_net_input(const HiddenUnit& unit, const BitVector& input) {
  if (static_cast<int>(unit.input_weights.size()) != input.size()) {
    throw ShapeError("input length " + std::to_string(input.size()) +
                     " != unit input width " +
                     std::to_string(unit.input_weights.size()));
  }
  int net = unit.bias_weight;  // bias input is fixed at 1
  for (int j = 0; j < input.size(); ++j) {
    net += unit.input_weights[static_cast<std::size_t>(j)] *
           (input.bit(j) ? 1 : 0);
  }
  return net;
}

bool hidden_fires(const HiddenUnit& unit, const BitVector& input) {
  return hidden_net_input(unit, input) > 0;
}

CC4Network::CC4Network(int input_width, int output_width, int radius,
                       const TiePolicy& tie_policy,
                       std::vector<HiddenUnit> units)
    : input_width_(input_width),
      output_width_(output_width),
      radius_(radius),
      tie_policy_(tie_policy),
      units_(std::move(units)),
      tie_breaker_(tie_policy) {}

CC4Network CC4Network::train(std::span<const TrainingSample> samples,
                             int radius, const TiePolicy& tie_policy) {
  check_consistent_shapes(samples);
  if (radius < 0) {
    throw std::invalid_argument("radius must be >= 0, got " +
                                std::to_string(radius));
  }

  const int input_width = samples.front().input.size();
  const int output_width = samples.front().output.size();

  std::vector<HiddenUnit> units;
  units.reserve(samples.size());
  for (const TrainingSample& sample : samples) {
    HiddenUnit unit;
    unit.input_weights.resize(static_cast<std::size_t>(input_width));
    for (int j = 0; j < input_width; ++j) {
      unit.input_weights[static_cast<std::size_t>(j)] =
          sample.input.bit(j) ? 1 : -1;
    }
    unit.ones_count = sample.input.count_ones();
    unit.bias_weight = radius - unit.ones_count + 1;
    unit.output_weights.resize(static_cast<std::size_t>(output_width));
    for (int m = 0; m < output_width; ++m) {
      unit.output_weights[static_cast<std::size_t>(m)] =
          sample.output.bit(m) ? 1 : -1;
    }
    units.push_back(std::move(unit));
  }

  return CC4Network(input_width, output_width, radius, tie_policy,
                    std::move(units));
}

BitVector CC4Network::classify(const BitVector& input) const {
  check_input_width(input_width_, input);

  std::vector<int> votes(static_cast<std::size_t>(output_width_), 0);
  for (const HiddenUnit& unit : units_) {
    if (!hidden_fires(unit, input)) {
      continue;
    }
    for (int m = 0; m < output_width_; ++m) {
      votes[static_cast<std::size_t>(m)] +=
          unit.output_weights[static_cast<std::size_t>(m)];
    }
  }

  BitVector output(output_width_);
  for (int m = 0; m < output_width_; ++m) {
    const int sum = votes[static_cast<std::size_t>(m)];
    const int bit = sum > 0 ? 1 : sum < 0 ? 0 : tie_breaker_.resolve();
    output.set_bit(m, bit != 0);
  }
  return output;
}

std::vector<TrainingSample> CC4Network::training_samples() const {
  std::vector<TrainingSample> samples;
  samples.reserve(units_.size());
  for (const HiddenUnit& unit : units_) {
    TrainingSample sample{BitVector(input_width_), BitVector(output_width_)};
    for (int j = 0; j < input_width_; ++j) {
      sample.input.set_bit(j, unit.input_weights[static_cast<std::size_t>(j)] > 0);
    }
    for (int m = 0; m < output_width_; ++m) {
      sample.output.set_bit(m,
                            unit.output_weights[static_cast<std::size_t>(m)] > 0);
    }
    samples.push_back(std::move(sample));
  }
  return samples;
}

CC4Network train(std::span<const TrainingSample> samples, int radius,
                 const TiePolicy& tie_policy) {
  return CC4Network::train(samples, radius, tie_policy);
}

}  // namespace cc4
