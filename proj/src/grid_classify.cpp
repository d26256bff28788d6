#include "cc4/grid_classify.hpp"

#include <cstdint>

namespace cc4 {

std::vector<BitVector> classify_batch_serial(const CC4Network& network,
                                             std::span<const BitVector> inputs) {
  std::vector<BitVector> outputs(inputs.size());
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    outputs[i] = network.classify(inputs[i]);
  }
  return outputs;
}

std::vector<BitVector> classify_batch(const CC4Network& network,
                                      std::span<const BitVector> inputs) {
  if (!network.tie_policy().deterministic()) {
    return classify_batch_serial(network, inputs);
  }
  std::vector<BitVector> outputs(inputs.size());
  const std::int64_t count = static_cast<std::int64_t>(inputs.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    outputs[static_cast<std::size_t>(i)] =
        network.classify(inputs[static_cast<std::size_t>(i)]);
  }
  return outputs;
}

}  // namespace cc4
