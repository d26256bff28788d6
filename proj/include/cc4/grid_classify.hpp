#pragma once

#include <span>
#include <vector>

#include "cc4/bit_vector.hpp"
#include "cc4/network.hpp"

namespace cc4 {

/// Classifies every input in order. This is the reference path for
/// classify_batch and the only legal path under TieBreak::SeededRandom,
/// whose draws are consumed in input order.
std::vector<BitVector> classify_batch_serial(const CC4Network& network,
                                             std::span<const BitVector> inputs);

/// OpenMP-parallel over inputs. Results are position-for-position identical
/// to classify_batch_serial. Falls back to the serial path under
/// TieBreak::SeededRandom, where evaluation order is part of the contract.
std::vector<BitVector> classify_batch(const CC4Network& network,
                                      std::span<const BitVector> inputs);

}  // namespace cc4
