#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cc4/bit_vector.hpp"
#include "cc4/pattern.hpp"
#include "cc4/tie_policy.hpp"
#include "cc4/training_sample.hpp"

namespace cc4 {

struct UnaryScheme {
  int width = 16;

  friend bool operator==(const UnaryScheme&, const UnaryScheme&) = default;
};

struct SpreadScheme {
  int spread = 3;
  int width = 18;  // canonical for coordinates up to width - spread + 1

  int max_value() const { return width - spread + 1; }

  friend bool operator==(const SpreadScheme&, const SpreadScheme&) = default;
};

/// Per-coordinate code used by the grid experiment.
using CoordinateScheme = std::variant<UnaryScheme, SpreadScheme>;

int scheme_width(const CoordinateScheme& scheme);
int scheme_max_value(const CoordinateScheme& scheme);
std::string scheme_name(const CoordinateScheme& scheme);

/// Concatenated row and column codes, row in the most significant half. The
/// constant bias input is not part of this vector; the network adds it
/// internally.
BitVector encode_point(int row, int col, const CoordinateScheme& scheme);

/// One training sample per mask entry: the encoded cell coordinates paired
/// with the 1-bit region label.
std::vector<TrainingSample> mask_to_samples(const TrainingMask& mask,
                                            const CoordinateScheme& scheme);

/// How to pick the training cells when no explicit mask is given.
struct SamplingSpec {
  std::optional<int> count;
  std::optional<double> fraction;  // of the cell count, in (0, 1]
  std::uint64_t seed = 0;
};

struct ExperimentConfig {
  GridPattern pattern;
  CoordinateScheme scheme;
  std::vector<int> radii;
  std::optional<TrainingMask> mask;  // wins over sampling when present
  std::optional<SamplingSpec> sampling;
  TiePolicy tie_policy;
  bool use_oracle = false;  // classify through the reference path
};

struct RadiusResult {
  int radius = 0;
  GridPattern predicted;
  int classified = 0;
  int misclassified = 0;
};

struct ExperimentResult {
  int rows = 0;
  int cols = 0;
  CoordinateScheme scheme;
  std::vector<int> radii;  // ascending, deduplicated
  TiePolicy tie_policy;
  bool used_oracle = false;

  TrainingMask mask;  // the cells actually trained on
  bool sampled = false;
  int sample_count = 0;
  std::uint64_t sample_seed = 0;

  std::vector<RadiusResult> per_radius;  // one per radius, same order

  // Misclassification spread over the radii after the first (where the
  // radius sweep is expected to have settled); absent when fewer than two
  // such radii are configured.
  std::vector<int> stability_radii;
  std::optional<int> stability;
};

/// Runs the full sweep: one single-pass training per radius, then every grid
/// cell is classified and scored against the pattern. Deterministic given
/// the config; radii are processed in ascending order and cells row-major.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// (classified, misclassified) cell counts of `predicted` against `truth`.
std::pair<int, int> score(const GridPattern& predicted,
                          const GridPattern& truth);

/// Max minus min of the misclassified counts over `radii_subset`, which must
/// name at least two of the result's radii.
int stability_metric(const ExperimentResult& result,
                     const std::vector<int>& radii_subset);

/// "radius,classified,misclassified" table, one row per radius.
std::string experiment_csv(const ExperimentResult& result);

/// JSON report: config echo, the mask, per-radius maps as text blocks with
/// their counts, and the stability metric.
std::string experiment_report_json(const ExperimentResult& result);

}  // namespace cc4
