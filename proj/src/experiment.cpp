#include "cc4/experiment.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <set>
#include <stdexcept>
#include <utility>

#include "cc4/encoding.hpp"
#include "cc4/errors.hpp"
#include "cc4/grid_classify.hpp"
#include "cc4/network.hpp"
#include "cc4/oracle.hpp"

namespace cc4 {
namespace {

BitVector encode_coordinate(int value, const CoordinateScheme& scheme) {
  if (const auto* unary = std::get_if<UnaryScheme>(&scheme)) {
    return UnaryCodec(unary->width).encode(value);
  }
  const auto& spread = std::get<SpreadScheme>(scheme);
  return SpreadUnaryCodec(spread.spread, spread.max_value(), spread.width)
      .encode(value);
}

TrainingMask resolve_mask(const ExperimentConfig& config, bool* sampled,
                          int* sample_count, std::uint64_t* sample_seed) {
  *sampled = false;
  *sample_count = 0;
  *sample_seed = 0;
  if (config.mask) {
    const TrainingMask& mask = *config.mask;
    if (mask.rows != config.pattern.rows() ||
        mask.cols != config.pattern.cols()) {
      throw ShapeError("experiment: mask is " + std::to_string(mask.rows) +
                       "x" + std::to_string(mask.cols) + " but the pattern is " +
                       std::to_string(config.pattern.rows()) + "x" +
                       std::to_string(config.pattern.cols()));
    }
    if (mask.entries.empty()) {
      throw std::invalid_argument("experiment: mask has no entries");
    }
    std::set<std::pair<int, int>> seen;
    for (const MaskEntry& entry : mask.entries) {
      if (entry.row < 1 || entry.row > mask.rows || entry.col < 1 ||
          entry.col > mask.cols) {
        throw std::out_of_range("experiment: mask entry (" +
                                std::to_string(entry.row) + ", " +
                                std::to_string(entry.col) + ") outside grid");
      }
      if (!seen.emplace(entry.row, entry.col).second) {
        throw std::invalid_argument("experiment: duplicate mask entry (" +
                                    std::to_string(entry.row) + ", " +
                                    std::to_string(entry.col) + ")");
      }
    }
    return mask;
  }
  if (!config.sampling) {
    throw std::invalid_argument("experiment: neither mask nor sampling given");
  }
  const SamplingSpec& spec = *config.sampling;
  if (spec.count.has_value() == spec.fraction.has_value()) {
    throw std::invalid_argument(
        "experiment: sampling needs exactly one of count and fraction");
  }
  const int count = spec.count
                        ? *spec.count
                        : sample_count_from_fraction(config.pattern,
                                                     *spec.fraction);
  *sampled = true;
  *sample_count = count;
  *sample_seed = spec.seed;
  return sample_training_points(config.pattern, count, spec.seed);
}

}  // namespace

int scheme_width(const CoordinateScheme& scheme) {
  return std::visit([](const auto& s) { return s.width; }, scheme);
}

int scheme_max_value(const CoordinateScheme& scheme) {
  if (const auto* unary = std::get_if<UnaryScheme>(&scheme)) {
    return unary->width;
  }
  return std::get<SpreadScheme>(scheme).max_value();
}

std::string scheme_name(const CoordinateScheme& scheme) {
  return std::holds_alternative<UnaryScheme>(scheme) ? "unary" : "spread";
}

BitVector encode_point(int row, int col, const CoordinateScheme& scheme) {
  return concat(encode_coordinate(row, scheme),
                encode_coordinate(col, scheme));
}

std::vector<TrainingSample> mask_to_samples(const TrainingMask& mask,
                                            const CoordinateScheme& scheme) {
  std::vector<TrainingSample> samples;
  samples.reserve(mask.entries.size());
  for (const MaskEntry& entry : mask.entries) {
    BitVector output(1);
    output.set_bit(0, entry.label != 0);
    samples.push_back(
        {encode_point(entry.row, entry.col, scheme), std::move(output)});
  }
  return samples;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  if (config.radii.empty()) {
    throw std::invalid_argument("experiment: no radii configured");
  }
  for (int radius : config.radii) {
    if (radius < 0) {
      throw std::invalid_argument("experiment: radius " +
                                  std::to_string(radius) + " is negative");
    }
  }
  const int max_coordinate =
      std::max(config.pattern.rows(), config.pattern.cols());
  if (scheme_max_value(config.scheme) < max_coordinate) {
    throw std::out_of_range("experiment: scheme encodes values up to " +
                            std::to_string(scheme_max_value(config.scheme)) +
                            " but the grid needs " +
                            std::to_string(max_coordinate));
  }

  ExperimentResult result;
  result.rows = config.pattern.rows();
  result.cols = config.pattern.cols();
  result.scheme = config.scheme;
  result.tie_policy = config.tie_policy;
  result.used_oracle = config.use_oracle;

  result.radii = config.radii;
  std::sort(result.radii.begin(), result.radii.end());
  result.radii.erase(std::unique(result.radii.begin(), result.radii.end()),
                     result.radii.end());

  result.mask = resolve_mask(config, &result.sampled, &result.sample_count,
                             &result.sample_seed);

  const std::vector<TrainingSample> samples =
      mask_to_samples(result.mask, config.scheme);

  // Every grid cell, row-major; this is also the evaluation order under the
  // seeded_random tie policy.
  std::vector<BitVector> cell_inputs;
  cell_inputs.reserve(static_cast<std::size_t>(config.pattern.cell_count()));
  for (int row = 1; row <= config.pattern.rows(); ++row) {
    for (int col = 1; col <= config.pattern.cols(); ++col) {
      cell_inputs.push_back(encode_point(row, col, config.scheme));
    }
  }

  for (int radius : result.radii) {
    std::vector<BitVector> predictions;
    if (config.use_oracle) {
      TieBreaker ties(config.tie_policy);
      predictions.reserve(cell_inputs.size());
      for (const BitVector& input : cell_inputs) {
        predictions.push_back(oracle_classify(samples, radius, input, ties));
      }
    } else {
      const CC4Network network =
          CC4Network::train(samples, radius, config.tie_policy);
      predictions = classify_batch(network, cell_inputs);
    }

    RadiusResult radius_result{radius,
                               GridPattern(result.rows, result.cols), 0, 0};
    std::size_t i = 0;
    for (int row = 1; row <= result.rows; ++row) {
      for (int col = 1; col <= result.cols; ++col) {
        radius_result.predicted.set_label(row, col,
                                          predictions[i].bit(0) ? 1 : 0);
        ++i;
      }
    }
    std::tie(radius_result.classified, radius_result.misclassified) =
        score(radius_result.predicted, config.pattern);
    result.per_radius.push_back(std::move(radius_result));
  }

  if (result.radii.size() >= 3) {
    result.stability_radii.assign(result.radii.begin() + 1,
                                  result.radii.end());
    result.stability = stability_metric(result, result.stability_radii);
  }
  return result;
}

std::pair<int, int> score(const GridPattern& predicted,
                          const GridPattern& truth) {
  if (predicted.rows() != truth.rows() || predicted.cols() != truth.cols()) {
    throw ShapeError("score: predicted map is " +
                     std::to_string(predicted.rows()) + "x" +
                     std::to_string(predicted.cols()) + " but the pattern is " +
                     std::to_string(truth.rows()) + "x" +
                     std::to_string(truth.cols()));
  }
  int misclassified = 0;
  for (int row = 1; row <= truth.rows(); ++row) {
    for (int col = 1; col <= truth.cols(); ++col) {
      misclassified += predicted.label(row, col) != truth.label(row, col);
    }
  }
  return {truth.cell_count() - misclassified, misclassified};
}

int stability_metric(const ExperimentResult& result,
                     const std::vector<int>& radii_subset) {
  if (radii_subset.size() < 2) {
    throw std::invalid_argument(
        "stability_metric: need at least two radii, got " +
        std::to_string(radii_subset.size()));
  }
  int lowest = 0;
  int highest = 0;
  bool first = true;
  for (int radius : radii_subset) {
    const auto it = std::find_if(
        result.per_radius.begin(), result.per_radius.end(),
        [radius](const RadiusResult& r) { return r.radius == radius; });
    if (it == result.per_radius.end()) {
      throw std::invalid_argument("stability_metric: radius " +
                                  std::to_string(radius) +
                                  " is not part of the result");
    }
    if (first) {
      lowest = highest = it->misclassified;
      first = false;
    } else {
      lowest = std::min(lowest, it->misclassified);
      highest = std::max(highest, it->misclassified);
    }
  }
  return highest - lowest;
}

std::string experiment_csv(const ExperimentResult& result) {
  std::string csv = "radius,classified,misclassified\n";
  for (const RadiusResult& r : result.per_radius) {
    csv += std::to_string(r.radius) + "," + std::to_string(r.classified) +
           "," + std::to_string(r.misclassified) + "\n";
  }
  return csv;
}

std::string experiment_report_json(const ExperimentResult& result) {
  using ordered_json = nlohmann::ordered_json;

  ordered_json scheme;
  scheme["name"] = scheme_name(result.scheme);
  scheme["width"] = scheme_width(result.scheme);
  if (const auto* spread = std::get_if<SpreadScheme>(&result.scheme)) {
    scheme["spread"] = spread->spread;
  }

  ordered_json config;
  config["rows"] = result.rows;
  config["cols"] = result.cols;
  config["scheme"] = std::move(scheme);
  config["radii"] = result.radii;
  config["tie_policy"] = to_string(result.tie_policy.kind);
  if (result.tie_policy.kind == TieBreak::SeededRandom) {
    config["tie_seed"] = result.tie_policy.seed;
  }
  if (result.sampled) {
    ordered_json sampling;
    sampling["count"] = result.sample_count;
    sampling["seed"] = result.sample_seed;
    config["sampling"] = std::move(sampling);
  } else {
    config["mask"] = "explicit";
  }
  config["classifier"] = result.used_oracle ? "oracle" : "network";

  ordered_json results = ordered_json::array();
  for (const RadiusResult& r : result.per_radius) {
    ordered_json entry;
    entry["radius"] = r.radius;
    entry["classified"] = r.classified;
    entry["misclassified"] = r.misclassified;
    entry["map"] = render_map(r.predicted);
    results.push_back(std::move(entry));
  }

  ordered_json doc;
  doc["config"] = std::move(config);
  doc["mask"] = render_map(result.mask);
  doc["results"] = std::move(results);
  if (result.stability) {
    ordered_json stability;
    stability["radii"] = result.stability_radii;
    stability["value"] = *result.stability;
    doc["stability"] = std::move(stability);
  } else {
    doc["stability"] = nullptr;
  }
  return doc.dump(2) + "\n";
}

}  // namespace cc4
