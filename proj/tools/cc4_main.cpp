#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cc4/encoding.hpp"
#include "cc4/errors.hpp"
#include "cc4/experiment.hpp"
#include "cc4/network.hpp"
#include "cc4/oracle.hpp"
#include "cc4/pattern.hpp"

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content)) {
    throw std::runtime_error("cannot write " + path);
  }
}

struct SchemeFlags {
  std::string name;
  int width = 0;
  int spread = 3;

  void attach(CLI::App* cmd, bool required) {
    auto* scheme = cmd->add_option("--scheme", name, "coordinate code")
                       ->check(CLI::IsMember({"unary", "spread"}));
    if (required) {
      scheme->required();
    }
    cmd->add_option("--width", width, "code width in bits");
    cmd->add_option("--k", spread, "spread (run length) for the spread code");
  }

  // Per-coordinate scheme for grid commands; width defaults to 16-value
  // coordinates under both codes.
  cc4::CoordinateScheme coordinate_scheme() const {
    if (name == "unary") {
      return cc4::UnaryScheme{width > 0 ? width : 16};
    }
    return cc4::SpreadScheme{spread, width > 0 ? width : 16 + spread - 1};
  }
};

struct TieFlags {
  std::string policy = "zero";
  std::optional<std::uint64_t> seed;

  void attach(CLI::App* cmd) {
    cmd->add_option("--tie-policy", policy,
                    "output-bit rule when the vote sum is zero")
        ->check(CLI::IsMember({"zero", "one", "random"}));
    cmd->add_option("--seed", seed, "seed for sampling and the random tie policy");
  }

  cc4::TiePolicy tie_policy() const {
    if (policy == "random") {
      if (!seed) {
        throw std::invalid_argument("--tie-policy random requires --seed");
      }
      return cc4::TiePolicy::seeded_random(*seed);
    }
    return {cc4::tie_break_from_string(policy), 0};
  }
};

cc4::TrainingMask resolve_cli_mask(const cc4::GridPattern& pattern,
                                   const std::string& mask_path,
                                   std::optional<int> sample_count,
                                   const std::optional<std::uint64_t>& seed) {
  if (!mask_path.empty()) {
    cc4::TrainingMask mask = cc4::parse_mask(read_file(mask_path));
    if (mask.rows != pattern.rows() || mask.cols != pattern.cols()) {
      throw cc4::ShapeError("mask is " + std::to_string(mask.rows) + "x" +
                            std::to_string(mask.cols) + " but the pattern is " +
                            std::to_string(pattern.rows()) + "x" +
                            std::to_string(pattern.cols()));
    }
    return mask;
  }
  if (!sample_count) {
    throw std::invalid_argument("one of --mask and --sample-count is required");
  }
  if (!seed) {
    throw std::invalid_argument("--sample-count requires --seed");
  }
  return cc4::sample_training_points(pattern, *sample_count, *seed);
}

int cmd_encode(const SchemeFlags& scheme, int value) {
  if (scheme.width <= 0) {
    throw std::invalid_argument("encode requires --width");
  }
  if (scheme.name == "unary") {
    std::cout << cc4::UnaryCodec(scheme.width).encode(value).to_string()
              << "\n";
  } else {
    // Values up to `width` keep at least one visible bit; beyond that the
    // code saturates to all zeros and is out of range here.
    std::cout << cc4::SpreadUnaryCodec(scheme.spread, scheme.width, scheme.width)
                     .encode(value)
                     .to_string()
              << "\n";
  }
  return 0;
}

int cmd_train(const std::string& pattern_path, const std::string& mask_path,
              std::optional<int> sample_count, const SchemeFlags& scheme,
              int radius, const TieFlags& ties, const std::string& out_path) {
  const cc4::GridPattern pattern = cc4::parse_pattern(read_file(pattern_path));
  const cc4::TrainingMask mask =
      resolve_cli_mask(pattern, mask_path, sample_count, ties.seed);
  const std::vector<cc4::TrainingSample> samples =
      cc4::mask_to_samples(mask, scheme.coordinate_scheme());

  const auto start = std::chrono::steady_clock::now();
  const cc4::CC4Network network =
      cc4::CC4Network::train(samples, radius, ties.tie_policy());
  const auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);

  write_file(out_path, network.to_json());
  std::cout << "trained " << network.hidden_units().size()
            << " hidden units in " << elapsed.count() << " us\n";
  return 0;
}

int cmd_classify(const std::string& model_path, const std::string& input_bits,
                 std::optional<int> row, std::optional<int> col,
                 const SchemeFlags& scheme, bool with_oracle) {
  const cc4::CC4Network network =
      cc4::CC4Network::from_json(read_file(model_path));

  cc4::BitVector input;
  if (!input_bits.empty()) {
    input = cc4::BitVector::from_string(input_bits);
  } else if (row && col) {
    if (scheme.name.empty()) {
      throw std::invalid_argument("--row/--col need --scheme to encode the point");
    }
    input = cc4::encode_point(*row, *col, scheme.coordinate_scheme());
  } else {
    throw std::invalid_argument("provide --input or both --row and --col");
  }
  if (input.size() != network.input_width()) {
    throw cc4::ShapeError("input has " + std::to_string(input.size()) +
                          " bits but the model expects " +
                          std::to_string(network.input_width()));
  }

  const cc4::BitVector network_out = network.classify(input);
  if (!with_oracle) {
    std::cout << network_out.to_string() << "\n";
    return 0;
  }

  const std::vector<cc4::TrainingSample> samples = network.training_samples();
  const cc4::BitVector oracle_out = cc4::oracle_classify(
      samples, network.radius(), input, network.tie_policy());
  std::cout << "network: " << network_out.to_string() << "\n";
  std::cout << "oracle: " << oracle_out.to_string() << "\n";
  if (network_out == oracle_out) {
    std::cout << "MATCH\n";
    return 0;
  }
  std::cout << "MISMATCH\n";
  return kExitRuntime;
}

int cmd_experiment(const std::string& pattern_path, const std::string& mask_path,
                   std::optional<int> sample_count,
                   std::optional<double> sample_fraction,
                   const SchemeFlags& scheme, const std::vector<int>& radii,
                   const TieFlags& ties, bool use_oracle,
                   const std::string& out_dir) {
  cc4::ExperimentConfig config{
      cc4::parse_pattern(read_file(pattern_path)),
      scheme.coordinate_scheme(),
      radii,
      std::nullopt,
      std::nullopt,
      ties.tie_policy(),
      use_oracle,
  };
  if (!mask_path.empty()) {
    cc4::TrainingMask mask = cc4::parse_mask(read_file(mask_path));
    config.mask = std::move(mask);
  } else {
    if (!sample_count && !sample_fraction) {
      throw std::invalid_argument(
          "one of --mask, --sample-count and --sample-fraction is required");
    }
    if (!ties.seed) {
      throw std::invalid_argument("sampling requires --seed");
    }
    config.sampling = cc4::SamplingSpec{sample_count, sample_fraction, *ties.seed};
  }

  const cc4::ExperimentResult result = cc4::run_experiment(config);

  std::cout << "radius  classified  misclassified\n";
  for (const cc4::RadiusResult& r : result.per_radius) {
    std::cout << std::setw(6) << r.radius << "  " << std::setw(10)
              << r.classified << "  " << std::setw(13) << r.misclassified
              << "\n";
  }
  if (result.stability) {
    std::cout << "stability over r in {";
    for (std::size_t i = 0; i < result.stability_radii.size(); ++i) {
      std::cout << (i ? "," : "") << result.stability_radii[i];
    }
    std::cout << "}: " << *result.stability << "\n";
  } else {
    std::cout << "stability: n/a (needs at least three radii)\n";
  }

  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    const std::filesystem::path dir(out_dir);
    write_file((dir / "summary.csv").string(), cc4::experiment_csv(result));
    write_file((dir / "report.json").string(),
               cc4::experiment_report_json(result));
    write_file((dir / "mask.txt").string(), cc4::render_map(result.mask));
    for (const cc4::RadiusResult& r : result.per_radius) {
      write_file((dir / ("map_r" + std::to_string(r.radius) + ".txt")).string(),
                 cc4::render_map(r.predicted));
    }
  }
  return 0;
}

int cmd_render(const std::string& pattern_path, const std::string& mask_path) {
  if (pattern_path.empty() == mask_path.empty()) {
    throw std::invalid_argument("provide exactly one of --pattern and --mask");
  }
  if (!pattern_path.empty()) {
    std::cout << cc4::render_map(cc4::parse_pattern(read_file(pattern_path)));
  } else {
    std::cout << cc4::render_map(cc4::parse_mask(read_file(mask_path)));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "CC4 corner-classification networks: single-pass training, unary and "
      "spread-unary coding, and the grid-pattern experiment"};
  app.require_subcommand(1);

  // encode
  auto* encode = app.add_subcommand("encode", "print the code word of a value");
  SchemeFlags encode_scheme;
  encode_scheme.attach(encode, /*required=*/true);
  int encode_value = 0;
  encode->add_option("--value", encode_value, "value to encode")->required();

  // train
  auto* train = app.add_subcommand("train", "train a model on grid cells");
  std::string train_pattern, train_mask, train_out;
  std::optional<int> train_sample_count;
  int train_radius = 0;
  SchemeFlags train_scheme;
  TieFlags train_ties;
  train->add_option("--pattern", train_pattern, "pattern file")->required();
  train->add_option("--mask", train_mask, "training mask file");
  train->add_option("--sample-count", train_sample_count,
                    "sample this many cells instead of reading a mask");
  train_scheme.attach(train, /*required=*/true);
  train->add_option("--radius", train_radius, "radius of generalization")
      ->required();
  train_ties.attach(train);
  train->add_option("--out", train_out, "model output path")->required();

  // classify
  auto* classify = app.add_subcommand("classify", "classify one input");
  std::string classify_model, classify_input;
  std::optional<int> classify_row, classify_col;
  bool classify_oracle = false;
  SchemeFlags classify_scheme;
  classify->add_option("--model", classify_model, "model file")->required();
  classify->add_option("--input", classify_input, "raw input bits");
  classify->add_option("--row", classify_row, "cell row (1-based)");
  classify->add_option("--col", classify_col, "cell column (1-based)");
  classify_scheme.attach(classify, /*required=*/false);
  classify->add_flag("--oracle", classify_oracle,
                     "cross-check against the reference classifier");

  // experiment
  auto* experiment =
      app.add_subcommand("experiment", "radius sweep over a grid pattern");
  std::string exp_pattern, exp_mask, exp_out_dir;
  std::optional<int> exp_sample_count;
  std::optional<double> exp_sample_fraction;
  std::vector<int> exp_radii;
  bool exp_oracle = false;
  SchemeFlags exp_scheme;
  TieFlags exp_ties;
  experiment->add_option("--pattern", exp_pattern, "pattern file")->required();
  experiment->add_option("--mask", exp_mask, "training mask file");
  experiment->add_option("--sample-count", exp_sample_count,
                         "sample this many cells");
  experiment->add_option("--sample-fraction", exp_sample_fraction,
                         "sample this fraction of cells");
  exp_scheme.attach(experiment, /*required=*/true);
  experiment->add_option("--radii", exp_radii, "radii to sweep, e.g. 1,2,3,4")
      ->required()
      ->delimiter(',');
  exp_ties.attach(experiment);
  experiment->add_flag("--oracle", exp_oracle,
                       "classify through the reference path");
  experiment->add_option("--out-dir", exp_out_dir,
                         "directory for maps, CSV and JSON report");

  // render
  auto* render = app.add_subcommand("render", "parse and reprint a file");
  std::string render_pattern, render_mask;
  render->add_option("--pattern", render_pattern, "pattern file");
  render->add_option("--mask", render_mask, "mask file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);
    }
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (encode->parsed()) {
      return cmd_encode(encode_scheme, encode_value);
    }
    if (train->parsed()) {
      return cmd_train(train_pattern, train_mask, train_sample_count,
                       train_scheme, train_radius, train_ties, train_out);
    }
    if (classify->parsed()) {
      return cmd_classify(classify_model, classify_input, classify_row,
                          classify_col, classify_scheme, classify_oracle);
    }
    if (experiment->parsed()) {
      return cmd_experiment(exp_pattern, exp_mask, exp_sample_count,
                            exp_sample_fraction, exp_scheme, exp_radii,
                            exp_ties, exp_oracle, exp_out_dir);
    }
    if (render->parsed()) {
      return cmd_render(render_pattern, render_mask);
    }
  } catch (const cc4::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return 0;
}
