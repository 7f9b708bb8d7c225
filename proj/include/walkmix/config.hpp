#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "walkmix/augment.hpp"
#include "walkmix/classify.hpp"
#include "walkmix/corpus.hpp"
#include "walkmix/embedding.hpp"
#include "walkmix/evaluate.hpp"

namespace walkmix {

/// One key-value config file drives the whole pipeline; command-line flags
/// override individual keys. The single `seed` fans out per stage as
/// derive_seed(seed, "walk" | "embed" | "eval") (see rng.hpp), so stages stay
/// independently rerunnable.
struct PipelineConfig {
  std::string edges;
  std::string labels;
  std::string corpus = "corpus.walks";
  std::string embeddings = "embeddings.txt";
  std::string report_dir = ".";

  std::uint64_t seed = 1;
  int workers = 1;

  int walk_length = 40;
  int walks_per_node = 10;

  int dim = 120;
  int window = 5;
  int negatives = 5;
  double initial_lr = 0.025;
  int epochs = 5;

  double addcoeff = 1.0;
  double theta = 0.5;
  std::string mode = "interpolate";  // interpolate | duplicate

  int train_start = 400;
  int train_step = 200;
  int train_max = 0;
  int repeats = 10;
  int train_num = 1200;
  std::vector<double> grid;
  std::vector<std::string> conditions = {"baseline", "interpolate"};

  double classifier_lambda = 1e-4;
  int classifier_epochs = 100;
  double classifier_lr = 0.1;

  SamplingConfig sampling() const;
  TrainConfig training() const;
  AugmentConfig augmentation(std::uint64_t stage_seed) const;
  SplitSpec split() const;
  ClassifyConfig classify() const;
  std::vector<Condition> condition_list() const;

  // Throws on out-of-range values (addcoeff, theta, positive counts...).
  void validate() const;
};

/// "key = value" lines, "#" comments. Unknown keys are errors, reported with
/// their line number. serialize(parse(file)) is canonical and idempotent.
PipelineConfig parse_config(const std::string& path);
PipelineConfig parse_config_text(const std::string& text, const std::string& origin = "<string>");
std::string serialize_config(const PipelineConfig& cfg);
void save_config(const PipelineConfig& cfg, const std::string& path);

}  // namespace walkmix
