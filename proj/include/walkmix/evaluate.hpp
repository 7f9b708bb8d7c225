#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "walkmix/augment.hpp"
#include "walkmix/classify.hpp"
#include "walkmix/embedding.hpp"
#include "walkmix/graph.hpp"

namespace walkmix {

struct SplitSpec {
  int start_train = 400;
  int step = 200;
  int max_train = 0;  // 0: largest grid point that still leaves a test node
  std::uint64_t seed = 1;
  int repeats = 10;
};

enum class Condition { kBaseline, kInterpolate, kDuplicate };

const char* condition_name(Condition c);
Condition condition_from_name(const std::string& name);

struct EvalRow {
  int train_size = 0;
  Condition condition = Condition::kBaseline;
  double addcoeff = 0.0;
  double macro_f1 = 0.0;
  double micro_f1 = 0.0;
  double avg_f1 = 0.0;
  std::uint64_t seed = 0;
};

struct EvalReport {
  std::vector<EvalRow> rows;
};

/// Unweighted mean over labels of per-label F1. A label with zero TP, FP and
/// FN contributes 0 by default; skip_absent excludes such labels from the
/// mean instead (sensitivity alternative).
double macro_f1(const std::vector<std::vector<LabelId>>& truth,
                const std::vector<std::vector<LabelId>>& pred, std::size_t label_count,
                bool skip_absent = false);

/// F1 of TP/FP/FN pooled across all labels.
double micro_f1(const std::vector<std::vector<LabelId>>& truth,
                const std::vector<std::vector<LabelId>>& pred, std::size_t label_count);

/// Semi-supervised sweep. Per repeat, the labeled nodes are shuffled with
/// Rng(derive_seed(derive_seed(split.seed, repeat), "shuffle")); the first
/// train_size become the training set and the rest the test set, identical
/// across conditions. Augmentation touches the training set only. Test nodes
/// are scored with top-k at k = the node's true label count. Rows are sorted
/// by (train_size, condition, seed).
EvalReport run_sweep(const EmbeddingModel& embeddings, const LabelTable& labels,
                     const SplitSpec& split, const AugmentConfig& aug,
                     const std::vector<Condition>& conditions,
                     const ClassifyConfig& classify = {});

/// One interpolate row per grid value per repeat, at a fixed train size. The
/// split derivation matches run_sweep, so a grid value too small to add any
/// sample reproduces the baseline scores exactly.
EvalReport addcoeff_sweep(const EmbeddingModel& embeddings, const LabelTable& labels,
                          int train_num, const std::vector<double>& grid, std::uint64_t seed,
                          int repeats = 1, double theta = 0.5,
                          const ClassifyConfig& classify = {});

/// Header is exactly "train_size,condition,addcoeff,macro_f1,micro_f1,avg_f1,seed".
void save_report_csv(const EvalReport& report, const std::string& path);
std::string report_to_csv(const EvalReport& report);

}  // namespace walkmix
