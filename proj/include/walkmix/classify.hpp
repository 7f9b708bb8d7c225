#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "walkmix/augment.hpp"

namespace walkmix {

struct ClassifyConfig {
  double l2_lambda = 1e-4;
  int epochs = 100;
  double lr = 0.1;
  std::uint64_t seed = 1;  // full-batch training is deterministic; kept for interface parity
};

/// One-vs-rest logistic regression. Labels that had zero positive training
/// samples keep zero weights and a bias of kNeverBias, which scores below
/// anything a fitted sub-classifier produces; `fitted` records which is which.
struct OvrModel {
  static constexpr double kNeverBias = -709.0;  // sigmoid(-709) is the smallest positive score

  std::size_t label_count = 0;
  int dim = 0;
  double l2_lambda = 0.0;
  std::vector<std::vector<double>> weights;
  std::vector<double> bias;
  std::vector<bool> fitted;
};

/// L2-regularized mean log loss of one label's binary problem (positive =
/// sample carries the label; bias unregularized). Fills grad_w / grad_b and
/// returns the loss.
double ovr_loss_and_gradient(const LabeledDataset& dataset, LabelId label,
                             std::span<const double> w, double b, double l2_lambda,
                             std::span<double> grad_w, double& grad_b);

struct OvrTrainStats {
  std::vector<std::vector<double>> epoch_loss;  // [label][epoch], fitted labels only
};

/// Full-batch gradient descent per label, from zero init. The step shrinks
/// whenever it would increase the loss, so per-epoch loss is non-increasing
/// and strictly decreasing until convergence (the objective is convex).
OvrModel train_ovr(const LabeledDataset& dataset, std::size_t label_count,
                   const ClassifyConfig& cfg, OvrTrainStats* stats = nullptr);

/// sigmoid(w_l . x + b_l) per label, every score strictly inside (0, 1).
std::vector<double> predict_scores(const OvrModel& model, std::span<const double> x);

/// The k highest-scoring labels; ties break toward the lower label id.
std::vector<LabelId> predict_topk(const std::vector<double>& scores, int k);

/// Labels with score >= threshold. Fixed-threshold alternative to top-k.
std::vector<LabelId> predict_threshold(const std::vector<double>& scores, double threshold = 0.5);

/// Text format: header "label_count dim l2_lambda", then one
/// "w1 ... wd bias fitted" line per label.
void save_ovr(const OvrModel& model, const std::string& path);
OvrModel load_ovr(const std::string& path);

}  // namespace walkmix
