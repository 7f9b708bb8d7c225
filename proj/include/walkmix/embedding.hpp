#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "walkmix/corpus.hpp"
#include "walkmix/rng.hpp"

namespace walkmix {

// Numerically stable logistic function and its -log (softplus of the negated
// argument). sigmoid() may round to 0 or 1 at extreme inputs; sigmoid01()
// clamps the logit so the result stays strictly inside (0, 1) in double.
double sigmoid(double z);
double sigmoid01(double z);
double log_sigmoid(double z);  // log(sigmoid(z)), stable for large |z|

struct TrainConfig {
  int dim = 120;
  int window = 5;
  int negatives = 5;
  double initial_lr = 0.025;
  int epochs = 5;
  std::uint64_t seed = 1;
  int workers = 1;
};

/// Two |V| x d matrices. Row i of the input matrix is the published embedding
/// of node i; the output matrix holds the context vectors.
class EmbeddingModel {
 public:
  EmbeddingModel() = default;
  EmbeddingModel(std::size_t node_count, int dim);

  std::size_t node_count() const { return node_count_; }
  int dim() const { return dim_; }

  std::span<double> input_row(NodeId v) { return {input_.data() + std::size_t(v) * dim_, std::size_t(dim_)}; }
  std::span<const double> input_row(NodeId v) const { return {input_.data() + std::size_t(v) * dim_, std::size_t(dim_)}; }
  std::span<double> output_row(NodeId v) { return {output_.data() + std::size_t(v) * dim_, std::size_t(dim_)}; }
  std::span<const double> output_row(NodeId v) const { return {output_.data() + std::size_t(v) * dim_, std::size_t(dim_)}; }

  std::vector<double>& input() { return input_; }
  const std::vector<double>& input() const { return input_; }
  std::vector<double>& output() { return output_; }
  const std::vector<double>& output() const { return output_; }

  bool all_finite() const;

 private:
  std::size_t node_count_ = 0;
  int dim_ = 0;
  std::vector<double> input_, output_;
};

/// sigmoid(input[v] . output[n]), strictly inside (0, 1).
double similarity(const EmbeddingModel& model, NodeId v, NodeId n);

/// Window pairs (center, context) of one walk, in (t, then j = -w..w, j != 0)
/// order, clipped at walk boundaries.
template <typename Fn>
void for_each_context_pair(const std::vector<NodeId>& walk, int window, Fn&& fn) {
  const int n = static_cast<int>(walk.size());
  for (int t = 0; t < n; ++t) {
    for (int j = -window; j <= window; ++j) {
      if (j == 0 || t + j < 0 || t + j >= n) continue;
      fn(walk[t], walk[t + j]);
    }
  }
}

std::vector<std::pair<NodeId, NodeId>> context_pairs(const WalkCorpus& corpus, int window);
std::size_t count_context_pairs(const WalkCorpus& corpus, int window);

/// Per-pair negative-sampling objective
///   loss = -log sigmoid(w.u_c) - sum_k log sigmoid(-w.u_k)
/// with w = input row of the center, u_c / u_k = output rows of the context /
/// negatives. The gradient touches only those rows; rows hit more than once
/// (duplicate negatives, or a negative equal to the context) accumulate.
struct PairGradient {
  double loss = 0.0;
  NodeId center = 0;
  std::vector<double> center_input;  // d loss / d input[center]
  std::vector<std::pair<NodeId, std::vector<double>>> output_rows;
};

PairGradient loss_and_gradient(const EmbeddingModel& model, NodeId center, NodeId context,
                               std::span<const NodeId> negatives);

/// Walker alias table over corpus node frequencies raised to `power`.
class UnigramSampler {
 public:
  UnigramSampler(const WalkCorpus& corpus, std::size_t node_count, double power = 0.75);

  NodeId sample(Rng& rng) const;
  std::size_t size() const { return prob_.size(); }

 private:
  std::vector<double> prob_;
  std::vector<NodeId> alias_;
};

struct TrainStats {
  std::vector<double> epoch_mean_loss;
};

/// Skipgram SGD over the corpus window pairs.
///
/// Deterministic recipe (single worker is the reference):
///   - input rows init uniform in [-0.5/d, 0.5/d] from Rng(derive_seed(seed,
///     "init")), row-major; output rows zero
///   - negatives from UnigramSampler(corpus, V, 0.75) via
///     Rng(derive_seed(seed, "negatives")); a draw equal to the context is
///     consumed but unused
///   - lr decays linearly from initial_lr to initial_lr * 1e-4 over
///     pairs * epochs steps
/// With workers > 1 the walks shard into contiguous chunks with unsynchronized
/// sparse updates (last writer wins per scalar).
EmbeddingModel train_skipgram(const WalkCorpus& corpus, const TrainConfig& cfg,
                              TrainStats* stats = nullptr);

/// Text format: header "node_count dim", then one "id v1 ... vd" line per
/// node, full double precision.
void save_embeddings(const EmbeddingModel& model, const std::string& path);
EmbeddingModel load_embeddings(const std::string& path);

}  // namespace walkmix
