#include "walkmix/embedding.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace walkmix {

double sigmoid(double z) {
  if (z >= 0.0) {
    return 1.0 / (1.0 + std::exp(-z));
  }
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double sigmoid01(double z) {
  // |logit| <= 36 keeps sigmoid within one ulp of the open interval.
  return sigmoid(std::clamp(z, -36.0, 36.0));
}

double log_sigmoid(double z) {
  // log sigmoid(z) = -softplus(-z)
  if (z >= 0.0) return -std::log1p(std::exp(-z));
  return z - std::log1p(std::exp(z));
}

EmbeddingModel::EmbeddingModel(std::size_t node_count, int dim)
    : node_count_(node_count),
      dim_(dim),
      input_(node_count * static_cast<std::size_t>(dim), 0.0),
      output_(node_count * static_cast<std::size_t>(dim), 0.0) {
  if (dim < 1) throw std::invalid_argument("embedding dim must be >= 1");
}

bool EmbeddingModel::all_finite() const {
  auto ok = [](const std::vector<double>& m) {
    return std::all_of(m.begin(), m.end(), [](double x) { return std::isfinite(x); });
  };
  return ok(input_) && ok(output_);
}

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

}  // namespace

double similarity(const EmbeddingModel& model, NodeId v, NodeId n) {
  if (v >= model.node_count() || n >= model.node_count()) {
    throw std::invalid_argument("similarity: node id out of range");
  }
  return sigmoid01(dot(model.input_row(v), model.output_row(n)));
}

std::vector<std::pair<NodeId, NodeId>> context_pairs(const WalkCorpus& corpus, int window) {
  if (window < 1) throw std::invalid_argument("context window must be >= 1");
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (const auto& walk : corpus.walks) {
    for_each_context_pair(walk, window, [&](NodeId c, NodeId x) { pairs.emplace_back(c, x); });
  }
  return pairs;
}

std::size_t count_context_pairs(const WalkCorpus& corpus, int window) {
  std::size_t count = 0;
  for (const auto& walk : corpus.walks) {
    const long long n = static_cast<long long>(walk.size());
    for (long long t = 0; t < n; ++t) {
      count += static_cast<std::size_t>(std::min<long long>(t, window) +
                                        std::min<long long>(n - 1 - t, window));
    }
  }
  return count;
}

PairGradient loss_and_gradient(const EmbeddingModel& model, NodeId center, NodeId context,
                               std::span<const NodeId> negatives) {
  const auto w = model.input_row(center);
  PairGradient g;
  g.center = center;
  g.center_input.assign(w.size(), 0.0);

  auto output_slot = [&](NodeId id) -> std::vector<double>& {
    for (auto& [node, row] : g.output_rows) {
      if (node == id) return row;
    }
    g.output_rows.emplace_back(id, std::vector<double>(w.size(), 0.0));
    return g.output_rows.back().second;
  };

  // positive term: -log sigmoid(w.u_c)
  {
    const auto u = model.output_row(context);
    const double z = dot(w, u);
    g.loss -= log_sigmoid(z);
    const double coeff = sigmoid(z) - 1.0;
    axpy(coeff, u, std::span<double>(g.center_input));
    axpy(coeff, w, std::span<double>(output_slot(context)));
  }
  // negative terms: -log sigmoid(-w.u_k)
  for (NodeId k : negatives) {
    const auto u = model.output_row(k);
    const double z = dot(w, u);
    g.loss -= log_sigmoid(-z);
    const double coeff = sigmoid(z);
    axpy(coeff, u, std::span<double>(g.center_input));
    axpy(coeff, w, std::span<double>(output_slot(k)));
  }
  return g;
}

UnigramSampler::UnigramSampler(const WalkCorpus& corpus, std::size_t node_count, double power) {
  std::vector<double> weight(node_count, 0.0);
  double total = 0.0;
  for (const auto& walk : corpus.walks) {
    for (NodeId v : walk) {
      if (v >= node_count) {
        throw std::invalid_argument("unigram sampler: corpus node " + std::to_string(v) +
                                    " out of range");
      }
      weight[v] += 1.0;
    }
  }
  for (double& x : weight) {
    x = x > 0.0 ? std::pow(x, power) : 0.0;
    total += x;
  }
  if (total <= 0.0) throw std::invalid_argument("unigram sampler: empty corpus");

  // Walker alias construction.
  const std::size_t n = node_count;
  prob_.assign(n, 0.0);
  alias_.assign(n, 0);
  std::vector<double> scaled(n);
  std::vector<NodeId> small, large;
  for (std::size_t i = 0; i < n; ++i) {
    scaled[i] = weight[i] / total * static_cast<double>(n);
    (scaled[i] < 1.0 ? small : large).push_back(static_cast<NodeId>(i));
  }
  while (!small.empty() && !large.empty()) {
    const NodeId s = small.back();
    small.pop_back();
    const NodeId l = large.back();
    large.pop_back();
    prob_[s] = scaled[s];
    alias_[s] = l;
    scaled[l] = scaled[l] + scaled[s] - 1.0;
    (scaled[l] < 1.0 ? small : large).push_back(l);
  }
  for (NodeId i : large) prob_[i] = 1.0;
  for (NodeId i : small) prob_[i] = 1.0;
}

NodeId UnigramSampler::sample(Rng& rng) const {
  const std::size_t i = rng.below(prob_.size());
  return rng.real() < prob_[i] ? static_cast<NodeId>(i) : alias_[i];
}

namespace {

// One SGD step on a single (center, context) pair; returns the pair loss.
// Updates are applied in place, sparse (center input row + touched output
// rows), matching loss_and_gradient row-for-row.
double sgd_step(std::vector<double>& input, std::vector<double>& output, int dim, NodeId center,
                NodeId context, const UnigramSampler& sampler, Rng& neg_rng, int negatives,
                double lr, std::vector<double>& scratch) {
  double* w = input.data() + static_cast<std::size_t>(center) * dim;
  scratch.assign(static_cast<std::size_t>(dim), 0.0);  // gradient wrt w, applied after all rows

  double loss = 0.0;
  {
    double* u = output.data() + static_cast<std::size_t>(context) * dim;
    double z = 0.0;
    for (int i = 0; i < dim; ++i) z += w[i] * u[i];
    loss -= log_sigmoid(z);
    const double coeff = sigmoid(z) - 1.0;
    for (int i = 0; i < dim; ++i) {
      scratch[i] += coeff * u[i];
      u[i] -= lr * coeff * w[i];
    }
  }
  for (int k = 0; k < negatives; ++k) {
    const NodeId neg = sampler.sample(neg_rng);
    if (neg == context) continue;  // consumed, not used
    double* u = output.data() + static_cast<std::size_t>(neg) * dim;
    double z = 0.0;
    for (int i = 0; i < dim; ++i) z += w[i] * u[i];
    loss -= log_sigmoid(-z);
    const double coeff = sigmoid(z);
    for (int i = 0; i < dim; ++i) {
      scratch[i] += coeff * u[i];
      u[i] -= lr * coeff * w[i];
    }
  }
  for (int i = 0; i < dim; ++i) w[i] -= lr * scratch[i];
  return loss;
}

}  // namespace

EmbeddingModel train_skipgram(const WalkCorpus& corpus, const TrainConfig& cfg, TrainStats* stats) {
  if (corpus.walks.empty()) throw std::invalid_argument("train_skipgram: empty corpus");
  if (cfg.dim < 1 || cfg.window < 1 || cfg.negatives < 1 || cfg.initial_lr <= 0.0 ||
      cfg.epochs < 0) {
    throw std::invalid_argument("train_skipgram: invalid config");
  }

  const std::size_t node_count = corpus.node_span();
  EmbeddingModel model(node_count, cfg.dim);

  Rng init_rng(derive_seed(cfg.seed, "init"));
  for (double& x : model.input()) x = (init_rng.real() - 0.5) / cfg.dim;

  if (stats) stats->epoch_mean_loss.clear();
  if (cfg.epochs == 0) return model;

  const UnigramSampler sampler(corpus, node_count, 0.75);
  const std::size_t pairs_per_epoch = count_context_pairs(corpus, cfg.window);
  if (pairs_per_epoch == 0) return model;  // only length-1 walks: nothing to fit

  const int workers = std::max(1, cfg.workers);
  const std::uint64_t neg_seed = derive_seed(cfg.seed, "negatives");

  auto pairs_in_range = [&](std::size_t begin, std::size_t end) {
    std::size_t count = 0;
    for (std::size_t wi = begin; wi < end; ++wi) {
      const long long n = static_cast<long long>(corpus.walks[wi].size());
      for (long long t = 0; t < n; ++t) {
        count += static_cast<std::size_t>(std::min<long long>(t, cfg.window) +
                                          std::min<long long>(n - 1 - t, cfg.window));
      }
    }
    return count;
  };

  auto run_shard = [&](std::size_t walk_begin, std::size_t walk_end, Rng& neg_rng,
                       std::size_t shard_pairs, int epoch, double* loss_sum) {
    std::vector<double> scratch;
    const double total_steps = static_cast<double>(shard_pairs) * cfg.epochs;
    std::size_t t = static_cast<std::size_t>(epoch) * shard_pairs;
    double sum = 0.0;
    for (std::size_t wi = walk_begin; wi < walk_end; ++wi) {
      const auto& walk = corpus.walks[wi];
      const int n = static_cast<int>(walk.size());
      for (int pos = 0; pos < n; ++pos) {
        for (int j = -cfg.window; j <= cfg.window; ++j) {
          if (j == 0 || pos + j < 0 || pos + j >= n) continue;
          const double progress = static_cast<double>(t) / total_steps;
          const double lr = cfg.initial_lr * std::max(1.0 - progress, 1e-4);
          sum += sgd_step(model.input(), model.output(), cfg.dim, walk[pos], walk[pos + j],
                          sampler, neg_rng, cfg.negatives, lr, scratch);
          ++t;
        }
      }
    }
    *loss_sum = sum;
  };

  // Contiguous walk shards. Each shard keeps one negative stream for the whole
  // run; with one shard that stream is Rng(derive_seed(seed, "negatives")) as
  // documented in the header.
  std::vector<std::pair<std::size_t, std::size_t>> shards;
  const std::size_t chunk = (corpus.walks.size() + workers - 1) / workers;
  for (std::size_t begin = 0; begin < corpus.walks.size(); begin += chunk) {
    shards.emplace_back(begin, std::min(corpus.walks.size(), begin + chunk));
  }
  std::vector<Rng> shard_rngs;
  std::vector<std::size_t> shard_pairs(shards.size());
  for (std::size_t s = 0; s < shards.size(); ++s) {
    shard_rngs.emplace_back(shards.size() == 1 ? neg_seed : derive_seed(neg_seed, s));
    shard_pairs[s] = pairs_in_range(shards[s].first, shards[s].second);
  }

  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    std::vector<double> losses(shards.size(), 0.0);
    if (shards.size() == 1) {
      run_shard(0, corpus.walks.size(), shard_rngs[0], shard_pairs[0], epoch, &losses[0]);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t s = 0; s < shards.size(); ++s) {
        pool.emplace_back([&, s] {
          run_shard(shards[s].first, shards[s].second, shard_rngs[s], shard_pairs[s], epoch,
                    &losses[s]);
        });
      }
      for (auto& th : pool) th.join();
    }
    if (stats) {
      double total = 0.0;
      for (double l : losses) total += l;
      stats->epoch_mean_loss.push_back(total / static_cast<double>(pairs_per_epoch));
    }
  }
  return model;
}

void save_embeddings(const EmbeddingModel& model, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write embeddings to \"" + path + "\"");
  out << model.node_count() << ' ' << model.dim() << '\n';
  char buf[32];
  for (NodeId v = 0; v < model.node_count(); ++v) {
    out << v;
    for (double x : model.input_row(v)) {
      std::snprintf(buf, sizeof(buf), "%.17g", x);
      out << ' ' << buf;
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("I/O error while writing \"" + path + "\"");
}

EmbeddingModel load_embeddings(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open embeddings \"" + path + "\"");

  std::size_t node_count = 0;
  int dim = 0;
  if (!(in >> node_count >> dim) || dim < 1) {
    throw std::runtime_error(path + ": malformed header, expected \"node_count dim\"");
  }
  EmbeddingModel model(node_count, dim);
  for (std::size_t row = 0; row < node_count; ++row) {
    std::size_t id = 0;
    if (!(in >> id) || id >= node_count) {
      throw std::runtime_error(path + ": expected " + std::to_string(node_count) +
                               " rows, bad or missing row " + std::to_string(row));
    }
    for (int i = 0; i < dim; ++i) {
      double x = 0.0;
      if (!(in >> x)) {
        throw std::runtime_error(path + ": non-numeric or missing value in row for node " +
                                 std::to_string(id));
      }
      model.input_row(static_cast<NodeId>(id))[i] = x;
    }
  }
  return model;
}

}  // namespace walkmix
