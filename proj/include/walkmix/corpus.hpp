#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "walkmix/graph.hpp"
#include "walkmix/rng.hpp"

namespace walkmix {

struct SamplingConfig {
  int walk_length = 40;
  int walks_per_node = 10;
  std::uint64_t seed = 1;
  int workers = 1;
};

/// Random-walk sequences used as training sentences.
struct WalkCorpus {
  std::vector<std::vector<NodeId>> walks;
  int walk_length = 0;
  int walks_per_node = 0;

  std::size_t size() const { return walks.size(); }
  // max node id + 1; 0 for an empty corpus.
  std::size_t node_span() const;
};

/// Uniform random walk of at most `length` nodes starting at `start`.
/// Truncates when the current node has no neighbors.
std::vector<NodeId> random_walk(const Graph& graph, NodeId start, int length, Rng& rng);

/// walks_per_node passes, each over a freshly shuffled node order. Every walk
/// draws from its own derived seed, so output is identical for any worker
/// count; walk count is exactly walks_per_node * node_count.
WalkCorpus generate_corpus(const Graph& graph, const SamplingConfig& cfg);

/// One walk per line, space-separated node ids.
void save_corpus(const WalkCorpus& corpus, const std::string& path);
WalkCorpus load_corpus(const std::string& path);

}  // namespace walkmix
