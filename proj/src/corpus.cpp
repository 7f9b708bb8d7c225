#include "walkmix/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace walkmix {

std::size_t WalkCorpus::node_span() const {
  NodeId max_id = 0;
  bool any = false;
  for (const auto& walk : walks) {
    for (NodeId v : walk) {
      max_id = std::max(max_id, v);
      any = true;
    }
  }
  return any ? static_cast<std::size_t>(max_id) + 1 : 0;
}

std::vector<NodeId> random_walk(const Graph& graph, NodeId start, int length, Rng& rng) {
  if (start >= graph.node_count()) {
    throw std::invalid_argument("random_walk: start node " + std::to_string(start) +
                                " out of range");
  }
  if (length < 1) throw std::invalid_argument("random_walk: length must be >= 1");

  std::vector<NodeId> walk;
  walk.reserve(static_cast<std::size_t>(length));
  walk.push_back(start);
  NodeId current = start;
  while (static_cast<int>(walk.size()) < length) {
    const auto& nbrs = graph.neighbors(current);
    if (nbrs.empty()) break;
    current = nbrs[rng.below(nbrs.size())];
    walk.push_back(current);
  }
  return walk;
}

WalkCorpus generate_corpus(const Graph& graph, const SamplingConfig& cfg) {
  if (cfg.walk_length < 1) throw std::invalid_argument("generate_corpus: walk_length must be >= 1");
  if (cfg.walks_per_node < 1) {
    throw std::invalid_argument("generate_corpus: walks_per_node must be >= 1");
  }
  const std::size_t n = graph.node_count();
  const int workers = std::max(1, cfg.workers);

  WalkCorpus corpus;
  corpus.walk_length = cfg.walk_length;
  corpus.walks_per_node = cfg.walks_per_node;
  corpus.walks.resize(static_cast<std::size_t>(cfg.walks_per_node) * n);

  for (int pass = 0; pass < cfg.walks_per_node; ++pass) {
    const std::uint64_t pass_seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(pass));
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), NodeId{0});
    Rng order_rng(derive_seed(pass_seed, "order"));
    order_rng.shuffle(order);

    // Every slot draws from its own derived seed, so the corpus is identical
    // for any worker count.
    auto run_slots = [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        Rng walk_rng(derive_seed(pass_seed, static_cast<std::uint64_t>(i)));
        corpus.walks[static_cast<std::size_t>(pass) * n + i] =
            random_walk(graph, order[i], cfg.walk_length, walk_rng);
      }
    };

    if (workers == 1 || n < 2) {
      run_slots(0, n);
    } else {
      std::vector<std::thread> pool;
      const std::size_t chunk = (n + workers - 1) / workers;
      for (int w = 0; w < workers; ++w) {
        const std::size_t begin = std::min(n, static_cast<std::size_t>(w) * chunk);
        const std::size_t end = std::min(n, begin + chunk);
        if (begin < end) pool.emplace_back(run_slots, begin, end);
      }
      for (auto& t : pool) t.join();
    }
  }
  return corpus;
}

void save_corpus(const WalkCorpus& corpus, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write corpus to \"" + path + "\"");
  for (const auto& walk : corpus.walks) {
    for (std::size_t i = 0; i < walk.size(); ++i) {
      if (i) out << ' ';
      out << walk[i];
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("I/O error while writing \"" + path + "\"");
}

WalkCorpus load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus \"" + path + "\"");

  WalkCorpus corpus;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<NodeId> walk;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      if (j > i) {
        long long value = 0;
        const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
        if (ec != std::errc{} || ptr != line.data() + j || value < 0) {
          std::ostringstream msg;
          msg << path << ":" << line_no << ": malformed node id \"" << line.substr(i, j - i)
              << "\"";
          throw std::runtime_error(msg.str());
        }
        walk.push_back(static_cast<NodeId>(value));
      }
      i = j;
    }
    if (!walk.empty()) {
      corpus.walk_length = std::max(corpus.walk_length, static_cast<int>(walk.size()));
      corpus.walks.push_back(std::move(walk));
    }
  }
  return corpus;
}

}  // namespace walkmix
