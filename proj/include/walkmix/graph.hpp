#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace walkmix {

using NodeId = std::uint32_t;
using LabelId = std::uint32_t;

/// Immutable adjacency structure over dense node ids [0, node_count).
/// Undirected graphs store each edge in both endpoint lists; a self-loop
/// appears exactly once in its node's list.
class Graph {
 public:
  Graph(std::size_t node_count, std::vector<std::vector<NodeId>> adjacency, bool directed);

  std::size_t node_count() const { return adjacency_.size(); }
  bool directed() const { return directed_; }
  const std::vector<NodeId>& neighbors(NodeId v) const { return adjacency_[v]; }
  std::size_t degree(NodeId v) const { return adjacency_[v].size(); }

  // Undirected pairs for undirected graphs, arcs for directed ones.
  std::size_t edge_count() const { return edge_count_; }

  // Linear scan over u's list; meant for validation, not hot paths.
  bool has_edge(NodeId u, NodeId v) const;

 private:
  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t edge_count_ = 0;
  bool directed_ = false;
};

/// Per-node label sets. Nodes may carry zero labels; those are excluded from
/// classification splits.
class LabelTable {
 public:
  LabelTable() = default;
  LabelTable(std::vector<std::vector<LabelId>> node_labels, std::size_t label_count);

  std::size_t label_count() const { return label_count_; }
  std::size_t node_count() const { return node_labels_.size(); }

  // Sorted, duplicate-free. Nodes beyond the table report no labels.
  const std::vector<LabelId>& labels_of(NodeId v) const;

  std::vector<NodeId> labeled_nodes() const;

  // Hard error if any labeled node id falls outside the graph.
  void validate_against(const Graph& graph) const;

 private:
  std::vector<std::vector<LabelId>> node_labels_;
  std::size_t label_count_ = 0;
};

/// Parses a text edge list, one "u v" pair per line, "#" comments allowed.
/// Node ids must be nonnegative integers; node_count = max id + 1. Duplicate
/// edge lines (including the mirrored form of an undirected edge) collapse to
/// a single edge. Parse errors report the offending line number.
Graph load_edge_list(const std::string& path, bool directed = false);

/// Parses a text label file, "node label [label...]" per line, "#" comments
/// allowed. Repeated assignments union into one set per node.
LabelTable load_labels(const std::string& path);

}  // namespace walkmix
