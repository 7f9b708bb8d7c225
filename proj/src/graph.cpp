#include "walkmix/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <utility>

namespace walkmix {

namespace {

bool is_blank_or_comment(std::string_view line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string_view::npos || line[pos] == '#';
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long parse_id(std::string_view token, const std::string& path, std::size_t line_no,
                   const char* what) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    std::ostringstream msg;
    msg << path << ":" << line_no << ": expected integer " << what << ", got \"" << token << "\"";
    throw std::runtime_error(msg.str());
  }
  if (value < 0) {
    std::ostringstream msg;
    msg << path << ":" << line_no << ": negative " << what << " " << value;
    throw std::runtime_error(msg.str());
  }
  return value;
}

}  // namespace

Graph::Graph(std::size_t node_count, std::vector<std::vector<NodeId>> adjacency, bool directed)
    : adjacency_(std::move(adjacency)), directed_(directed) {
  if (adjacency_.size() != node_count) {
    throw std::invalid_argument("graph: adjacency size does not match node_count");
  }
  std::size_t ends = 0;
  std::size_t self_loops = 0;
  for (NodeId u = 0; u < adjacency_.size(); ++u) {
    for (NodeId v : adjacency_[u]) {
      if (v >= node_count) {
        throw std::invalid_argument("graph: neighbor id " + std::to_string(v) +
                                    " out of range [0, " + std::to_string(node_count) + ")");
      }
      ++ends;
      if (v == u) ++self_loops;
    }
  }
  // Undirected edges contribute two list entries, self-loops one.
  edge_count_ = directed_ ? ends : (ends - self_loops) / 2 + self_loops;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  const auto& nbrs = adjacency_[u];
  return std::find(nbrs.begin(), nbrs.end(), v) != nbrs.end();
}

Graph load_edge_list(const std::string& path, bool directed) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list \"" + path + "\"");

  std::vector<std::pair<NodeId, NodeId>> edges;
  long long max_id = -1;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    const auto tokens = split_tokens(line);
    if (tokens.size() != 2) {
      std::ostringstream msg;
      msg << path << ":" << line_no << ": expected \"u v\", got " << tokens.size() << " tokens";
      throw std::runtime_error(msg.str());
    }
    const long long u = parse_id(tokens[0], path, line_no, "node id");
    const long long v = parse_id(tokens[1], path, line_no, "node id");
    max_id = std::max({max_id, u, v});
    NodeId a = static_cast<NodeId>(u);
    NodeId b = static_cast<NodeId>(v);
    if (!directed && a > b) std::swap(a, b);  // normalize so mirrored lines collapse
    edges.emplace_back(a, b);
  }
  if (max_id < 0) throw std::runtime_error("edge list \"" + path + "\" contains no edges");

  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  const std::size_t node_count = static_cast<std::size_t>(max_id) + 1;
  std::vector<std::vector<NodeId>> adjacency(node_count);
  for (const auto& [u, v] : edges) {
    adjacency[u].push_back(v);
    if (!directed && u != v) adjacency[v].push_back(u);
  }
  for (auto& nbrs : adjacency) std::sort(nbrs.begin(), nbrs.end());
  return Graph(node_count, std::move(adjacency), directed);
}

LabelTable::LabelTable(std::vector<std::vector<LabelId>> node_labels, std::size_t label_count)
    : node_labels_(std::move(node_labels)), label_count_(label_count) {
  for (auto& labels : node_labels_) {
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    if (!labels.empty() && labels.back() >= label_count_) {
      throw std::invalid_argument("label table: label id " + std::to_string(labels.back()) +
                                  " out of range [0, " + std::to_string(label_count_) + ")");
    }
  }
}

const std::vector<LabelId>& LabelTable::labels_of(NodeId v) const {
  static const std::vector<LabelId> kEmpty;
  return v < node_labels_.size() ? node_labels_[v] : kEmpty;
}

std::vector<NodeId> LabelTable::labeled_nodes() const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < node_labels_.size(); ++v) {
    if (!node_labels_[v].empty()) out.push_back(v);
  }
  return out;
}

void LabelTable::validate_against(const Graph& graph) const {
  for (NodeId v = 0; v < node_labels_.size(); ++v) {
    if (!node_labels_[v].empty() && v >= graph.node_count()) {
      throw std::runtime_error("labeled node " + std::to_string(v) +
                               " is outside the graph (node_count " +
                               std::to_string(graph.node_count()) + ")");
    }
  }
}

LabelTable load_labels(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open label file \"" + path + "\"");

  std::vector<std::vector<LabelId>> node_labels;
  long long max_label = -1;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    const auto tokens = split_tokens(line);
    if (tokens.size() < 2) {
      std::ostringstream msg;
      msg << path << ":" << line_no << ": expected \"node label [label...]\"";
      throw std::runtime_error(msg.str());
    }
    const long long node = parse_id(tokens[0], path, line_no, "node id");
    if (static_cast<std::size_t>(node) >= node_labels.size()) {
      node_labels.resize(static_cast<std::size_t>(node) + 1);
    }
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      const long long label = parse_id(tokens[i], path, line_no, "label id");
      max_label = std::max(max_label, label);
      node_labels[static_cast<std::size_t>(node)].push_back(static_cast<LabelId>(label));
    }
  }
  if (max_label < 0) throw std::runtime_error("label file \"" + path + "\" contains no labels");
  return LabelTable(std::move(node_labels), static_cast<std::size_t>(max_label) + 1);
}

}  // namespace walkmix
