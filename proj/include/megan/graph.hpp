#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "megan/matrix.hpp"

namespace megan {

// Undirected graph stored as symmetric directed pairs: every undirected edge
// (i,j) appears as (i,j) and (j,i) with identical feature rows. edges.size()
// is the directed count E.
struct Graph {
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;  // (src, dst)
  Matrix node_features;                    // V x N0
  Matrix edge_features;                    // E x M0

  int directed_edge_count() const { return static_cast<int>(edges.size()); }

  std::vector<int> sources() const {
    std::vector<int> s(edges.size());
    for (size_t e = 0; e < edges.size(); ++e) s[e] = edges[e].first;
    return s;
  }
  std::vector<int> targets() const {
    std::vector<int> t(edges.size());
    for (size_t e = 0; e < edges.size(); ++e) t[e] = edges[e].second;
    return t;
  }
};

bool operator==(const Graph& a, const Graph& b);

// Incremental construction of a symmetric graph: undirected edges are added
// once and materialized as interleaved directed pairs (i,j),(j,i).
class GraphBuilder {
 public:
  GraphBuilder(int feature_dim, int edge_feature_dim)
      : feature_dim_(feature_dim), edge_feature_dim_(edge_feature_dim) {}

  int add_node(const std::vector<double>& features);
  void add_edge(int i, int j, const std::vector<double>& features);
  bool has_edge(int i, int j) const;
  int node_count() const { return static_cast<int>(node_rows_.size()); }
  int undirected_edge_count() const { return static_cast<int>(und_edges_.size()); }

  Graph build() const;

 private:
  int feature_dim_;
  int edge_feature_dim_;
  std::vector<std::vector<double>> node_rows_;
  std::vector<std::pair<int, int>> und_edges_;
  std::vector<std::vector<double>> und_edge_rows_;
};

// Per-channel continuous node and edge importances in [0,1].
struct ExplanationMasks {
  Matrix node_mask;  // V x K
  Matrix edge_mask;  // E x K (directed rows, symmetric pairs share values)

  int channels() const { return node_mask.cols; }
};

bool operator==(const ExplanationMasks& a, const ExplanationMasks& b);

enum class TaskKind { regression, classification };

std::string task_kind_name(TaskKind k);
TaskKind task_kind_from_name(const std::string& s);

struct LabeledGraph {
  Graph graph;
  std::vector<double> target;  // length C
  std::optional<ExplanationMasks> ground_truth_masks;
  std::string id;
};

bool operator==(const LabeledGraph& a, const LabeledGraph& b);

enum class Split { train, test };

struct Dataset {
  std::vector<LabeledGraph> items;
  TaskKind task_kind = TaskKind::regression;
  std::map<std::string, Split> split;

  int target_dim() const { return items.empty() ? 0 : static_cast<int>(items[0].target.size()); }
  std::vector<int> split_indices(Split s) const;
};

bool operator==(const Dataset& a, const Dataset& b);

// Empty result means every Graph invariant holds; each entry names the
// violated invariant and the offending index.
std::vector<std::string> validate(const Graph& g);

// Induced subgraph over nodes with mask >= threshold; indices compacted,
// feature rows carried over. May return the empty graph.
Graph masked_subgraph(const Graph& g, const std::vector<double>& node_mask, double threshold);

// Maximal connected node sets, ordered by smallest member index; each set is
// sorted ascending.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Degree over directed pairs in which the node appears (either endpoint).
std::vector<int> incident_degrees(const Graph& g);

// Row indices of the first occurrence of each undirected edge, in storage
// order: the canonical one-row-per-edge view of a symmetric graph.
std::vector<int> undirected_edge_rows(const Graph& g);

}  // namespace megan
