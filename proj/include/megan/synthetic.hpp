#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "megan/graph.hpp"
#include "megan/rng.hpp"

namespace megan {

// A seedable subgraph pattern with a fixed effect on the label.
struct Motif {
  std::string name;
  Graph structure;
  double contribution = 0.0;  // regression value, or class index in classification
  int channel = 0;            // explanation channel the motif belongs to
};

struct GeneratorConfig {
  int count = 1000;
  int base_node_count = 20;  // BA base size
  int ba_attachment = 1;     // m
  uint64_t seed = 0;
  std::map<std::string, double> motif_probabilities;  // empty = task defaults
  int rb_min_nodes = 10;
  int rb_max_nodes = 40;
};

// Motif templates. BA2Motifs nodes carry the constant 10-dim features; the
// RbMotifs templates carry RGB rows.
Motif house_motif();
Motif cycle_motif();
std::vector<Motif> rb_motifs();

// Preferential-attachment graph: n nodes, each newcomer attaches m edges.
// Node features are the constant BA2Motifs rows, edge features a constant 1.
Graph generate_ba_graph(int n, int m, Rng& rng);

struct SeededMotif {
  Graph graph;
  std::vector<double> node_mask;  // 1 exactly on motif nodes
  std::vector<double> edge_mask;  // 1 exactly on motif-internal directed pairs
};

// Appends the motif to the base with one random attachment edge from a
// uniformly chosen motif node to a uniformly chosen base node.
SeededMotif seed_motif(const Graph& base, const Motif& motif, Rng& rng);

Dataset generate_ba2motifs(const GeneratorConfig& config);
Dataset generate_rbmotifs(const GeneratorConfig& config);

}  // namespace megan
