#pragma once

#include <cstdint>

#include "megan/concepts.hpp"
#include "megan/rng.hpp"

namespace megan {

struct GaConfig {
  int epochs = 50;
  int population_cap = 100;
  double node_deletion_prob = 0.5;
  double edge_deletion_prob = 0.3;
  int tournament_size = 3;
  double elite_fraction = 0.1;
  double epsilon = 0.9;  // cosine similarity floor for feasibility
  // Mutated candidates are embedded through the model with their own masks by
  // default; all_ones_override pools every node instead.
  bool all_ones_override = false;
  uint64_t seed = 0;

  void validate() const;
};

struct Individual {
  Graph graph;
  std::vector<double> embedding;  // unit vector, length P
  double similarity = 0.0;        // cosine to the concept centroid
  double fitness = 0.0;
};

constexpr double kInfeasiblePenalty = 1e6;

// node count when the similarity constraint holds, node count + penalty
// otherwise; lower is better
double ga_fitness(int node_count, double similarity, double epsilon);

std::vector<double> embed_candidate(const Graph& graph, int channel, const ModelState& state,
                                    bool all_ones_override);

// Population = the cluster members' full graphs, nearest-to-centroid first,
// capped at population_cap.
std::vector<Individual> init_population(const ConceptCluster& cluster, const Dataset& dataset,
                                        const ModelState& state, const GaConfig& config);

// One random node deletion and/or one random undirected edge deletion; a
// disconnected result keeps only its largest component; a mutation that would
// empty the graph returns the parent unchanged.
Individual mutate(const Individual& parent, Rng& rng, const GaConfig& config,
                  const ModelState& state, int channel, const std::vector<double>& centroid);

PrototypeRecord evolve(const ConceptCluster& cluster, const ModelState& state,
                       const Dataset& dataset, const GaConfig& config);

}  // namespace megan
