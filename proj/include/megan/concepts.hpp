#pragma once

#include <optional>
#include <string>
#include <vector>

#include "megan/graph.hpp"
#include "megan/model.hpp"

namespace megan {

struct MiningConfig {
  int min_cluster_size = 0;  // 0 = max(10, 0.5% of embedded points)
  int min_samples = 5;
  double activity_threshold = 1.0;  // minimum pooled channel mask sum
};

struct EmbeddingSet {
  int channel = 0;
  Matrix rows;                    // M x P unit rows
  std::vector<std::string> refs;  // graph ids aligned with rows
  std::vector<int> item_indices;  // dataset positions aligned with rows
};

// One forward pass per graph; rows are the channel projections of graphs
// whose pooled channel mask clears the activity threshold.
EmbeddingSet collect_embeddings(const Dataset& dataset, const ModelState& state, int channel,
                                double activity_threshold);

struct ConceptMember {
  std::string id;
  int item_index = -1;
  double delta = 0.0;       // leave-one-out deviation on the concept channel
  double similarity = 0.0;  // cosine to the concept centroid
};

struct PrototypeRecord {
  Graph graph;
  double similarity = 0.0;
  bool feasible = false;
  int epochs_run = 0;
};

struct ConceptCluster {
  int channel = 0;
  int index = 0;
  std::vector<ConceptMember> members;  // sorted by similarity, descending
  std::vector<double> centroid;        // unit vector, length P
  double contribution_mean = 0.0;
  double contribution_std = 0.0;
  int size = 0;
  std::optional<PrototypeRecord> prototype;
};

// One concept per non-noise label; contribution statistics over the members'
// leave-one-out deviations.
std::vector<ConceptCluster> build_concepts(const EmbeddingSet& embeddings,
                                           const std::vector<int>& labels,
                                           const ModelState& state, const Dataset& dataset);

struct QueryAssignment {
  int channel = 0;
  int concept_index = -1;  // -1 when the channel has no concepts
  double similarity = 0.0;
  bool low_similarity = true;
};

// Nearest concept centroid per channel by cosine similarity; ties break
// toward the lower concept index.
std::vector<QueryAssignment> assign_query(const Graph& graph, const ModelState& state,
                                          const std::vector<ConceptCluster>& concepts,
                                          double low_similarity_threshold = 0.5);

struct ConceptCatalog {
  std::string checkpoint_digest;
  std::string dataset_digest;
  int channels = 0;
  int projection_dim = 0;
  std::vector<ConceptCluster> concepts;
};

std::string catalog_to_json(const ConceptCatalog& catalog);
ConceptCatalog catalog_from_json(const std::string& text, const std::string& context);
void save_catalog(const ConceptCatalog& catalog, const std::string& path);
ConceptCatalog load_catalog(const std::string& path);

double cosine(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace megan
