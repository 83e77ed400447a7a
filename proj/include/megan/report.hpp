#pragma once

#include <optional>
#include <string>
#include <vector>

#include "megan/concepts.hpp"
#include "megan/llm_client.hpp"
#include "megan/train.hpp"

namespace megan {

struct ConceptReportEntry {
  int channel = 0;
  int index = 0;
  int size = 0;
  double contribution_mean = 0.0;
  double contribution_std = 0.0;
  std::optional<PrototypeRecord> prototype;
  std::vector<ConceptMember> nearest_members;
  std::optional<std::string> hypothesis;
};

struct RunMetadata {
  std::string dataset_digest;
  std::string checkpoint_digest;
  std::string config_digest;
  std::string timestamp;  // caller-supplied so rendering stays deterministic
  std::string task_description;
};

struct ConceptReport {
  RunMetadata metadata;
  EvalMetrics metrics;
  std::string prompt_template_id = "proto-hypothesis-v1";
  std::vector<ConceptReportEntry> entries;  // ordered by channel, then size desc
};

// Deterministic compilation: concepts ordered by channel then size
// descending, n_nearest members per concept.
ConceptReport compile_report(const ConceptCatalog& catalog, const Dataset& dataset,
                             const EvalMetrics& metrics, int n_nearest,
                             const RunMetadata& metadata);

// Prototype rendering used in hypothesis prompts: an adjacency list with
// named node colors when features are RGB.
std::string prototype_text(const Graph& graph);

// Fills entry hypotheses via the endpoint (absent entries stay absent when
// offline); returns the request/response log lines.
std::vector<std::string> attach_hypotheses(ConceptReport& report, const LlmEndpointConfig& endpoint);

// Writes report.json (machine-readable, byte-deterministic), report.html,
// and drawings/*.svg under out_dir.
void render_report(const ConceptReport& report, const ConceptCatalog& catalog,
                   const Dataset& dataset, const std::string& out_dir);

std::string report_to_json(const ConceptReport& report);

struct QueryExplanation {
  Matrix y_pred;
  ExplanationMasks masks;
  std::vector<double> deltas;  // leave-one-out per channel
  std::vector<QueryAssignment> assignments;
};

QueryExplanation explain_query(const Graph& graph, const ModelState& state,
                               const std::vector<ConceptCluster>& concepts);

std::string query_explanation_to_json(const QueryExplanation& explanation);

}  // namespace megan
