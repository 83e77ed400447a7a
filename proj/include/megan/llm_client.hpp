#pragma once

#include <optional>
#include <string>
#include <vector>

namespace megan {

// Chat-completion endpoint contract; any compatible provider or local stub
// works. Disabled by default; the token comes from the environment so it
// never lands in config files.
struct LlmEndpointConfig {
  bool enabled = false;
  std::string base_url;  // e.g. "http://127.0.0.1:8317/v1"
  std::string model = "gpt-4";
  double timeout_s = 30.0;
  int max_concurrent = 2;
  std::string api_key_env = "MEGAN_API_KEY";
};

struct HypothesisRequest {
  std::string prototype_text;
  std::string polarity;  // channel interpretation, e.g. "negative"
  double contribution = 0.0;
  std::string task_description;
  std::string template_id = "proto-hypothesis-v1";
};

// Fully rendered prompt; throws if a template placeholder cannot resolve.
std::string render_prompt(const HypothesisRequest& request);

struct HypothesisOutcome {
  std::optional<std::string> text;  // absent offline or on any failure
  std::string log_line;             // JSON record of the request/response
};

HypothesisOutcome request_hypothesis(const HypothesisRequest& request,
                                     const LlmEndpointConfig& endpoint);

// Issues the requests with at most max_concurrent in flight; results and log
// lines are ordered like the input regardless of completion order.
std::vector<HypothesisOutcome> request_hypotheses(const std::vector<HypothesisRequest>& requests,
                                                  const LlmEndpointConfig& endpoint);

}  // namespace megan
