#pragma once

#include <array>
#include <string>
#include <vector>

namespace moaa {

/// The eight evaluation criteria the judge may be steered with.
struct CriterionInfo {
  const char* name;
  const char* description;
};

const std::array<CriterionInfo, 8>& criteria_catalog();

/// Case-insensitive lookup (surrounding punctuation already stripped); -1 if unknown.
int criterion_index(const std::string& name);

enum class ContextPlacement { before_prompt, after_prompt };

const char* context_placement_name(ContextPlacement placement);
ContextPlacement context_placement_from_name(const std::string& name);

namespace templates {

/// Aggregate-and-Synthesize prompt: header + "Responses from models:" block +
/// the instruction, with optional context placed per `placement`.
/// Throws empty_inputs when prior_outputs is empty.
std::string aggregate_prompt(const std::vector<std::string>& prior_outputs,
                             const std::string& instruction, const std::string& context,
                             ContextPlacement placement);

/// First-layer prompt: no template, just optional context and the instruction.
std::string first_layer_prompt(const std::string& instruction, const std::string& context,
                               ContextPlacement placement);

/// Criteria slot rendering shared by the proposer and aggregator prompts:
/// numbered lines "1. Name: Description".
std::string render_criteria_slot(const std::vector<std::string>& criteria_names);

std::string criteria_filter_prompt(const std::string& question, const std::string& answer_a,
                                   const std::string& answer_b);

std::string judge_proposer_prompt(const std::string& criteria_slot);

std::string judge_aggregator_prompt(const std::string& criteria_slot, const std::string& question,
                                    const std::string& answer_a, const std::string& answer_b,
                                    const std::vector<std::string>& proposer_evaluations);

// Markers used by request classification (mock endpoints, tests).
extern const char* const kAggregateMarker;     // "Responses from models:"
extern const char* const kCriteriaMarker;      // output-format instruction of the filter prompt
extern const char* const kProposerMarker;      // opening of the proposer prompt
extern const char* const kAggregatorMarker;    // "Final Meta-Evaluation:"

}  // namespace templates

}  // namespace moaa
