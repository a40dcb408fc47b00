#pragma once

#include "lcr/graph.hpp"
#include "lcr/kernel_mw.hpp"
#include "lcr/kernel_vc.hpp"
#include "lcr/solver.hpp"

#include <json.hpp>

#include <istream>
#include <string>

namespace lcr {

/// Malformed JSON or a field that does not fit the schema; what() names the field.
class ParseError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// Color set of size k whose first colors are `used` in sorted order; the remaining
/// slots get placeholder names that never collide with used ones.
ColorSet canonical_color_set(std::vector<std::string> used, int k);

Instance instance_from_json(const nlohmann::json& doc);
Instance read_instance(std::istream& in);
Instance parse_instance(const std::string& text);
nlohmann::json instance_to_json(const Instance& instance);

/// Steps {"vertex", "to"} applied from f_ini. Accepts {"steps": [...]} or a solve report's
/// {"sequence": [...]}. Unknown vertices or colors raise ParseError.
ReconfigurationSequence sequence_from_json(const Instance& instance, const nlohmann::json& doc);
nlohmann::json sequence_steps_to_json(const Instance& instance, const ReconfigurationSequence& sequence);

nlohmann::json replay_log_to_json(const Graph& graph, const ReplayLog& log);
nlohmann::json merge_log_to_json(const Graph& graph, const MergeLog& log);

nlohmann::json report_to_json(const Instance& instance, const SolveReport& report);

}  // namespace lcr
