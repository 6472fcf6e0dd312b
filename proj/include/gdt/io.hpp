#pragma once

#include <string>

#include "json.hpp"

#include "gdt/classic.hpp"
#include "gdt/sampling.hpp"
#include "gdt/solver.hpp"
#include "gdt/tree.hpp"

namespace gdt {

// Tree document schema:
//   { "horizon": int,
//     "root": "node-id",
//     "nodes": { "<node-id>": {
//         "beta": <number> | 0 | "inf" | "-inf",
//         "leaf_value": <number, optional, default 0>,
//         "edges": [ { "label": str, "q": num, "r": num, "child": "<node-id>" }, ... ] } } }
// A numeric beta of 0 selects the expectation operator; infinities must be
// spelled as the strings, since JSON numbers cannot carry them.
DecisionTree build_tree(const nlohmann::json& doc);
nlohmann::json tree_to_json(const DecisionTree& tree);

// Same schema with "kind": "max" | "min" | "chance" in place of "beta".
// Leaves may omit the kind.
TypedTree build_typed_tree(const nlohmann::json& doc);

// Per-node inverse temperatures keyed by node id, values encoded like
// "beta" above. Internal nodes must all be present; leaves may be omitted
// (they keep the tree's temperature).
std::vector<InverseTemperature> betas_from_json(const DecisionTree& tree,
                                                const nlohmann::json& doc);

// Sample model schema: { "support": [...], "m": [...], "q": [...], "u": [...] }.
SampleModel model_from_json(const nlohmann::json& doc);

DecisionTree load_tree(const std::string& path);
TypedTree load_typed_tree(const std::string& path);
SampleModel load_model(const std::string& path);
nlohmann::json load_json(const std::string& path);

nlohmann::json solve_result_to_json(const DecisionTree& tree, const SolveResult& result);
std::string solve_result_to_csv(const DecisionTree& tree, const SolveResult& result);

// 17-significant-digit decimal form (round-trippable) used in CSV output.
std::string format_double(double v);

}  // namespace gdt
