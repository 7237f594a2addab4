#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "icl/family.hpp"
#include "icl/problem.hpp"

namespace icl {

/// Insertion-ordered so documents keep the documented key order.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Problem: {"version":1,"k":K,"antidotes":[[offsets of receiver 1],...]}
Json problem_to_json(const IndexCodingProblem& p);
IndexCodingProblem problem_from_json(const Json& j);

// Code: {"version":1,"k":K,"length":l,"symbols":[[support of symbol 1],...]}
Json code_to_json(const LinearIndexCode& c);
LinearIndexCode code_from_json(const Json& j);

Json descriptor_to_json(const ClassDescriptor& d);

std::string serialize_problem(const IndexCodingProblem& p);
std::string serialize_code(const LinearIndexCode& c);

/// Throws std::invalid_argument on malformed JSON or invariant violations.
IndexCodingProblem parse_problem(std::string_view text);
LinearIndexCode parse_code(std::string_view text);

/// Side-information digraph: node per receiver, edge i -> j when receiver i
/// knows x_j. Nodes ascending, edges sorted by (i, j).
std::string export_dot(const IndexCodingProblem& p);

/// Renders a support in sum notation, e.g. "x1+x5+x9".
std::string format_symbol(const Support& s);

} // namespace icl
