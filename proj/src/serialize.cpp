#include "icl/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace icl {

using json = Json;

namespace {

void check_version(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("expected a JSON object");
    if (!j.contains("version") || !j["version"].is_number_integer() || j["version"].get<int>() != kSchemaVersion) {
        throw std::invalid_argument("unsupported or missing schema version (expected 1)");
    }
}

int require_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
        throw std::invalid_argument(std::string("missing or non-integer field \"") + key + "\"");
    }
    return j[key].get<int>();
}

std::vector<std::vector<int>> require_int_lists(const json& j, const char* key, const char* item) {
    if (!j.contains(key) || !j[key].is_array()) {
        throw std::invalid_argument(std::string("missing or non-array field \"") + key + "\"");
    }
    std::vector<std::vector<int>> out;
    std::size_t i = 0;
    for (const auto& entry : j[key]) {
        ++i;
        if (!entry.is_array()) throw std::invalid_argument(std::string(item) + " " + std::to_string(i) + ": not an array");
        std::vector<int> values;
        for (const auto& v : entry) {
            if (!v.is_number_integer()) {
                throw std::invalid_argument(std::string(item) + " " + std::to_string(i) + ": non-integer entry");
            }
            values.push_back(v.get<int>());
        }
        out.push_back(std::move(values));
    }
    return out;
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

} // namespace

json problem_to_json(const IndexCodingProblem& p) {
    return json{{"version", kSchemaVersion}, {"k", p.k()}, {"antidotes", p.all_offsets()}};
}

IndexCodingProblem problem_from_json(const json& j) {
    check_version(j);
    const int k = require_int(j, "k");
    return IndexCodingProblem::per_receiver(k, require_int_lists(j, "antidotes", "receiver"));
}

json code_to_json(const LinearIndexCode& c) {
    return json{{"version", kSchemaVersion}, {"k", c.k()}, {"length", c.length()}, {"symbols", c.symbols()}};
}

LinearIndexCode code_from_json(const json& j) {
    check_version(j);
    const int k = require_int(j, "k");
    const int length = require_int(j, "length");
    auto symbols = require_int_lists(j, "symbols", "symbol");
    if (length < 0 || static_cast<std::size_t>(length) != symbols.size()) {
        throw std::invalid_argument("\"length\" is " + std::to_string(length) + " but " +
                                    std::to_string(symbols.size()) + " symbols are listed");
    }
    return LinearIndexCode::make(k, std::move(symbols));
}

json descriptor_to_json(const ClassDescriptor& d) {
    json derived = json::object();
    const auto& dp = d.derived();
    if (dp.r) derived["r"] = *dp.r;
    if (dp.q) derived["q"] = *dp.q;
    if (dp.p) derived["p"] = *dp.p;
    if (dp.n) derived["n"] = *dp.n;
    if (dp.s) derived["s"] = *dp.s;
    json out{{"family", std::string(family_name(d.family()))}, {"k", d.k()}, {"d", d.d()}};
    out["lambda"] = d.lambda() ? json(*d.lambda()) : json(nullptr);
    out["m"] = d.m();
    out["derived"] = std::move(derived);
    return out;
}

std::string serialize_problem(const IndexCodingProblem& p) { return problem_to_json(p).dump(); }
std::string serialize_code(const LinearIndexCode& c) { return code_to_json(c).dump(); }

IndexCodingProblem parse_problem(std::string_view text) { return problem_from_json(parse_json(text)); }
LinearIndexCode parse_code(std::string_view text) { return code_from_json(parse_json(text)); }

std::string export_dot(const IndexCodingProblem& p) {
    std::ostringstream os;
    os << "digraph side_information {\n";
    for (int i = 1; i <= p.k(); ++i) os << "  " << i << ";\n";
    for (int i = 1; i <= p.k(); ++i) {
        for (int j : p.antidote_indices(i)) os << "  " << i << " -> " << j << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string format_symbol(const Support& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += '+';
        out += 'x' + std::to_string(s[i]);
    }
    return out;
}

} // namespace icl
