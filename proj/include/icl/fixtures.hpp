#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "icl/family.hpp"
#include "icl/lifting.hpp"
#include "icl/problem.hpp"

namespace icl {

/// A worked example at one lift multiplicity: the expected problem
/// and code, both in the problem/code JSON schemas.
struct DemoFixture {
    int example;
    int m;
    std::string_view problem_json;
    std::string_view code_json;
};

std::span<const DemoFixture> demo_fixtures();

/// Base (m=1) family instance behind worked example 1..7.
ClassDescriptor example_descriptor(int example);
std::vector<int> supported_multiplicities(int example);

struct DemoReport {
    int example = 0;
    int m = 0;
    bool problem_match = false;
    bool code_match = false;
    bool decodable = false;
    OptimalityCertificate certificate;
    std::size_t expected_length = 0;
    std::size_t actual_length = 0;
    /// Expected symbols the construction did not produce, and vice versa.
    std::vector<Support> missing;
    std::vector<Support> unexpected;

    bool passed() const noexcept {
        return problem_match && code_match && decodable && certificate.status == Optimality::optimal;
    }
};

/// Constructs example `example`, lifts it by m and compares with the fixture.
/// Throws std::invalid_argument for an unsupported (example, m) pair.
DemoReport demo(int example, int m);

} // namespace icl
