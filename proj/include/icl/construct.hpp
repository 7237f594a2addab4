#pragma once

#include <string>

#include "icl/family.hpp"
#include "icl/problem.hpp"

namespace icl {

/// Symmetric problem with U "up" and D "down" consecutive antidotes per receiver.
struct CapacityQuery {
    int k = 0;
    int u = 0;
    int d = 0;
};

/// Per-message capacity as a reduced fraction.
struct RationalCapacity {
    long long numerator = 1;
    long long denominator = 1;

    friend bool operator==(const RationalCapacity&, const RationalCapacity&) = default;
    std::string to_string() const;
};

/// 1 if U+D == K-1, else (min(U,D)+1) / (K+min(U,D)-max(U,D)).
/// Throws std::invalid_argument when U or D is negative or U+D >= K.
RationalCapacity capacity(const CapacityQuery& q);

struct ProblemAndCode {
    IndexCodingProblem problem;
    LinearIndexCode code;
};

/// The family's antidote pattern and its explicit code, lifted by desc.m().
/// Throws std::invalid_argument for case8, which has no explicit code.
ProblemAndCode construct(const ClassDescriptor& desc);

/// The family's antidote pattern only (lifted by desc.m()). Works for every family.
IndexCodingProblem construct_problem_only(const ClassDescriptor& desc);

} // namespace icl
