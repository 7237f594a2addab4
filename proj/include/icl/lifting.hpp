#pragma once

#include <string_view>

#include "icl/problem.hpp"

namespace icl {

/// Lifted problem on m*K messages. Receiver k' inherits the offsets of base
/// receiver ((k'-1) mod K)+1, shifted by every multiple of K, and additionally
/// knows x_{k'+iK} for 1 <= i <= m-1.
IndexCodingProblem lift_problem(const IndexCodingProblem& base, int m);

/// Substitutes y_k -> x_k + x_{k+K} + ... + x_{k+(m-1)K} in every symbol.
/// The number of symbols is unchanged.
LinearIndexCode lift_code(const IndexCodingProblem& base, const LinearIndexCode& code, int m);

/// K - a_max: every receiver's antidotes sit inside the consecutive window
/// {k+1, ..., k+a_max}, whose optimal length is K - a_max.
int length_lower_bound(const IndexCodingProblem& p);

enum class Optimality { optimal, unknown };

std::string_view optimality_name(Optimality o) noexcept;

struct OptimalityCertificate {
    Optimality status = Optimality::unknown;
    int bound = 0;
    int achieved = 0;
};

/// `optimal` iff the code meets length_lower_bound. The bound is one-sided, so
/// a longer code is reported `unknown`, never suboptimal.
OptimalityCertificate optimality_certificate(const IndexCodingProblem& p, const LinearIndexCode& c);

} // namespace icl
