#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "icl/family.hpp"
#include "icl/problem.hpp"

namespace icl {

struct VerificationReport {
    /// decodable[k-1] is receiver k's flag.
    std::vector<bool> decodable;
    bool overall = false;

    std::vector<int> failing_receivers() const;
};

/// Receiver k decodes iff e_k lies in the span of the symbol vectors together
/// with the unit vectors of its antidotes. Throws on K mismatch.
VerificationReport verify(const IndexCodingProblem& p, const LinearIndexCode& c);

inline constexpr int kDefaultMinrankBudget = 24;

enum class MinrankStatus { exact, budget_exceeded };

std::string_view minrank_status_name(MinrankStatus s) noexcept;

struct MinrankResult {
    MinrankStatus status = MinrankStatus::budget_exceeded;
    int value = 0;               ///< valid when status == exact
    int free_bits = 0;           ///< number of off-diagonal entries the fitting matrices may set
    std::uint64_t evaluated = 0; ///< fitting matrices whose rank was computed
    bool early_exit = false;     ///< stopped on reaching the length lower bound
    bool evaluated_approximate = false; ///< parallel run with early exit
};

/// Exhaustive minimum rank over all GF(2) fitting matrices of the problem's
/// side-information graph. Gives up (budget_exceeded) when the number of free
/// entries exceeds max_free_bits. `threads` == 0 picks the hardware concurrency.
MinrankResult minrank(const IndexCodingProblem& p, int max_free_bits = kDefaultMinrankBudget, unsigned threads = 1);

/// Every family descriptor (any m dividing K) whose generated antidote pattern
/// equals p's exactly, ordered by (family, D, lambda, m).
std::vector<ClassDescriptor> classify(const IndexCodingProblem& p);

struct ClosureResult {
    ClassDescriptor input;
    int m;
    ClassDescriptor output;
};

/// Family of the m-fold lift for families closed under lifting: case2 and
/// case8 map to themselves with K' = mK, D' = (m-1)K + D; case1 with m = 2
/// maps to case-b(2K, K+D). The output pattern is checked against
/// lift_problem before returning. Throws std::invalid_argument otherwise.
ClosureResult check_closure(const ClassDescriptor& desc, int m);

} // namespace icl
