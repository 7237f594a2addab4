#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "icl/analysis.hpp"
#include "icl/construct.hpp"
#include "icl/lifting.hpp"

namespace icl {

std::vector<ClassDescriptor> classify(const IndexCodingProblem& p) {
    std::vector<ClassDescriptor> found;
    const int total_k = p.k();
    const int top = p.max_offset();
    if (top == 0) return found;

    for (int m = 1; m <= total_k; ++m) {
        if (total_k % m != 0) continue;
        const int k = total_k / m;
        if (k < 2) continue;
        // Every family's largest offset is D, and lifting adds (m-1)K to it.
        const int d = top - (m - 1) * k;
        if (d < 1 || d > k - 1) continue;

        for (Family f : kAllFamilies) {
            std::vector<std::optional<int>> lambdas;
            if (family_uses_lambda(f)) {
                for (int lam = 1; lam <= k - 1; ++lam) lambdas.emplace_back(lam);
            } else {
                lambdas.emplace_back(std::nullopt);
            }
            for (const auto& lam : lambdas) {
                if (ClassDescriptor::violation(f, k, d, lam, m)) continue;
                auto desc = ClassDescriptor::make(f, k, d, lam, m);
                if (construct_problem_only(desc) == p) found.push_back(desc);
            }
        }
    }

    auto key = [](const ClassDescriptor& c) {
        return std::make_tuple(static_cast<int>(c.family()), c.d(), c.lambda().value_or(0), c.m());
    };
    std::ranges::sort(found, [&](const auto& a, const auto& b) { return key(a) < key(b); });
    return found;
}

ClosureResult check_closure(const ClassDescriptor& desc, int m) {
    if (desc.m() != 1) throw std::invalid_argument("check_closure expects an unlifted descriptor (m=1)");
    if (m < 2) throw std::invalid_argument("closure multiplicity m must be at least 2");

    const int k2 = m * desc.k();
    const int d2 = (m - 1) * desc.k() + desc.d();
    std::optional<ClassDescriptor> out;
    switch (desc.family()) {
    case Family::case2: out = ClassDescriptor::make(Family::case2, k2, d2); break;
    case Family::case8: out = ClassDescriptor::make(Family::case8, k2, d2, desc.lambda()); break;
    case Family::case1:
        if (m != 2) throw std::invalid_argument("case1: closure is only stated for m=2 (to case-b)");
        out = ClassDescriptor::make(Family::case_b, k2, d2);
        break;
    default:
        throw std::invalid_argument(std::string(family_name(desc.family())) + ": no closure theorem");
    }

    if (construct_problem_only(*out) != lift_problem(construct_problem_only(desc), m)) {
        throw std::logic_error("closure pattern mismatch for " + desc.to_string() + " lifted by m=" +
                               std::to_string(m));
    }
    return ClosureResult{desc, m, *out};
}

} // namespace icl
