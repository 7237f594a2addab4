#include "icl/lifting.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace icl {

IndexCodingProblem lift_problem(const IndexCodingProblem& base, int m) {
    if (m < 1) throw std::invalid_argument("lift multiplicity m must be at least 1");
    if (m == 1) return base;
    const int k = base.k();
    if (k > std::numeric_limits<int>::max() / m) throw std::invalid_argument("lifted K overflows");

    std::vector<OffsetSet> offsets;
    offsets.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(k));
    for (int copy = 0; copy < m; ++copy) {
        for (int receiver = 1; receiver <= k; ++receiver) {
            OffsetSet lifted;
            for (int i = 1; i < m; ++i) lifted.push_back(i * k);
            for (int a : base.offsets(receiver)) {
                for (int i = 0; i < m; ++i) lifted.push_back(a + i * k);
            }
            offsets.push_back(std::move(lifted));
        }
    }
    return IndexCodingProblem::per_receiver(m * k, std::move(offsets));
}

LinearIndexCode lift_code(const IndexCodingProblem& base, const LinearIndexCode& code, int m) {
    if (m < 1) throw std::invalid_argument("lift multiplicity m must be at least 1");
    if (code.k() != base.k()) {
        throw std::invalid_argument("code has K=" + std::to_string(code.k()) + " but problem has K=" +
                                    std::to_string(base.k()));
    }
    const int k = base.k();
    std::vector<Support> symbols;
    symbols.reserve(code.length());
    for (const Support& s : code.symbols()) {
        Support lifted;
        lifted.reserve(s.size() * static_cast<std::size_t>(m));
        for (int index : s) {
            for (int i = 0; i < m; ++i) lifted.push_back(index + i * k);
        }
        symbols.push_back(std::move(lifted));
    }
    return LinearIndexCode::make(m * k, std::move(symbols));
}

int length_lower_bound(const IndexCodingProblem& p) { return p.k() - p.max_offset(); }

std::string_view optimality_name(Optimality o) noexcept {
    return o == Optimality::optimal ? "optimal" : "unknown";
}

OptimalityCertificate optimality_certificate(const IndexCodingProblem& p, const LinearIndexCode& c) {
    if (c.k() != p.k()) {
        throw std::invalid_argument("code has K=" + std::to_string(c.k()) + " but problem has K=" +
                                    std::to_string(p.k()));
    }
    OptimalityCertificate cert;
    cert.bound = length_lower_bound(p);
    cert.achieved = static_cast<int>(c.length());
    cert.status = cert.achieved == cert.bound ? Optimality::optimal : Optimality::unknown;
    return cert;
}

} // namespace icl
