#include <algorithm>
#include <stdexcept>
#include <string>

#include "icl/analysis.hpp"
#include "icl/gf2.hpp"

namespace icl {

std::vector<int> VerificationReport::failing_receivers() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < decodable.size(); ++i) {
        if (!decodable[i]) out.push_back(static_cast<int>(i) + 1);
    }
    return out;
}

VerificationReport verify(const IndexCodingProblem& p, const LinearIndexCode& c) {
    if (p.k() != c.k()) {
        throw std::invalid_argument("code has K=" + std::to_string(c.k()) + " but problem has K=" +
                                    std::to_string(p.k()));
    }
    const auto k = static_cast<std::size_t>(p.k());

    std::vector<GF2Vector> symbols;
    symbols.reserve(c.length());
    for (const Support& s : c.symbols()) {
        GF2Vector v(k);
        for (int index : s) v.set(static_cast<std::size_t>(index - 1));
        symbols.push_back(std::move(v));
    }

    // e_k is in span(symbols + antidote units) iff, after zeroing the antidote
    // coordinates, e_k is in the span of the projected symbols. Same rank test
    // as augmenting [symbols | antidote units | e_k], on l instead of l+|A| columns.
    VerificationReport report;
    report.decodable.assign(k, false);
    for (int receiver = 1; receiver <= p.k(); ++receiver) {
        GF2Vector keep(k);
        for (std::size_t i = 0; i < k; ++i) keep.set(i);
        for (int j : p.antidote_indices(receiver)) keep.set(static_cast<std::size_t>(j - 1), false);

        GF2Basis basis(k);
        for (const auto& s : symbols) {
            GF2Vector projected = s;
            auto dst = projected.words();
            auto mask = keep.words();
            for (std::size_t w = 0; w < dst.size(); ++w) dst[w] &= mask[w];
            basis.insert(std::move(projected));
        }
        report.decodable[static_cast<std::size_t>(receiver - 1)] =
            basis.contains(GF2Vector::unit(k, static_cast<std::size_t>(receiver - 1)));
    }
    report.overall = std::all_of(report.decodable.begin(), report.decodable.end(), [](bool b) { return b; });
    return report;
}

} // namespace icl
