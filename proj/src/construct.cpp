#include "icl/construct.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "icl/lifting.hpp"

namespace icl {

std::string RationalCapacity::to_string() const {
    if (denominator == 1) return std::to_string(numerator);
    return std::to_string(numerator) + "/" + std::to_string(denominator);
}

RationalCapacity capacity(const CapacityQuery& q) {
    if (q.k < 1) throw std::invalid_argument("K must be at least 1");
    if (q.u < 0 || q.d < 0) throw std::invalid_argument("U and D must be non-negative");
    if (q.u + q.d >= q.k) throw std::invalid_argument("requires U+D <= K-1");
    if (q.u + q.d == q.k - 1) return {1, 1};
    const long long lo = std::min(q.u, q.d);
    const long long hi = std::max(q.u, q.d);
    long long num = lo + 1;
    long long den = q.k + lo - hi;
    const long long g = std::gcd(num, den);
    return {num / g, den / g};
}

namespace {

OffsetSet arithmetic_offsets(int step, int last) {
    OffsetSet out;
    for (int a = step; a <= last; a += step) out.push_back(a);
    return out;
}

OffsetSet consecutive_offsets(int last) { return arithmetic_offsets(1, last); }

// Receivers 1..boundary know only x_{k+D}; the rest know x_{k+lambda}, x_{k+2lambda}, ..., x_{k+D}.
IndexCodingProblem two_tier_problem(int k, int d, int lambda, int boundary) {
    std::vector<OffsetSet> offsets;
    offsets.reserve(static_cast<std::size_t>(k));
    for (int receiver = 1; receiver <= k; ++receiver) {
        offsets.push_back(receiver <= boundary ? OffsetSet{d} : arithmetic_offsets(lambda, d));
    }
    return IndexCodingProblem::per_receiver(k, std::move(offsets));
}

IndexCodingProblem base_problem(const ClassDescriptor& desc) {
    const int k = desc.k();
    const int d = desc.d();
    const int lam = desc.lambda().value_or(0);
    const auto& dp = desc.derived();
    switch (desc.family()) {
    case Family::case1: return IndexCodingProblem::uniform(k, {d});
    case Family::case2: return IndexCodingProblem::uniform(k, arithmetic_offsets(*dp.r, d));
    case Family::case6:
    case Family::case10: return IndexCodingProblem::uniform(k, consecutive_offsets(d));
    case Family::case8: {
        // Offsets alternate steps of lambda and K-D: lambda, lambda+r, 2lambda+r, 2lambda+2r, ..., D.
        const int r = *dp.r;
        const int p = *dp.p;
        OffsetSet offs;
        for (int j = 1; j <= p; ++j) {
            offs.push_back(j * lam + (j - 1) * r);
            if (j < p) offs.push_back(j * lam + j * r);
        }
        return IndexCodingProblem::uniform(k, std::move(offs));
    }
    case Family::case_b: return IndexCodingProblem::uniform(k, {*dp.r, k / 2, d});
    case Family::class_i: return IndexCodingProblem::uniform(k, arithmetic_offsets(*dp.r, d));
    case Family::class_ii: return two_tier_problem(k, d, lam, k - d - lam);
    case Family::class_iii: return IndexCodingProblem::uniform(k, arithmetic_offsets(lam, d));
    case Family::class_iv: return two_tier_problem(k, d, lam, k - 2 * d + lam);
    }
    throw std::logic_error("unhandled family");
}

// Collects absolute (unwrapped) indices for one symbol, then wraps and reduces mod 2.
class SymbolBuilder {
public:
    explicit SymbolBuilder(int k) : k_(k) {}

    SymbolBuilder& add(long long index) {
        terms_.push_back(wrap_index(index, k_));
        return *this;
    }

    Support finish() { return LinearIndexCode::gf2_sum(std::move(terms_)); }

private:
    int k_;
    std::vector<int> terms_;
};

// x_{i+(j-1)step} + x_{i+j*step} for i in [1, step], j in [1, last_j].
void append_pair_chains(std::vector<Support>& out, int k, int step, int last_j) {
    for (int i = 1; i <= step; ++i) {
        for (int j = 1; j <= last_j; ++j) {
            out.push_back(SymbolBuilder(k).add(i + (j - 1) * step).add(i + j * step).finish());
        }
    }
}

std::vector<Support> base_code(const ClassDescriptor& desc) {
    const int k = desc.k();
    const int d = desc.d();
    const int lam = desc.lambda().value_or(0);
    const auto& dp = desc.derived();
    std::vector<Support> out;

    switch (desc.family()) {
    case Family::case1:
        append_pair_chains(out, k, d, *dp.n - 1);
        break;

    case Family::case_b: {
        const int r = *dp.r;
        const int half = k / 2;
        for (int i = 1; i <= r; ++i) {
            for (int j = 0; j <= *dp.n - 2; ++j) {
                out.push_back(SymbolBuilder(k)
                                  .add(i + j * r)
                                  .add(half + i + j * r)
                                  .add(i + (j + 1) * r)
                                  .add(half + i + (j + 1) * r)
                                  .finish());
            }
        }
        break;
    }

    case Family::case2: {
        const int r = *dp.r;
        for (int i = 1; i <= r; ++i) {
            SymbolBuilder b(k);
            for (int t = 0; t < *dp.n; ++t) b.add(i + t * r);
            out.push_back(b.finish());
        }
        break;
    }

    case Family::case6: {
        const int r = *dp.r;
        const int q = *dp.q;
        for (int i = 1; i <= r; ++i) {
            SymbolBuilder b(k);
            for (int t = 0; t < q; ++t) b.add(i + t * r);
            b.add(q * r + 1 + (i - 1) % lam);
            out.push_back(b.finish());
        }
        break;
    }

    case Family::case10: {
        const int r = *dp.r;
        const int p = *dp.p;
        const int q = *dp.q;
        const int s = *dp.s;
        for (int i = 1; i <= lam; ++i) {
            SymbolBuilder b(k);
            for (int t = 0; t < q; ++t) b.add(i + t * r);
            for (int t = 1; t <= s - 2; ++t) b.add(i + (q - 1) * r + t * lam);
            out.push_back(b.finish());
        }
        for (int i = lam + 1; i <= p; ++i) {
            SymbolBuilder b(k);
            for (int t = 0; t <= q - 2; ++t) b.add(i + t * r);
            b.add(i + (q - 1) * r - lam);
            out.push_back(b.finish());
        }
        for (int i = p + 1; i <= r; ++i) {
            SymbolBuilder b(k);
            for (int t = 0; t <= q - 2; ++t) b.add(i + t * r);
            for (int t = 1; t <= s - 1; ++t) b.add(i + (q - 2) * r + t * lam);
            out.push_back(b.finish());
        }
        break;
    }

    case Family::class_i: {
        // Sliding windows of p+1 terms with stride r.
        const int r = *dp.r;
        const int p = *dp.p;
        const int n = *dp.n;
        for (int i = 1; i <= r; ++i) {
            for (int j = 0; j <= n - p - 1; ++j) {
                SymbolBuilder b(k);
                for (int t = j; t <= j + p; ++t) b.add(i + t * r);
                out.push_back(b.finish());
            }
        }
        break;
    }

    case Family::class_ii: {
        append_pair_chains(out, k, d, *dp.n - 1);
        // One symbol per residue: x_{K-lambda+r} + x_{K-lambda+r-lambda} + ... + x_{K-lambda+r-(D/lambda)lambda}.
        for (int r = 1; r <= lam; ++r) {
            SymbolBuilder b(k);
            for (int t = 0; t <= *dp.s; ++t) b.add(k - lam + r - t * lam);
            out.push_back(b.finish());
        }
        break;
    }

    case Family::class_iii: {
        const int p = *dp.p;
        const int last_j = (k - d - lam) / lam;
        for (int i = 1; i <= lam; ++i) {
            for (int j = 0; j <= last_j; ++j) {
                SymbolBuilder b(k);
                for (int t = j; t <= j + p; ++t) b.add(i + t * lam);
                out.push_back(b.finish());
            }
        }
        break;
    }

    case Family::class_iv: {
        append_pair_chains(out, k, d, *dp.n - 2);
        for (int ip = 0; ip < *dp.p; ++ip) {
            out.push_back(SymbolBuilder(k)
                              .add(k - 2 * d + 1 + lam + ip)
                              .add(k - d + 1 + ip)
                              .add(k - lam + 1 + ip % lam)
                              .finish());
        }
        break;
    }

    case Family::case8:
        throw std::invalid_argument("case8: no printed code; use construct_problem_only");
    }
    return out;
}

} // namespace

ProblemAndCode construct(const ClassDescriptor& desc) {
    if (!family_has_code(desc.family())) {
        throw std::invalid_argument("case8: no printed code; use construct_problem_only");
    }
    IndexCodingProblem problem = base_problem(desc);
    LinearIndexCode code = LinearIndexCode::make(desc.k(), base_code(desc));
    if (desc.m() == 1) return {std::move(problem), std::move(code)};
    LinearIndexCode lifted = lift_code(problem, code, desc.m());
    return {lift_problem(problem, desc.m()), std::move(lifted)};
}

IndexCodingProblem construct_problem_only(const ClassDescriptor& desc) {
    return lift_problem(base_problem(desc), desc.m());
}

} // namespace icl
