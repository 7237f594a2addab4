#include "icl/problem.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace icl {

int wrap_index(long long index, int k) {
    if (k < 1) throw std::invalid_argument("wrap_index: k must be positive");
    const long long r = ((index - 1) % k + k) % k;
    return static_cast<int>(r) + 1;
}

namespace {

OffsetSet normalize_offsets(OffsetSet offsets, int k, std::size_t receiver) {
    std::ranges::sort(offsets);
    offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());
    for (int a : offsets) {
        if (a < 1 || a > k - 1) {
            throw std::invalid_argument("receiver " + std::to_string(receiver) + ": offset " + std::to_string(a) +
                                        " out of range [1, " + std::to_string(k - 1) + "]");
        }
    }
    return offsets;
}

} // namespace

IndexCodingProblem::IndexCodingProblem(int k, std::vector<OffsetSet> offsets) : k_(k), offsets_(std::move(offsets)) {}

IndexCodingProblem IndexCodingProblem::uniform(int k, OffsetSet offsets) {
    if (k < 1) throw std::invalid_argument("K must be at least 1");
    OffsetSet normalized = normalize_offsets(std::move(offsets), k, 1);
    return IndexCodingProblem(k, std::vector<OffsetSet>(static_cast<std::size_t>(k), normalized));
}

IndexCodingProblem IndexCodingProblem::per_receiver(int k, std::vector<OffsetSet> offsets) {
    if (k < 1) throw std::invalid_argument("K must be at least 1");
    if (offsets.size() != static_cast<std::size_t>(k)) {
        throw std::invalid_argument("expected " + std::to_string(k) + " offset sets, got " +
                                    std::to_string(offsets.size()));
    }
    for (std::size_t i = 0; i < offsets.size(); ++i) offsets[i] = normalize_offsets(std::move(offsets[i]), k, i + 1);
    return IndexCodingProblem(k, std::move(offsets));
}

const OffsetSet& IndexCodingProblem::offsets(int receiver) const {
    if (receiver < 1 || receiver > k_) {
        throw std::out_of_range("receiver " + std::to_string(receiver) + " out of range [1, " + std::to_string(k_) +
                                "]");
    }
    return offsets_[static_cast<std::size_t>(receiver - 1)];
}

std::vector<int> IndexCodingProblem::antidote_indices(int receiver) const {
    const OffsetSet& offs = offsets(receiver);
    std::vector<int> out;
    out.reserve(offs.size());
    for (int a : offs) out.push_back(wrap_index(static_cast<long long>(receiver) + a, k_));
    std::ranges::sort(out);
    return out;
}

bool IndexCodingProblem::is_uniform() const noexcept {
    return std::ranges::all_of(offsets_, [&](const OffsetSet& s) { return s == offsets_.front(); });
}

int IndexCodingProblem::max_offset() const noexcept {
    int best = 0;
    for (const auto& s : offsets_) {
        if (!s.empty()) best = std::max(best, s.back());
    }
    return best;
}

std::size_t IndexCodingProblem::side_information_size() const noexcept {
    std::size_t n = 0;
    for (const auto& s : offsets_) n += s.size();
    return n;
}

// ---------------------------------------------------------------- LinearIndexCode

LinearIndexCode LinearIndexCode::make(int k, std::vector<Support> symbols) {
    if (k < 1) throw std::invalid_argument("K must be at least 1");
    for (std::size_t j = 0; j < symbols.size(); ++j) {
        Support& s = symbols[j];
        const std::string where = "symbol " + std::to_string(j + 1);
        if (s.empty()) throw std::invalid_argument(where + ": empty support");
        std::ranges::sort(s);
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
            throw std::invalid_argument(where + ": message index repeated");
        }
        if (s.front() < 1 || s.back() > k) {
            throw std::invalid_argument(where + ": message index out of range [1, " + std::to_string(k) + "]");
        }
    }
    return LinearIndexCode(k, std::move(symbols));
}

Support LinearIndexCode::gf2_sum(std::vector<int> terms) {
    std::ranges::sort(terms);
    Support out;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) % 2 == 1) out.push_back(terms[i]);
        i = j;
    }
    return out;
}

std::vector<Support> LinearIndexCode::sorted_symbols() const {
    auto out = symbols_;
    std::ranges::sort(out);
    return out;
}

bool operator==(const LinearIndexCode& a, const LinearIndexCode& b) {
    return a.k_ == b.k_ && a.sorted_symbols() == b.sorted_symbols();
}

} // namespace icl
