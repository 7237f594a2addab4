#pragma once

#include <cstddef>
#include <vector>

namespace icl {

/// Sorted, duplicate-free list of cyclic offsets in [1, K-1].
using OffsetSet = std::vector<int>;
/// Sorted, duplicate-free list of absolute 1-based message indices.
using Support = std::vector<int>;

/// Cyclic 1-based index: ((index - 1) mod k) + 1, valid for any integer index.
int wrap_index(long long index, int k);

/// A multiple-unicast index coding problem. Receiver k (1-based) wants x_k and
/// knows x_{k+a} (cyclically) for each offset a in its offset set.
class IndexCodingProblem {
public:
    /// Every receiver gets the same offsets.
    static IndexCodingProblem uniform(int k, OffsetSet offsets);
    /// One offset set per receiver, receiver 1 first.
    static IndexCodingProblem per_receiver(int k, std::vector<OffsetSet> offsets);

    int k() const noexcept { return k_; }
    const OffsetSet& offsets(int receiver) const;
    const std::vector<OffsetSet>& all_offsets() const noexcept { return offsets_; }

    /// Absolute indices of the messages receiver `receiver` knows, ascending.
    std::vector<int> antidote_indices(int receiver) const;

    bool is_uniform() const noexcept;
    /// Largest offset over all receivers; 0 when nobody has side information.
    int max_offset() const noexcept;
    /// Total number of known (receiver, message) pairs.
    std::size_t side_information_size() const noexcept;

    friend bool operator==(const IndexCodingProblem&, const IndexCodingProblem&) = default;

private:
    IndexCodingProblem(int k, std::vector<OffsetSet> offsets);

    int k_ = 0;
    std::vector<OffsetSet> offsets_;
};

/// Scalar linear index code over GF(2): each symbol is the sum of the messages
/// in its support.
class LinearIndexCode {
public:
    /// Validates and normalizes supports (sorted ascending). A message listed
    /// twice in one symbol is rejected.
    static LinearIndexCode make(int k, std::vector<Support> symbols);
    /// Builds a symbol from raw terms, cancelling indices that occur an even
    /// number of times (GF(2) addition). Indices must already be in [1, k].
    static Support gf2_sum(std::vector<int> terms);

    int k() const noexcept { return k_; }
    std::size_t length() const noexcept { return symbols_.size(); }
    const std::vector<Support>& symbols() const noexcept { return symbols_; }

    /// Symbols sorted lexicographically; the canonical form for comparisons.
    std::vector<Support> sorted_symbols() const;

    /// Equality as multisets of supports.
    friend bool operator==(const LinearIndexCode& a, const LinearIndexCode& b);

private:
    LinearIndexCode(int k, std::vector<Support> symbols) : k_(k), symbols_(std::move(symbols)) {}

    int k_ = 0;
    std::vector<Support> symbols_;
};

} // namespace icl
