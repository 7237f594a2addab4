#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>
#include <utility>

#include "icl/analysis.hpp"
#include "icl/gf2.hpp"
#include "icl/lifting.hpp"

namespace icl {

std::string_view minrank_status_name(MinrankStatus s) noexcept {
    return s == MinrankStatus::exact ? "exact" : "budget_exceeded";
}

namespace {

// A free entry of the fitting matrix: word offset in the row-major buffer and bit mask.
struct FreeBit {
    std::size_t word;
    Word mask;
};

struct SearchState {
    std::atomic<int> best;
    std::atomic<bool> done{false};
    std::atomic<std::uint64_t> evaluated{0};
    int bound;
};

// Enumerates every assignment of the low `low_bits` free entries, with the
// remaining (high) free entries fixed to the bits of `prefix`. Gray-code order:
// one entry flips per step.
void search_chunk(const std::vector<Word>& identity, std::size_t rows, std::size_t stride,
                  const std::vector<FreeBit>& free, int low_bits, std::uint64_t prefix, SearchState& state) {
    std::vector<Word> matrix = identity;
    for (std::size_t b = static_cast<std::size_t>(low_bits); b < free.size(); ++b) {
        if ((prefix >> (b - static_cast<std::size_t>(low_bits))) & 1U) matrix[free[b].word] ^= free[b].mask;
    }
    std::vector<Word> scratch(matrix.size());
    const std::uint64_t count = std::uint64_t{1} << low_bits;
    std::uint64_t local_evaluated = 0;
    int local_best = state.best.load(std::memory_order_relaxed);

    for (std::uint64_t step = 0; step < count; ++step) {
        if (step != 0) {
            const auto flip = static_cast<std::size_t>(std::countr_zero(step));
            matrix[free[flip].word] ^= free[flip].mask;
        }
        std::copy(matrix.begin(), matrix.end(), scratch.begin());
        const int r = static_cast<int>(rank_in_place(scratch, rows, stride));
        ++local_evaluated;
        if (r < local_best) {
            local_best = r;
            int seen = state.best.load(std::memory_order_relaxed);
            while (r < seen && !state.best.compare_exchange_weak(seen, r, std::memory_order_relaxed)) {
            }
            if (r <= state.bound) state.done.store(true, std::memory_order_relaxed);
        }
        if ((step & 0x3FF) == 0x3FF && state.done.load(std::memory_order_relaxed)) break;
        if (local_best <= state.bound) break;
    }
    state.evaluated.fetch_add(local_evaluated, std::memory_order_relaxed);
}

} // namespace

MinrankResult minrank(const IndexCodingProblem& p, int max_free_bits, unsigned threads) {
    MinrankResult result;
    const std::size_t k = static_cast<std::size_t>(p.k());
    const std::size_t stride = words_for(k);

    std::vector<Word> identity(k * stride, 0);
    std::vector<FreeBit> free;
    for (std::size_t row = 0; row < k; ++row) {
        identity[row * stride + row / kWordBits] |= Word{1} << (row % kWordBits);
        for (int j : p.antidote_indices(static_cast<int>(row) + 1)) {
            const auto col = static_cast<std::size_t>(j - 1);
            free.push_back({row * stride + col / kWordBits, Word{1} << (col % kWordBits)});
        }
    }
    result.free_bits = static_cast<int>(free.size());
    if (max_free_bits < 0 || result.free_bits > max_free_bits || result.free_bits > 62) {
        result.status = MinrankStatus::budget_exceeded;
        return result;
    }

    SearchState state{};
    state.best.store(p.k());
    state.bound = length_lower_bound(p);

    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    // Split on the highest free entries: 2^split chunks, at most one per thread.
    int split = 0;
    while ((1U << (split + 1)) <= threads && split + 1 <= result.free_bits) ++split;
    const int low_bits = result.free_bits - split;
    const std::uint64_t chunks = std::uint64_t{1} << split;

    if (chunks == 1) {
        search_chunk(identity, k, stride, free, low_bits, 0, state);
    } else {
        std::vector<std::jthread> workers;
        workers.reserve(chunks);
        for (std::uint64_t c = 0; c < chunks; ++c) {
            workers.emplace_back([&, c] { search_chunk(identity, k, stride, free, low_bits, c, state); });
        }
    }

    result.status = MinrankStatus::exact;
    result.value = state.best.load();
    result.evaluated = state.evaluated.load();
    result.early_exit = result.value <= state.bound && result.evaluated < (std::uint64_t{1} << result.free_bits);
    result.evaluated_approximate = chunks > 1 && result.early_exit;
    return result;
}

} // namespace icl
