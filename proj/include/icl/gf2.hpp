#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace icl {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) noexcept { return (bits + kWordBits - 1) / kWordBits; }

/// Bit-packed vector over GF(2). Bit i lives in word i / 64, position i % 64.
class GF2Vector {
public:
    GF2Vector() = default;
    explicit GF2Vector(std::size_t length);

    static GF2Vector unit(std::size_t length, std::size_t index);
    /// Parses a string of '0'/'1' characters, index 0 first.
    static GF2Vector from_string(std::string_view bits);

    std::size_t size() const noexcept { return length_; }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i);
    bool is_zero() const noexcept;
    std::size_t popcount() const noexcept;

    std::span<const Word> words() const noexcept { return words_; }
    std::span<Word> words() noexcept { return words_; }

    GF2Vector& operator^=(const GF2Vector& other);
    friend bool operator==(const GF2Vector&, const GF2Vector&) = default;

    std::string to_string() const;

private:
    std::size_t length_ = 0;
    std::vector<Word> words_;
};

/// Dense row-major bit-packed matrix over GF(2).
class GF2Matrix {
public:
    GF2Matrix() = default;
    GF2Matrix(std::size_t rows, std::size_t cols);

    static GF2Matrix identity(std::size_t n);
    /// Each string is one row of '0'/'1' characters; all rows must have equal length.
    static GF2Matrix from_rows(std::span<const std::string_view> rows);
    static GF2Matrix from_rows(std::initializer_list<std::string_view> rows);
    /// Builds a `length x columns.size()` matrix whose j-th column is columns[j].
    static GF2Matrix from_columns(std::size_t length, std::span<const GF2Vector> columns);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t words_per_row() const noexcept { return stride_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value = true);
    void flip(std::size_t r, std::size_t c);

    std::span<const Word> row_words(std::size_t r) const;
    GF2Vector row(std::size_t r) const;
    GF2Vector column(std::size_t c) const;

    GF2Matrix transposed() const;
    /// Returns [this | v]; v.size() must equal rows().
    GF2Matrix augmented(const GF2Vector& v) const;
    /// Reduced row echelon form. Pivot columns are taken lowest index first and
    /// pivot rows are chosen as the lowest-index eligible row, so the result is
    /// reproducible.
    GF2Matrix row_reduced() const;

    friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> bits_;
};

std::size_t rank(const GF2Matrix& m);

/// True iff v lies in the column space of m. Throws std::invalid_argument when
/// v.size() != m.rows().
bool in_span(const GF2Matrix& m, const GF2Vector& v);

/// Gaussian elimination on a raw row buffer (rows * stride words), destroying it.
/// Hot-path helper for callers that reuse scratch storage.
std::size_t rank_in_place(std::span<Word> buffer, std::size_t rows, std::size_t stride);

/// Incrementally maintained echelon basis of a subspace of GF(2)^n. Each stored
/// vector has a distinct pivot (its lowest set bit) and no other stored vector
/// has that bit set.
class GF2Basis {
public:
    explicit GF2Basis(std::size_t length);

    std::size_t length() const noexcept { return length_; }
    std::size_t dimension() const noexcept { return basis_.size(); }

    /// Adds v to the spanning set. Returns false if v was already in the span.
    bool insert(GF2Vector v);
    bool contains(GF2Vector v) const;

private:
    void reduce(GF2Vector& v) const;

    std::size_t length_;
    std::vector<GF2Vector> basis_;
    std::vector<std::size_t> pivots_;
};

} // namespace icl
