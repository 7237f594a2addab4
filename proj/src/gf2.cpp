#include "icl/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace icl {

namespace {

constexpr Word bit_mask(std::size_t i) noexcept { return Word{1} << (i % kWordBits); }

void check_index(std::size_t i, std::size_t n, const char* what) {
    if (i >= n) throw std::out_of_range(std::string(what) + " index out of range");
}

// Lowest set bit of a packed bit sequence, or `npos` if all zero.
std::size_t lowest_bit(std::span<const Word> words) noexcept {
    for (std::size_t w = 0; w < words.size(); ++w) {
        if (words[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words[w]));
    }
    return static_cast<std::size_t>(-1);
}

} // namespace

// ---------------------------------------------------------------- GF2Vector

GF2Vector::GF2Vector(std::size_t length) : length_(length), words_(words_for(length), 0) {}

GF2Vector GF2Vector::unit(std::size_t length, std::size_t index) {
    GF2Vector v(length);
    v.set(index);
    return v;
}

GF2Vector GF2Vector::from_string(std::string_view bits) {
    GF2Vector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') v.set(i);
        else if (bits[i] != '0') throw std::invalid_argument("bit string may only contain '0' and '1'");
    }
    return v;
}

bool GF2Vector::get(std::size_t i) const {
    check_index(i, length_, "vector");
    return (words_[i / kWordBits] & bit_mask(i)) != 0;
}

void GF2Vector::set(std::size_t i, bool value) {
    check_index(i, length_, "vector");
    if (value) words_[i / kWordBits] |= bit_mask(i);
    else words_[i / kWordBits] &= ~bit_mask(i);
}

void GF2Vector::flip(std::size_t i) {
    check_index(i, length_, "vector");
    words_[i / kWordBits] ^= bit_mask(i);
}

bool GF2Vector::is_zero() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::size_t GF2Vector::popcount() const noexcept {
    std::size_t n = 0;
    for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

GF2Vector& GF2Vector::operator^=(const GF2Vector& other) {
    if (other.length_ != length_) throw std::invalid_argument("vector length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
}

std::string GF2Vector::to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

// ---------------------------------------------------------------- GF2Matrix

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), bits_(rows * words_for(cols), 0) {}

GF2Matrix GF2Matrix::identity(std::size_t n) {
    GF2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

GF2Matrix GF2Matrix::from_rows(std::span<const std::string_view> rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    GF2Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("ragged row strings");
        for (std::size_t c = 0; c < cols; ++c) {
            if (rows[r][c] == '1') m.set(r, c);
            else if (rows[r][c] != '0') throw std::invalid_argument("bit string may only contain '0' and '1'");
        }
    }
    return m;
}

GF2Matrix GF2Matrix::from_rows(std::initializer_list<std::string_view> rows) {
    return from_rows(std::span<const std::string_view>(rows.begin(), rows.size()));
}

GF2Matrix GF2Matrix::from_columns(std::size_t length, std::span<const GF2Vector> columns) {
    GF2Matrix m(length, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != length) throw std::invalid_argument("column length mismatch");
        for (std::size_t r = 0; r < length; ++r) {
            if (columns[c].get(r)) m.set(r, c);
        }
    }
    return m;
}

bool GF2Matrix::get(std::size_t r, std::size_t c) const {
    check_index(r, rows_, "row");
    check_index(c, cols_, "column");
    return (bits_[r * stride_ + c / kWordBits] & bit_mask(c)) != 0;
}

void GF2Matrix::set(std::size_t r, std::size_t c, bool value) {
    check_index(r, rows_, "row");
    check_index(c, cols_, "column");
    Word& w = bits_[r * stride_ + c / kWordBits];
    if (value) w |= bit_mask(c);
    else w &= ~bit_mask(c);
}

void GF2Matrix::flip(std::size_t r, std::size_t c) {
    check_index(r, rows_, "row");
    check_index(c, cols_, "column");
    bits_[r * stride_ + c / kWordBits] ^= bit_mask(c);
}

std::span<const Word> GF2Matrix::row_words(std::size_t r) const {
    check_index(r, rows_, "row");
    return std::span<const Word>(bits_).subspan(r * stride_, stride_);
}

GF2Vector GF2Matrix::row(std::size_t r) const {
    GF2Vector v(cols_);
    std::ranges::copy(row_words(r), v.words().begin());
    return v;
}

GF2Vector GF2Matrix::column(std::size_t c) const {
    GF2Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (get(r, c)) v.set(r);
    }
    return v;
}

GF2Matrix GF2Matrix::transposed() const {
    GF2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (get(r, c)) t.set(c, r);
        }
    }
    return t;
}

GF2Matrix GF2Matrix::augmented(const GF2Vector& v) const {
    if (v.size() != rows_) throw std::invalid_argument("augmenting column has wrong length");
    GF2Matrix out(rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (get(r, c)) out.set(r, c);
        }
        if (v.get(r)) out.set(r, cols_);
    }
    return out;
}

GF2Matrix GF2Matrix::row_reduced() const {
    GF2Matrix m = *this;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols_ && pivot_row < rows_; ++c) {
        const std::size_t w = c / kWordBits;
        const Word mask = bit_mask(c);
        std::size_t found = rows_;
        for (std::size_t r = pivot_row; r < rows_; ++r) {
            if (m.bits_[r * stride_ + w] & mask) {
                found = r;
                break;
            }
        }
        if (found == rows_) continue;
        if (found != pivot_row) {
            std::swap_ranges(m.bits_.begin() + static_cast<std::ptrdiff_t>(found * stride_),
                             m.bits_.begin() + static_cast<std::ptrdiff_t>((found + 1) * stride_),
                             m.bits_.begin() + static_cast<std::ptrdiff_t>(pivot_row * stride_));
        }
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r != pivot_row && (m.bits_[r * stride_ + w] & mask)) {
                for (std::size_t k = 0; k < stride_; ++k) m.bits_[r * stride_ + k] ^= m.bits_[pivot_row * stride_ + k];
            }
        }
        ++pivot_row;
    }
    return m;
}

// ---------------------------------------------------------------- free functions

std::size_t rank_in_place(std::span<Word> buffer, std::size_t rows, std::size_t stride) {
    if (buffer.size() < rows * stride) throw std::invalid_argument("rank buffer too small");
    if (stride == 1) {
        // Single-word rows: the common case for small fitting matrices.
        std::size_t rank = 0;
        for (std::size_t r = 0; r < rows; ++r) {
            const Word row = buffer[r];
            if (row == 0) continue;
            const Word pivot = row & (~row + 1);
            for (std::size_t s = r + 1; s < rows; ++s) {
                if (buffer[s] & pivot) buffer[s] ^= row;
            }
            ++rank;
        }
        return rank;
    }
    std::size_t rank = 0;
    for (std::size_t r = 0; r < rows; ++r) {
        auto row = buffer.subspan(r * stride, stride);
        const std::size_t p = lowest_bit(row);
        if (p == static_cast<std::size_t>(-1)) continue;
        const std::size_t w = p / kWordBits;
        const Word mask = bit_mask(p);
        for (std::size_t s = r + 1; s < rows; ++s) {
            auto other = buffer.subspan(s * stride, stride);
            if (other[w] & mask) {
                for (std::size_t k = w; k < stride; ++k) other[k] ^= row[k];
            }
        }
        ++rank;
    }
    return rank;
}

std::size_t rank(const GF2Matrix& m) {
    std::vector<Word> scratch;
    scratch.reserve(m.rows() * m.words_per_row());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto words = m.row_words(r);
        scratch.insert(scratch.end(), words.begin(), words.end());
    }
    return rank_in_place(scratch, m.rows(), m.words_per_row());
}

bool in_span(const GF2Matrix& m, const GF2Vector& v) {
    if (v.size() != m.rows()) throw std::invalid_argument("in_span: vector length must equal the matrix row count");
    GF2Basis basis(m.rows());
    for (std::size_t c = 0; c < m.cols(); ++c) basis.insert(m.column(c));
    return basis.contains(v);
}

// ---------------------------------------------------------------- GF2Basis

GF2Basis::GF2Basis(std::size_t length) : length_(length) {}

void GF2Basis::reduce(GF2Vector& v) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (v.get(pivots_[i])) v ^= basis_[i];
    }
}

bool GF2Basis::insert(GF2Vector v) {
    if (v.size() != length_) throw std::invalid_argument("basis vector length mismatch");
    reduce(v);
    const std::size_t p = lowest_bit(v.words());
    if (p == static_cast<std::size_t>(-1)) return false;
    for (auto& b : basis_) {
        if (b.get(p)) b ^= v;
    }
    basis_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

bool GF2Basis::contains(GF2Vector v) const {
    if (v.size() != length_) throw std::invalid_argument("basis vector length mismatch");
    reduce(v);
    return v.is_zero();
}

} // namespace icl
