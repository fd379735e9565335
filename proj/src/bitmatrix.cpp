#include "grandsoft/bitmatrix.hpp"

#include <stdexcept>

namespace grandsoft {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64), bits_(rows * words_per_row_, 0) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("BitMatrix: empty dimensions");
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("BitMatrix::get");
    return (bits_[r * words_per_row_ + c / 64] >> (c % 64)) & 1;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool v) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("BitMatrix::set");
    std::uint64_t& w = bits_[r * words_per_row_ + c / 64];
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    if (v)
        w |= bit;
    else
        w &= ~bit;
}

void BitMatrix::xor_row_into(std::size_t src, std::size_t dst) {
    if (src >= rows_ || dst >= rows_) throw std::out_of_range("BitMatrix::xor_row_into");
    for (std::size_t w = 0; w < words_per_row_; ++w)
        bits_[dst * words_per_row_ + w] ^= bits_[src * words_per_row_ + w];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a >= rows_ || b >= rows_) throw std::out_of_range("BitMatrix::swap_rows");
    for (std::size_t w = 0; w < words_per_row_; ++w)
        std::swap(bits_[a * words_per_row_ + w], bits_[b * words_per_row_ + w]);
}

std::size_t BitMatrix::rank() const {
    BitMatrix m = *this;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t pivot = r;
        while (pivot < rows_ && !m.get(pivot, c)) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != r) m.swap_rows(pivot, r);
        for (std::size_t i = 0; i < rows_; ++i)
            if (i != r && m.get(i, c)) m.xor_row_into(r, i);
        ++r;
    }
    return r;
}

std::uint64_t BitMatrix::row_mask(std::size_t r) const {
    if (cols_ > 64) throw std::logic_error("BitMatrix::row_mask: cols > 64");
    if (r >= rows_) throw std::out_of_range("BitMatrix::row_mask");
    return bits_[r * words_per_row_];
}

void BitMatrix::set_row_mask(std::size_t r, std::uint64_t m) {
    if (cols_ > 64) throw std::logic_error("BitMatrix::set_row_mask: cols > 64");
    if (r >= rows_) throw std::out_of_range("BitMatrix::set_row_mask");
    if (cols_ < 64 && (m >> cols_) != 0) throw std::invalid_argument("row mask exceeds cols");
    bits_[r * words_per_row_] = m;
}

bool BitMatrix::operator==(const BitMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_;
}

}  // namespace grandsoft
