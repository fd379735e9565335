#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace grandsoft {

/// Dense binary matrix with row-major packed storage, arithmetic over GF(2).
class BitMatrix {
  public:
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool v);

    void xor_row_into(std::size_t src, std::size_t dst);
    void swap_rows(std::size_t a, std::size_t b);

    /// Rank over GF(2); works on a copy.
    std::size_t rank() const;

    // Row as a bitmask, valid when cols <= 64.
    std::uint64_t row_mask(std::size_t r) const;
    void set_row_mask(std::size_t r, std::uint64_t m);

    bool operator==(const BitMatrix& o) const;

  private:
    std::size_t rows_, cols_, words_per_row_;
    std::vector<std::uint64_t> bits_;
};

}  // namespace grandsoft
