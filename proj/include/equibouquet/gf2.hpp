#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "equibouquet/errors.hpp"

namespace equibouquet {

/// Dense bit matrix, rows packed into 64-bit words.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64),
          data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(words_), 0) {
        if (rows < 0 || cols < 0) throw DomainError("BitMatrix: negative shape");
    }

    static BitMatrix identity(int n) {
        BitMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const { return (word(r, c) >> (c % 64)) & 1u; }
    void set(int r, int c, bool bit) {
        std::uint64_t& w = data_[index(r, c)];
        const std::uint64_t mask = std::uint64_t{1} << (c % 64);
        w = bit ? (w | mask) : (w & ~mask);
    }

    /// row[dst] ^= row[src]
    void xor_row(int dst, int src) {
        for (int k = 0; k < words_; ++k) data_[offset(dst) + k] ^= data_[offset(src) + k];
    }
    void swap_rows(int a, int b) {
        for (int k = 0; k < words_; ++k) std::swap(data_[offset(a) + k], data_[offset(b) + k]);
    }

    std::vector<std::vector<int>> to_rows() const {
        std::vector<std::vector<int>> out(static_cast<std::size_t>(rows_), std::vector<int>(cols_));
        for (int r = 0; r < rows_; ++r) {
            for (int c = 0; c < cols_; ++c) out[r][c] = get(r, c) ? 1 : 0;
        }
        return out;
    }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t offset(int r) const { return static_cast<std::size_t>(r) * static_cast<std::size_t>(words_); }
    std::size_t index(int r, int c) const { return offset(r) + static_cast<std::size_t>(c / 64); }
    std::uint64_t word(int r, int c) const { return data_[index(r, c)]; }

    int rows_ = 0;
    int cols_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> data_;
};

/// Rank over GF(2) by row reduction.
inline int gf2_rank(BitMatrix m) {
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows(); ++r) {
            if (m.get(r, col)) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        m.swap_rows(rank, pivot);
        for (int r = 0; r < m.rows(); ++r) {
            if (r != rank && m.get(r, col)) m.xor_row(r, rank);
        }
        ++rank;
    }
    return rank;
}

}  // namespace equibouquet
