#pragma once

#include "mexp/fpcore.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace mexp {

/// Dense row-major matrix over F_p.
class FpMatrix {
public:
    FpMatrix(std::size_t rows, std::size_t cols, Prime p) : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Prime prime() const { return p_; }

    std::uint32_t& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    std::uint32_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    /// In-place reduced row echelon form. Pivot rule: for each column in
    /// order, the first row at or below the current one with a nonzero entry.
    /// Returns the pivot column of each pivot row.
    std::vector<std::size_t> rref();

private:
    std::size_t rows_, cols_;
    Prime p_;
    std::vector<std::uint32_t> a_;
};

std::size_t rank(FpMatrix m);

/// Basis of {v : M v = 0}, one vector per free column in ascending order;
/// each has a 1 in its free column and zeros in the other free columns.
std::vector<std::vector<std::uint32_t>> nullspace(FpMatrix m);

}  // namespace mexp
