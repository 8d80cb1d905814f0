#include "mexp/linalg.hpp"

#include <utility>

namespace mexp {

std::vector<std::size_t> FpMatrix::rref() {
    const std::uint32_t p = p_.value();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t piv = row;
        while (piv < rows_ && at(piv, col) == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != row) {
            for (std::size_t c = col; c < cols_; ++c) std::swap(at(piv, c), at(row, c));
        }
        const std::uint32_t inv = inv_mod(at(row, col), p);
        for (std::size_t c = col; c < cols_; ++c) at(row, c) = mul_mod(at(row, c), inv, p);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row) continue;
            const std::uint32_t factor = at(r, col);
            if (factor == 0) continue;
            for (std::size_t c = col; c < cols_; ++c) {
                at(r, c) = sub_mod(at(r, c), mul_mod(factor, at(row, c), p), p);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(FpMatrix m) { return m.rref().size(); }

std::vector<std::vector<std::uint32_t>> nullspace(FpMatrix m) {
    const std::uint32_t p = m.prime().value();
    const std::vector<std::size_t> pivots = m.rref();
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint32_t> v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = sub_mod(0, m.at(r, free), p);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace mexp
