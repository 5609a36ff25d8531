#ifndef FPURE_LINALG_HPP
#define FPURE_LINALG_HPP

#include <cstddef>
#include <vector>

#include "field.hpp"

namespace fpure {

/// Dense row-major matrix over F_p.
class ModMatrix {
public:
    ModMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Coeff& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Coeff operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// In-place reduced row echelon form; returns the pivot columns.
    std::vector<std::size_t> row_reduce(const PrimeField& F) {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t sel = row;
            while (sel < rows_ && (*this)(sel, col) == 0) ++sel;
            if (sel == rows_) continue;
            swap_rows(sel, row);
            Coeff inv = F.inv((*this)(row, col));
            for (std::size_t c = col; c < cols_; ++c) (*this)(row, c) = F.mul((*this)(row, c), inv);
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == row) continue;
                Coeff factor = (*this)(r, col);
                if (factor == 0) continue;
                Coeff neg = F.neg(factor);
                for (std::size_t c = col; c < cols_; ++c) {
                    Coeff v = (*this)(row, c);
                    if (v != 0) (*this)(r, c) = F.add((*this)(r, c), F.mul(neg, v));
                }
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

private:
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<Coeff> data_;
};

inline std::size_t rank(ModMatrix m, const PrimeField& F) { return m.row_reduce(F).size(); }

/// Basis of {v : M v = 0}, one vector per free column.
inline std::vector<std::vector<Coeff>> kernel_basis(ModMatrix m, const PrimeField& F) {
    auto pivots = m.row_reduce(F);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Coeff>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Coeff> v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(m(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace fpure

#endif
