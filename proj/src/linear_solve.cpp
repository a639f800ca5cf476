#include "linear_solve.hpp"

namespace p2g::detail {

std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> m,
                                                  std::vector<Rational> rhs) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<int> pivot_col_of_row;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[row]);
        std::swap(rhs[pivot], rhs[row]);
        Rational inv = m[row][col].reciprocal();
        for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
        rhs[row] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            Rational f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
            rhs[i] -= f * rhs[row];
        }
        pivot_col_of_row.push_back(static_cast<int>(col));
        ++row;
    }
    for (std::size_t i = row; i < rows; ++i)
        if (!rhs[i].is_zero()) return std::nullopt;

    std::vector<Rational> x(cols);
    for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i) x[pivot_col_of_row[i]] = rhs[i];
    return x;
}

}  // namespace p2g::detail
