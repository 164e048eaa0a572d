#include "leviflat/linalg.hpp"

namespace lf {

std::size_t row_reduce(Matrix& m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r) {
            if (!m[r][col].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        GaussianRational inv = GaussianRational(1) / m[rank][col];
        for (std::size_t c = col; c < cols; ++c) m[rank][c] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            GaussianRational f = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

std::size_t matrix_rank(Matrix m) { return row_reduce(m); }

std::vector<Row> kernel_basis(Matrix m) {
    if (m.empty()) return {};
    std::size_t cols = m[0].size();
    std::size_t rank = row_reduce(m);

    // Locate pivot columns of the reduced matrix.
    std::vector<std::size_t> pivot_col(rank);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t r = 0; r < rank; ++r) {
        std::size_t c = 0;
        while (c < cols && m[r][c].is_zero()) ++c;
        pivot_col[r] = c;
        is_pivot[c] = true;
    }

    std::vector<Row> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Row v(cols, GaussianRational());
        v[free] = GaussianRational(1);
        for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool same_row_span(const Matrix& a, const Matrix& b) {
    std::size_t ra = matrix_rank(a);
    std::size_t rb = matrix_rank(b);
    if (ra != rb) return false;
    Matrix stacked = a;
    stacked.insert(stacked.end(), b.begin(), b.end());
    return matrix_rank(std::move(stacked)) == ra;
}

} // namespace lf
