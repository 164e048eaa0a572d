#ifndef LEVIFLAT_LINALG_HPP
#define LEVIFLAT_LINALG_HPP

#include <vector>

#include "leviflat/rational.hpp"

namespace lf {

// Dense exact linear algebra over Q(i), used for tangent-space computations.
// Real matrices are handled with zero imaginary parts.
using Row = std::vector<GaussianRational>;
using Matrix = std::vector<Row>;

// Row echelon reduction in place; returns the rank.
std::size_t row_reduce(Matrix& m);

std::size_t matrix_rank(Matrix m);

// Basis of { x : M x = 0 }.
std::vector<Row> kernel_basis(Matrix m);

// Spans of two row families are equal.
bool same_row_span(const Matrix& a, const Matrix& b);

} // namespace lf

#endif
