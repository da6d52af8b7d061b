#ifndef LOGRES_LINALG_HPP
#define LOGRES_LINALG_HPP

#include "logres/field.hpp"

#include <vector>

namespace logres {

using Vec = std::vector<FieldElement>;
using Mat = std::vector<Vec>;

Vec zero_vec(size_t n, FieldKind kind);

// Gaussian elimination with pivots chosen by position (first nonzero entry
// scanning columns left to right, rows top to bottom). Everything here is
// exact and deterministic.

// Reduced row echelon form; returns pivot column per nonzero row.
std::vector<int> rref_inplace(Mat& rows);

int rank(Mat rows);

// Echelon basis of the row space together with the indices of the input rows
// that increased the rank (in input order).
struct SpanBasis {
    Mat rows;                    // reduced row echelon, nonzero rows only
    std::vector<int> pivot_cols; // per row
    std::vector<int> contributors;
};
SpanBasis row_space_basis(const Mat& rows, size_t ncols, FieldKind kind);

// Basis of {x : A x = 0}; one vector per free column, entry one at the free
// column, in ascending column order.
Mat kernel_basis(Mat a, size_t ncols, FieldKind kind);

// One solution of A x = b; false when inconsistent.
bool solve_linear(Mat a, Vec b, Vec& x, FieldKind kind);

} // namespace logres

#endif
