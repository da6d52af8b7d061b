#include "logres/linalg.hpp"

#include <algorithm>

namespace logres {

Vec zero_vec(size_t n, FieldKind kind) {
    return Vec(n, FieldElement::zero(kind));
}

std::vector<int> rref_inplace(Mat& rows) {
    std::vector<int> pivots;
    if (rows.empty())
        return pivots;
    size_t ncols = rows[0].size();
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < rows.size(); ++c) {
        size_t sel = r;
        while (sel < rows.size() && rows[sel][c].is_zero())
            ++sel;
        if (sel == rows.size())
            continue;
        std::swap(rows[r], rows[sel]);
        FieldElement inv = rows[r][c].inverse();
        for (size_t j = c; j < ncols; ++j)
            rows[r][j] *= inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero())
                continue;
            FieldElement factor = rows[i][c];
            for (size_t j = c; j < ncols; ++j)
                rows[i][j] -= factor * rows[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    rows.resize(r);
    return pivots;
}

int rank(Mat rows) {
    return static_cast<int>(rref_inplace(rows).size());
}

SpanBasis row_space_basis(const Mat& rows, size_t ncols, FieldKind kind) {
    SpanBasis out;
    for (size_t idx = 0; idx < rows.size(); ++idx) {
        Vec v = rows[idx];
        if (v.size() != ncols)
            v.resize(ncols, FieldElement::zero(kind));
        // reduce against the rows collected so far
        for (size_t i = 0; i < out.rows.size(); ++i) {
            int p = out.pivot_cols[i];
            if (!v[static_cast<size_t>(p)].is_zero()) {
                FieldElement f = v[static_cast<size_t>(p)];
                for (size_t j = 0; j < ncols; ++j)
                    v[j] -= f * out.rows[i][j];
            }
        }
        int pivot = -1;
        for (size_t j = 0; j < ncols; ++j) {
            if (!v[j].is_zero()) {
                pivot = static_cast<int>(j);
                break;
            }
        }
        if (pivot < 0)
            continue;
        FieldElement inv = v[static_cast<size_t>(pivot)].inverse();
        for (size_t j = 0; j < ncols; ++j)
            v[j] *= inv;
        out.rows.push_back(std::move(v));
        out.pivot_cols.push_back(pivot);
        out.contributors.push_back(static_cast<int>(idx));
    }
    // back-substitute to reduced echelon and sort rows by pivot column
    std::vector<size_t> order(out.rows.size());
    for (size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return out.pivot_cols[a] < out.pivot_cols[b];
    });
    Mat sorted;
    std::vector<int> pivots;
    std::vector<int> contrib;
    for (size_t i : order) {
        sorted.push_back(std::move(out.rows[i]));
        pivots.push_back(out.pivot_cols[i]);
        contrib.push_back(out.contributors[i]);
    }
    out.rows = std::move(sorted);
    out.pivot_cols = std::move(pivots);
    out.contributors = std::move(contrib);
    for (size_t i = out.rows.size(); i-- > 0;) {
        for (size_t k = 0; k < i; ++k) {
            int p = out.pivot_cols[i];
            FieldElement f = out.rows[k][static_cast<size_t>(p)];
            if (f.is_zero())
                continue;
            for (size_t j = 0; j < ncols; ++j)
                out.rows[k][j] -= f * out.rows[i][j];
        }
    }
    return out;
}

Mat kernel_basis(Mat a, size_t ncols, FieldKind kind) {
    for (auto& row : a)
        row.resize(ncols, FieldElement::zero(kind));
    std::vector<int> pivots = rref_inplace(a);
    std::vector<bool> is_pivot(ncols, false);
    for (int p : pivots)
        is_pivot[static_cast<size_t>(p)] = true;
    Mat basis;
    for (size_t c = 0; c < ncols; ++c) {
        if (is_pivot[c])
            continue;
        Vec v = zero_vec(ncols, kind);
        v[c] = FieldElement::one(kind);
        for (size_t i = 0; i < pivots.size(); ++i)
            v[static_cast<size_t>(pivots[i])] = -a[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool solve_linear(Mat a, Vec b, Vec& x, FieldKind kind) {
    size_t ncols = a.empty() ? 0 : a[0].size();
    for (size_t i = 0; i < a.size(); ++i)
        a[i].push_back(b[i]);
    std::vector<int> pivots = rref_inplace(a);
    x = zero_vec(ncols, kind);
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == static_cast<int>(ncols))
            return false; // pivot in the augmented column: inconsistent
        x[static_cast<size_t>(pivots[i])] = a[i][ncols];
    }
    return true;
}

} // namespace logres
