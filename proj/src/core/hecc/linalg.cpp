#include "hecc/linalg.hpp"

namespace hecc {

std::vector<size_t> rref(Mat& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols && row < m.rows; ++col) {
        size_t piv = row;
        while (piv < m.rows && m.at(piv, col).is_zero()) ++piv;
        if (piv == m.rows) continue;
        if (piv != row)
            for (size_t c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(row, c));
        const FieldElem inv = m.at(row, col).inverse();
        for (size_t c = col; c < m.cols; ++c) m.at(row, c) = m.at(row, c) * inv;
        for (size_t r = 0; r < m.rows; ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            const FieldElem f = m.at(r, col);
            for (size_t c = col; c < m.cols; ++c)
                m.at(r, c) = m.at(r, c) - f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t rank(Mat m) {
    return rref(m).size();
}

LinearSolution solve_linear(const Mat& A, const Vec& b) {
    if (b.size() != A.rows) throw ContractViolation("solve_linear: rhs length mismatch");
    const Field& F = A.field;
    Mat aug(F, A.rows, A.cols + 1);
    for (size_t r = 0; r < A.rows; ++r) {
        for (size_t c = 0; c < A.cols; ++c) aug.at(r, c) = A.at(r, c);
        aug.at(r, A.cols) = b[r];
    }
    std::vector<size_t> pivots = rref(aug);

    LinearSolution out;
    out.solvable = !(std::find(pivots.begin(), pivots.end(), A.cols) != pivots.end());

    // pivot/free split of the coefficient columns
    std::vector<bool> is_pivot(A.cols, false);
    std::vector<size_t> coef_pivots;
    for (size_t p : pivots)
        if (p < A.cols) { is_pivot[p] = true; coef_pivots.push_back(p); }

    if (out.solvable) {
        out.particular.assign(A.cols, FieldElem(F, 0));
        for (size_t i = 0; i < coef_pivots.size(); ++i)
            out.particular[coef_pivots[i]] = aug.at(i, A.cols);
    }

    for (size_t c = 0; c < A.cols; ++c) {
        if (is_pivot[c]) continue;
        Vec v(A.cols, FieldElem(F, 0));
        v[c] = FieldElem(F, 1);
        for (size_t i = 0; i < coef_pivots.size(); ++i)
            v[coef_pivots[i]] = -aug.at(i, c);
        out.kernel.push_back(std::move(v));
    }
    out.kernel = rref_basis(F, out.kernel);
    return out;
}

std::vector<Vec> rref_basis(const Field& f, const std::vector<Vec>& span) {
    if (span.empty()) return {};
    const size_t n = span.front().size();
    Mat m(f, span.size(), n);
    for (size_t r = 0; r < span.size(); ++r) {
        if (span[r].size() != n) throw ContractViolation("ragged span");
        for (size_t c = 0; c < n; ++c) m.at(r, c) = span[r][c];
    }
    const size_t rk = rref(m).size();
    std::vector<Vec> out;
    out.reserve(rk);
    for (size_t r = 0; r < rk; ++r) {
        Vec v;
        v.reserve(n);
        for (size_t c = 0; c < n; ++c) v.push_back(m.at(r, c));
        out.push_back(std::move(v));
    }
    return out;
}

Vec mat_vec(const Mat& A, const Vec& x) {
    if (x.size() != A.cols) throw ContractViolation("mat_vec: size mismatch");
    Vec y(A.rows, FieldElem(A.field, 0));
    for (size_t r = 0; r < A.rows; ++r)
        for (size_t c = 0; c < A.cols; ++c)
            y[r] = y[r] + A.at(r, c) * x[c];
    return y;
}

} // namespace hecc
