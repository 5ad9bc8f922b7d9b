#ifndef HECC_LINALG_HPP
#define HECC_LINALG_HPP

#include <optional>
#include <vector>

#include "hecc/field.hpp"

namespace hecc {

using Vec = std::vector<FieldElem>;

// Dense row-major matrix over an exact field.
struct Mat {
    Field field;
    size_t rows = 0, cols = 0;
    std::vector<FieldElem> a;

    Mat(const Field& f, size_t r, size_t c)
        : field(f), rows(r), cols(c), a(r * c, FieldElem(f, 0)) {}
    FieldElem& at(size_t r, size_t c) { return a[r * cols + c]; }
    const FieldElem& at(size_t r, size_t c) const { return a[r * cols + c]; }
};

struct LinearSolution {
    bool solvable = false;
    Vec particular;          // one solution (free variables set to zero)
    std::vector<Vec> kernel; // RREF-canonical basis of ker(A)
};

// Exact Gauss-Jordan. Returns the unsolvable marker (solvable = false) for
// inconsistent systems; kernel is produced either way.
LinearSolution solve_linear(const Mat& A, const Vec& b);

// In-place reduced row echelon form; returns pivot column indices.
std::vector<size_t> rref(Mat& m);

size_t rank(Mat m);

// Canonicalize a spanning set to the RREF basis of its row space.
std::vector<Vec> rref_basis(const Field& f, const std::vector<Vec>& span);

Vec mat_vec(const Mat& A, const Vec& x);

} // namespace hecc

#endif
