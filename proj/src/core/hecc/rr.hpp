#ifndef HECC_RR_HPP
#define HECC_RR_HPP

#include <map>
#include <optional>

#include "hecc/expand.hpp"

namespace hecc {

// Principal part at one place: finitely many Laurent terms, coefficients in
// the place's residue field.
struct Tail {
    std::map<int, ResElem> terms; // order -> coefficient

    bool empty() const { return terms.empty(); }
    int min_order() const;
    Laurent to_laurent(const ResFieldPtr& rf) const;
};

using TailMap = std::map<Place, Tail>;

struct MLResult {
    bool solvable = false;
    std::optional<FunctionElement> witness; // matches every tail when solvable
    std::vector<FunctionElement> kernel;    // RREF-canonical basis of L(D)
};

// The one exact linear solve behind every cohomology computation here.
//
// Finds h with: at each tail place, the expansion of h agrees with the tail
// on all orders below -mult_D(place); and div(h) + D >= 0 away from the
// prescribed orders. With no tails this computes L(D) as the kernel.
//
// Method: clear denominators with c(x) built from the pole capacities, write
// h = (a(x) + b(x) y)/c with degree bounds at infinity read off from
// v(x) = -2, v(y) = -(2g+1), and impose coefficient conditions of the local
// expansions at every constrained place (each order at a degree-d place
// contributes d base-field rows).
MLResult ml_solve(const Divisor& d, const TailMap& tails);

struct RRSpace {
    Divisor d;
    std::vector<FunctionElement> basis;
    int dim() const { return static_cast<int>(basis.size()); }
};

RRSpace rr_basis(const Divisor& d);
int h0(const Divisor& d);
int h1(const Divisor& d); // h0(K - D) by Serre duality

} // namespace hecc

#endif
