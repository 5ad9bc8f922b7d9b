#ifndef HECC_EXPAND_HPP
#define HECC_EXPAND_HPP

#include "hecc/function.hpp"
#include "hecc/series.hpp"

namespace hecc {

// Expansions of the coordinate functions in the canonical local uniformizer:
//   split/inert places:  pi = p(x)        (x - x0 in degree 1)
//   ramified places:     pi = y
//   infinity:            pi = x^g / y, normalized so v(pi) = 1
struct LocalData {
    ResFieldPtr rf;
    Laurent x;
    Laurent y;
};

// Coordinate expansions accurate to at least absolute precision prec.
LocalData local_data(const Curve& curve, const Place& pl, int prec);

// Laurent expansion of h at pl carrying n coefficients from the leading one,
// i.e. exponents v(h) .. v(h)+n-1. h must be nonzero, n >= 1.
Laurent expand_at(const FunctionElement& h, const Place& pl, int n);

} // namespace hecc

#endif
