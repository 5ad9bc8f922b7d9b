#ifndef HECC_FACTOR_HPP
#define HECC_FACTOR_HPP

#include <vector>

#include "hecc/poly.hpp"

namespace hecc {

struct PolyFactor {
    Poly p;   // monic irreducible
    int mult; // multiplicity
};

// Complete factorization into monic irreducibles; the leading unit is
// dropped. Constant input gives an empty list; zero input throws.
// Deterministic output (factors sorted canonically).
std::vector<PolyFactor> factor(const Poly& f);

bool is_irreducible(const Poly& f);

} // namespace hecc

#endif
