#ifndef HECC_CURVE_SPEC_HPP
#define HECC_CURVE_SPEC_HPP

#include "hecc/curve.hpp"

namespace hecc {

// Flat key-value curve description:
//
//   field = Q            # or Fp:1009
//   f     = [1, 0, 0, 0, 0, 1]      # coefficients, ascending
//   hints = [(0, 1)]                # optional rational points
//   seed  = 0                       # optional
//
// '#' starts a comment; keys may appear in any order, each at most once.
struct CurveSpec {
    Field field = Field::rationals();
    std::vector<FieldElem> f_coeffs; // ascending
    std::vector<std::pair<FieldElem, FieldElem>> hints;
    std::uint64_t seed = 0;
    bool has_seed = false;

    static CurveSpec parse(const std::string& text);

    // validates the model and every hint; throws ValidationError
    CurvePtr make_validated_curve() const;
    std::vector<Place> hint_places(const CurvePtr& curve) const;
};

} // namespace hecc

#endif
