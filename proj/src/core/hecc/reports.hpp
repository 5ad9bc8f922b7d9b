#ifndef HECC_REPORTS_HPP
#define HECC_REPORTS_HPP

#include <string>

#include "hecc/curve.hpp"

namespace hecc {

std::string genus_report(const CurvePtr& curve, bool as_json);
std::string rr_report(const CurvePtr& curve, const std::string& divisor_literal, bool as_json);
std::string h1_report(const CurvePtr& curve, const std::string& divisor_literal, bool as_json);

// Evaluate flatness of bundle expressions from a definitions script:
//   class  NAME over <divisor> = <tail> [; <tail>]...
//   bundle NAME = <bundle-expr>
//   eval   <bundle-expr>
std::string flat_report(const CurvePtr& curve, const std::string& defs, bool as_json);

} // namespace hecc

#endif
