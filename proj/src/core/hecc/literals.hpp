#ifndef HECC_LITERALS_HPP
#define HECC_LITERALS_HPP

#include <string>

#include "hecc/bundle.hpp"

namespace hecc {

// Text grammars shared by the CLI, the spec files and the certificates.
// Everything printed here re-parses to an equal value.
//
//   divisor:  term (('+'|'-') term)*          term = [n '*'] place
//   place:    inf | (a,b) | [p(x); b(x)] | [p(x); 0] | [p(x); inert]
//   tail:     place ':' c '*' 't' '^' k terms joined by '+'/'-'
//   bundle:   line(divisor) | sum(e, ...) | ext(classname; e_sub, e_quot)
//
// The zero divisor prints and parses as "0"; a leading '-' is accepted.

FieldElem parse_field_literal(const Field& f, const std::string& text);

Poly parse_poly(const Field& f, const std::string& text, const std::string& var = "x");

Place parse_place(const CurvePtr& curve, const std::string& text);

Divisor parse_divisor(const CurvePtr& curve, const std::string& text);

// one place's principal part, e.g. "(0,-1): 1*t^-2 + 2*t^-3"
std::pair<Place, Tail> parse_tail(const CurvePtr& curve, const std::string& text);

std::string print_tail(const CurvePtr& curve, const Place& pl, const Tail& tail);

// named H^1 classes available to ext(...) expressions
struct BundleEnv {
    std::vector<std::pair<std::string, H1Class>> classes;
    std::vector<std::pair<std::string, BundlePtr>> bundles;

    const H1Class* find_class(const std::string& name) const;
    const BundlePtr* find_bundle(const std::string& name) const;
};

BundlePtr parse_bundle(const CurvePtr& curve, const BundleEnv& env, const std::string& text);

// inverse of parse_bundle; extension classes are printed through their
// environment names (every ext class must be present in env)
std::string print_bundle(const BundlePtr& b, const BundleEnv& env);

} // namespace hecc

#endif
