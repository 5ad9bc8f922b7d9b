#include "hecc/literals.hpp"

#include <cctype>
#include <sstream>

namespace hecc {

namespace {

// minimal character-level scanner with position reporting
struct Scanner {
    const std::string& s;
    size_t pos = 0;

    explicit Scanner(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool try_consume(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!try_consume(c)) fail(std::string("expected '") + c + "'");
    }
    bool try_keyword(const std::string& kw) {
        skip_ws();
        if (s.compare(pos, kw.size(), kw) == 0) {
            const size_t end = pos + kw.size();
            if (end >= s.size() || !std::isalnum(static_cast<unsigned char>(s[end]))) {
                pos = end;
                return true;
            }
        }
        return false;
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (start == pos) fail("expected an identifier");
        return s.substr(start, pos - start);
    }
    mpz_class integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) fail("expected an integer");
        return mpz_class(s.substr(start, pos - start));
    }
    long small_int() {
        mpz_class v = integer();
        if (!v.fits_slong_p()) fail("integer out of range");
        return v.get_si();
    }
    [[noreturn]] void fail(const std::string& what) {
        int line = 1, col = 1;
        for (size_t i = 0; i < pos && i < s.size(); ++i) {
            if (s[i] == '\n') { ++line; col = 1; }
            else ++col;
        }
        throw ParseError(what + " at line " + std::to_string(line) + ", column " +
                             std::to_string(col),
                         line, col);
    }

    // signed rational or residue literal: n or n/d
    FieldElem field_literal(const Field& f) {
        mpz_class num = integer();
        if (try_consume('/')) {
            mpz_class den = integer();
            if (den == 0) fail("zero denominator");
            if (f.is_prime_field())
                return FieldElem(f, num) / FieldElem(f, den);
            return FieldElem::from_ratio(num, den);
        }
        return FieldElem(f, num);
    }

    // polynomial in `var` with '+'/'-' joined terms: c, c*var^k, var^k, var
    Poly poly(const Field& f, const std::string& var) {
        Poly acc(f);
        bool neg = try_consume('-');
        for (;;) {
            Poly term = poly_term(f, var);
            acc = neg ? acc - term : acc + term;
            if (try_consume('+')) neg = false;
            else if (try_consume('-')) neg = true;
            else break;
        }
        return acc;
    }

    Poly poly_term(const Field& f, const std::string& var) {
        FieldElem coef(f, 1);
        bool have_coef = false;
        skip_ws();
        if (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])))) {
            coef = field_literal(f);
            have_coef = true;
        }
        if (have_coef && !try_consume('*')) {
            // bare constant unless the variable follows directly
            if (!try_keyword(var)) return Poly::constant(coef);
            return with_power(f, coef);
        }
        if (!try_keyword(var)) {
            if (have_coef) fail("expected '" + var + "'");
            fail("expected a term");
        }
        return with_power(f, coef);
    }

    Poly with_power(const Field& f, const FieldElem& coef) {
        long k = 1;
        if (try_consume('^')) k = small_int();
        if (k < 0) fail("negative exponent in a polynomial");
        return Poly::monomial(f, static_cast<int>(k), coef);
    }
};

Place place_from_scanner(Scanner& sc, const CurvePtr& curve) {
    const Field& F = curve->field();
    if (sc.try_keyword("inf")) return Place::infinity();

    if (sc.try_consume('(')) {
        FieldElem x0 = sc.field_literal(F);
        sc.expect(',');
        FieldElem y0 = sc.field_literal(F);
        sc.expect(')');
        if (y0 * y0 != curve->f().eval(x0))
            sc.fail("point (" + x0.str() + "," + y0.str() + ") is not on the curve");
        Poly m = Poly(F, {-x0, FieldElem(F, 1)});
        if (y0.is_zero()) return Place::ramified(m);
        return Place::split(m, Poly::constant(y0));
    }

    if (sc.try_consume('[')) {
        Poly m = sc.poly(F, "x");
        sc.expect(';');
        Place out = Place::infinity();
        bool have = false;
        if (sc.try_keyword("inert")) {
            out = Place::inert(m.monic());
            have = true;
        } else {
            Poly b = sc.poly(F, "x");
            if (b.is_zero()) out = Place::ramified(m.monic());
            else out = Place::split(m.monic(), b);
            have = true;
        }
        sc.expect(']');
        if (!have) sc.fail("bad place literal");
        // accept only genuine places of this curve
        try {
            for (const Place& p : places_above(*curve, m))
                if (p == out) return out;
        } catch (const ContractViolation& e) {
            sc.fail(e.what());
        }
        sc.fail("no such place on the curve: " + out.str());
    }
    sc.fail("expected a place ('inf', '(a,b)' or '[p; b]')");
    throw InternalError("unreachable");
}

Divisor divisor_from_scanner(Scanner& sc, const CurvePtr& curve) {
    Divisor d = Divisor::zero(curve);
    bool neg = sc.try_consume('-');
    for (;;) {
        // "0" denotes the empty divisor
        sc.skip_ws();
        bool took_term = false;
        if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
            long n = sc.small_int();
            if (sc.try_consume('*')) {
                Place p = place_from_scanner(sc, curve);
                d.add_term(p, neg ? -n : n);
                took_term = true;
            } else if (n == 0) {
                took_term = true; // zero divisor summand
            } else {
                sc.fail("expected '*' after a multiplicity");
            }
        } else {
            Place p = place_from_scanner(sc, curve);
            d.add_term(p, neg ? -1 : 1);
            took_term = true;
        }
        if (!took_term) sc.fail("expected a divisor term");
        if (sc.try_consume('+')) neg = false;
        else if (sc.try_consume('-')) neg = true;
        else break;
    }
    return d;
}

ResElem tail_coeff_from_scanner(Scanner& sc, const ResFieldPtr& rf) {
    const Field& F = rf->base();
    if (sc.try_consume('(')) {
        Poly re = sc.poly(F, "t");
        sc.expect(')');
        if (sc.try_consume('+')) {
            sc.expect('(');
            Poly im = sc.poly(F, "t");
            sc.expect(')');
            sc.expect('*');
            if (!sc.try_keyword("s")) sc.fail("expected 's'");
            return rf->make(re, im);
        }
        return rf->from_poly(re);
    }
    return rf->from_base(sc.field_literal(F));
}

std::pair<Place, Tail> tail_from_scanner(Scanner& sc, const CurvePtr& curve) {
    Place pl = place_from_scanner(sc, curve);
    sc.expect(':');
    ResFieldPtr rf = pl.residue_field(*curve);
    Tail tail;
    bool neg = sc.try_consume('-');
    for (;;) {
        ResElem c = tail_coeff_from_scanner(sc, rf);
        sc.expect('*');
        if (!sc.try_keyword("t")) sc.fail("expected 't'");
        sc.expect('^');
        long ord = sc.small_int();
        if (neg) c = -c;
        if (!c.is_zero()) {
            auto [it, fresh] = tail.terms.emplace(static_cast<int>(ord), c);
            if (!fresh) it->second = it->second + c;
        }
        if (sc.try_consume('+')) neg = false;
        else if (sc.try_consume('-')) neg = true;
        else break;
    }
    return {pl, tail};
}

BundlePtr bundle_from_scanner(Scanner& sc, const CurvePtr& curve, const BundleEnv& env) {
    if (sc.try_keyword("line")) {
        sc.expect('(');
        Divisor d = divisor_from_scanner(sc, curve);
        sc.expect(')');
        return Bundle::line(std::move(d));
    }
    if (sc.try_keyword("sum")) {
        sc.expect('(');
        std::vector<BundlePtr> parts;
        parts.push_back(bundle_from_scanner(sc, curve, env));
        while (sc.try_consume(','))
            parts.push_back(bundle_from_scanner(sc, curve, env));
        sc.expect(')');
        return Bundle::direct_sum(std::move(parts));
    }
    if (sc.try_keyword("ext")) {
        sc.expect('(');
        std::string name = sc.ident();
        const H1Class* cls = env.find_class(name);
        if (!cls) sc.fail("unknown class '" + name + "'");
        sc.expect(';');
        BundlePtr sub = bundle_from_scanner(sc, curve, env);
        sc.expect(',');
        BundlePtr quot = bundle_from_scanner(sc, curve, env);
        sc.expect(')');
        return Bundle::ext(*cls, std::move(sub), std::move(quot));
    }
    std::string name = sc.ident();
    const BundlePtr* b = env.find_bundle(name);
    if (!b) sc.fail("unknown bundle '" + name + "'");
    return *b;
}

} // namespace

FieldElem parse_field_literal(const Field& f, const std::string& text) {
    Scanner sc(text);
    FieldElem v = sc.field_literal(f);
    if (!sc.eof()) sc.fail("trailing input");
    return v;
}

Poly parse_poly(const Field& f, const std::string& text, const std::string& var) {
    Scanner sc(text);
    Poly p = sc.poly(f, var);
    if (!sc.eof()) sc.fail("trailing input");
    return p;
}

Place parse_place(const CurvePtr& curve, const std::string& text) {
    Scanner sc(text);
    Place p = place_from_scanner(sc, curve);
    if (!sc.eof()) sc.fail("trailing input");
    return p;
}

Divisor parse_divisor(const CurvePtr& curve, const std::string& text) {
    Scanner sc(text);
    Divisor d = divisor_from_scanner(sc, curve);
    if (!sc.eof()) sc.fail("trailing input");
    return d;
}

std::pair<Place, Tail> parse_tail(const CurvePtr& curve, const std::string& text) {
    Scanner sc(text);
    auto out = tail_from_scanner(sc, curve);
    if (!sc.eof()) sc.fail("trailing input");
    return out;
}

std::string print_tail(const CurvePtr& curve, const Place& pl, const Tail& tail) {
    (void)curve;
    std::ostringstream out;
    out << pl.str() << ": ";
    bool first = true;
    for (const auto& [ord, c] : tail.terms) {
        if (!first) out << " + ";
        first = false;
        if (c.field()->modulus().degree() == 1 && !c.field()->has_quad()) {
            out << c.re().coeff(0).str();
        } else if (c.im().is_zero()) {
            out << "(" << c.re().str("t") << ")";
        } else {
            out << "(" << c.re().str("t") << ")+(" << c.im().str("t") << ")*s";
        }
        out << "*t^" << ord;
    }
    return out.str();
}

const H1Class* BundleEnv::find_class(const std::string& name) const {
    for (const auto& [n, c] : classes)
        if (n == name) return &c;
    return nullptr;
}

const BundlePtr* BundleEnv::find_bundle(const std::string& name) const {
    for (const auto& [n, b] : bundles)
        if (n == name) return &b;
    return nullptr;
}

BundlePtr parse_bundle(const CurvePtr& curve, const BundleEnv& env, const std::string& text) {
    Scanner sc(text);
    BundlePtr b = bundle_from_scanner(sc, curve, env);
    if (!sc.eof()) sc.fail("trailing input");
    return b;
}

std::string print_bundle(const BundlePtr& b, const BundleEnv& env) {
    std::ostringstream out;
    switch (b->node()) {
    case Bundle::Node::Line:
        out << "line(" << b->line_rep().str() << ")";
        break;
    case Bundle::Node::Sum: {
        out << "sum(";
        bool first = true;
        for (const auto& p : b->summands()) {
            if (!first) out << ", ";
            first = false;
            out << print_bundle(p, env);
        }
        out << ")";
        break;
    }
    case Bundle::Node::Ext: {
        std::string name;
        for (const auto& [n, c] : env.classes)
            if (c == b->ext_class()) { name = n; break; }
        if (name.empty()) throw ContractViolation("extension class has no name in this context");
        out << "ext(" << name << "; " << print_bundle(b->sub(), env) << ", "
            << print_bundle(b->quot(), env) << ")";
        break;
    }
    }
    return out.str();
}

} // namespace hecc
