#include "hecc/expand.hpp"

namespace hecc {

namespace {

// Newton iteration until the residual vanishes to working precision
template <class Step, class Residual>
Laurent newton(Laurent x0, Residual residual, Step step) {
    Laurent x = std::move(x0);
    for (int iter = 0; iter < 64; ++iter) {
        Laurent r = residual(x);
        if (r.is_zero_to_prec()) return x;
        x = step(x, r);
    }
    throw InternalError("local expansion did not converge");
}

LocalData finite_unramified(const Curve& curve, const Place& pl, int prec) {
    LocalData out;
    out.rf = pl.residue_field(curve);
    const ResFieldPtr& L = out.rf;
    const Poly& p = pl.minpoly();
    const Laurent pi = Laurent::monomial(L, L->one(), 1, prec);

    if (p.degree() == 1) {
        // x = x0 + pi exactly
        const FieldElem x0 = -p.coeff(0);
        out.x = Laurent(L, 0, {L->from_base(x0), L->one()}, prec);
    } else {
        // solve p(X) = pi from X = tau
        const Poly dp = p.derivative();
        out.x = newton(
            Laurent::constant(L, L->gen(), prec),
            [&](const Laurent& X) { return eval_poly(p, X) - pi; },
            [&](const Laurent& X, const Laurent& r) { return X - r * eval_poly(dp, X).inverse(); });
    }

    // solve Y^2 = f(X) from the branch
    const ResElem y0 = pl.finite_type() == Place::FiniteType::Split
                           ? L->from_poly(pl.branch())
                           : L->sqrt_gen();
    const Laurent fx = eval_poly(curve.f(), out.x);
    const ResElem half = L->from_base(FieldElem(curve.field(), 2).inverse());
    out.y = newton(
        Laurent::constant(L, y0, prec),
        [&](const Laurent& Y) { return Y * Y - fx; },
        [&](const Laurent& Y, const Laurent& r) { return Y - (r * Y.inverse()).scaled(half); });
    return out;
}

LocalData finite_ramified(const Curve& curve, const Place& pl, int prec) {
    LocalData out;
    out.rf = pl.residue_field(curve);
    const ResFieldPtr& L = out.rf;
    const Laurent u = Laurent::monomial(L, L->one(), 1, prec);
    const Laurent u2 = u * u;
    const Poly df = curve.f().derivative();
    // solve f(X) = u^2 from X = tau; f'(tau) != 0 since f is squarefree
    out.x = newton(
        Laurent::constant(L, L->gen(), prec),
        [&](const Laurent& X) { return eval_poly(curve.f(), X) - u2; },
        [&](const Laurent& X, const Laurent& r) { return X - r * eval_poly(df, X).inverse(); });
    out.y = u;
    return out;
}

LocalData at_infinity(const Curve& curve, const Place& pl, int prec) {
    LocalData out;
    out.rf = pl.residue_field(curve);
    const ResFieldPtr& L = out.rf;
    const Field& F = curve.field();
    const int g = curve.genus();
    const int ps = prec + 2 * g + 6; // s needs headroom: x = 1/s, y = x^g/t

    // s = 1/x satisfies s = t^2 * F(s) with F the coefficient reversal of f
    std::vector<FieldElem> rev;
    for (int i = curve.f().degree(); i >= 0; --i) rev.push_back(curve.f().coeff(i));
    const Poly frev(F, rev);
    const Poly dfrev = frev.derivative();
    const Laurent t = Laurent::monomial(L, L->one(), 1, ps);
    const Laurent t2 = t * t;
    const Laurent one = Laurent::constant(L, L->one(), ps);

    Laurent s = newton(
        Laurent::zero(L, ps),
        [&](const Laurent& S) { return S - t2 * eval_poly(frev, S); },
        [&](const Laurent& S, const Laurent& r) {
            return S - r * (one - t2 * eval_poly(dfrev, S)).inverse();
        });

    out.x = s.inverse();
    out.y = out.x.pow(g).shifted(-1); // y = x^g / t
    return out;
}

} // namespace

LocalData local_data(const Curve& curve, const Place& pl, int prec) {
    if (pl.is_infinity()) return at_infinity(curve, pl, prec);
    switch (pl.finite_type()) {
    case Place::FiniteType::Ramified:
        return finite_ramified(curve, pl, prec);
    default:
        return finite_unramified(curve, pl, prec);
    }
}

Laurent expand_at(const FunctionElement& h, const Place& pl, int n) {
    if (h.is_zero()) throw ContractViolation("expansion of the zero function");
    if (n < 1) throw ContractViolation("expansion needs n >= 1 terms");
    const Curve& curve = *h.curve();

    const long v = valuation(h, pl);
    long vc;
    if (pl.is_infinity()) vc = -2L * h.c().degree();
    else vc = static_cast<long>(pl.ram_index()) * ord_at(h.c(), pl.minpoly());
    const long vnum = v + vc;
    const long t_num = vnum + n, t_den = vc + n;

    int prec = static_cast<int>(std::max(t_num, t_den));
    if (pl.is_infinity())
        prec += 2 * (std::max({h.a().degree(), h.b().degree(), h.c().degree(), 0}) +
                     curve.genus() + 3);
    prec = std::max(prec, 4);

    for (int attempt = 0; attempt < 8; ++attempt, prec = 2 * prec + 8) {
        LocalData ld = local_data(curve, pl, prec);
        Laurent num = eval_poly(h.a(), ld.x) + eval_poly(h.b(), ld.x) * ld.y;
        Laurent den = eval_poly(h.c(), ld.x);
        if (num.is_zero_to_prec() || num.precision() < t_num) continue;
        if (den.is_zero_to_prec() || den.precision() < t_den) continue;
        if (num.valuation() != vnum || den.valuation() != vc)
            throw InternalError("expansion disagrees with the exact valuation");
        return (num * den.inverse()).truncated(static_cast<int>(v) + n);
    }
    throw InternalError("could not reach the requested expansion precision");
}

} // namespace hecc
