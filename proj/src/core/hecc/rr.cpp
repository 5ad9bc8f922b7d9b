#include "hecc/rr.hpp"

#include <algorithm>

#include "hecc/linalg.hpp"

namespace hecc {

int Tail::min_order() const {
    if (terms.empty()) throw ContractViolation("min_order of an empty tail");
    return terms.begin()->first;
}

Laurent Tail::to_laurent(const ResFieldPtr& rf) const {
    constexpr int kBig = 1 << 28;
    Laurent acc = Laurent::zero(rf, kBig);
    for (const auto& [ord, c] : terms)
        acc = acc + Laurent::monomial(rf, c, ord, kBig);
    return acc;
}

namespace {

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

struct Constraint {
    Place pl;
    long v_c = 0;       // valuation of the denominator c at pl
    long m = 0;         // multiplicity of pl in the ambient divisor
    const Tail* tail = nullptr;
};

// x-powers, y * x-powers and the denominator expanded at one place, all
// accurate to the requested absolute precision
struct MonomialTable {
    ResFieldPtr rf;
    std::vector<Laurent> xpow;
    std::vector<Laurent> ypow;
    Laurent c_series;

    MonomialTable(const Curve& curve, const Place& pl, int a_max, int b_max,
                  const Poly& c, long t_mono, long t_c)
        : c_series(nullptr, 0) {
        int prec = static_cast<int>(std::max({t_mono, t_c, 1L}));
        if (pl.is_infinity())
            prec += 2 * (std::max({a_max, b_max, c.degree(), 0}) + curve.genus() + 4);
        for (int attempt = 0;; ++attempt, prec = 2 * prec + 8) {
            if (attempt >= 10) throw InternalError("monomial table precision failure");
            LocalData ld = local_data(curve, pl, prec);
            rf = ld.rf;
            constexpr int kBig = 1 << 28;
            xpow.assign(1, Laurent::constant(rf, rf->one(), kBig));
            for (int j = 1; j <= a_max || j <= b_max; ++j) xpow.push_back(xpow.back() * ld.x);
            ypow.clear();
            for (int j = 0; j <= b_max; ++j) ypow.push_back(xpow[static_cast<size_t>(j)] * ld.y);
            c_series = eval_poly(c, ld.x);
            bool ok = c_series.precision() >= t_c;
            for (int j = 0; ok && j <= a_max; ++j)
                ok = xpow[static_cast<size_t>(j)].precision() >= t_mono;
            for (int j = 0; ok && j <= b_max; ++j)
                ok = ypow[static_cast<size_t>(j)].precision() >= t_mono;
            if (ok) return;
        }
    }
};

} // namespace

MLResult ml_solve(const Divisor& d, const TailMap& tails) {
    const CurvePtr& curve = d.curve();
    const Field& F = curve->field();
    const int g = curve->genus();
    const Place inf = Place::infinity();

    // merge divisor multiplicities with tail data
    std::map<Place, std::pair<long, const Tail*>> info;
    for (const auto& [pl, m] : d.terms()) info[pl] = {m, nullptr};
    for (const auto& [pl, tl] : tails) {
        if (tl.empty()) continue;
        auto [it, fresh] = info.emplace(pl, std::make_pair(0L, &tl));
        if (!fresh) it->second.second = &tl;
        const long m = it->second.first;
        ResFieldPtr rf = pl.residue_field(*curve);
        for (const auto& [ord, c] : tl.terms) {
            if (ord >= -m)
                throw ContractViolation("tail term at an order already permitted by the divisor");
            if (c.is_zero()) throw ContractViolation("zero tail coefficient");
            if (!c.field()->same_field(*rf))
                throw ContractViolation("tail coefficient in the wrong residue field");
        }
    }

    const auto cap_of = [](long m, const Tail* t) {
        return t ? std::max(m, static_cast<long>(-t->min_order())) : m;
    };

    // denominator c(x): one power per x-line prime, covering every capacity
    auto poly_less = [](const Poly& a, const Poly& b) { return a.cmp(b) < 0; };
    std::map<Poly, long, decltype(poly_less)> qexp(poly_less);
    for (const auto& [pl, mt] : info) {
        if (pl.is_infinity()) continue;
        const long cap = cap_of(mt.first, mt.second);
        if (cap <= 0) continue;
        const long e = pl.ram_index();
        const long k = (cap + e - 1) / e;
        auto [it, fresh] = qexp.emplace(pl.minpoly(), k);
        if (!fresh) it->second = std::max(it->second, k);
    }
    Poly c = Poly::from_long_coeffs(F, {1});
    for (const auto& [q, k] : qexp)
        for (long i = 0; i < k; ++i) c = c * q;
    const long degc = c.degree();

    // ansatz bounds at infinity (parity-exact, see v(x), v(y))
    long m_inf = 0;
    const Tail* tail_inf = nullptr;
    if (auto it = info.find(inf); it != info.end()) {
        m_inf = it->second.first;
        tail_inf = it->second.second;
    }
    const long cap_inf = cap_of(m_inf, tail_inf);
    const long a_max = floor_div(2 * degc + cap_inf, 2);
    const long b_max = floor_div(2 * degc + cap_inf - (2 * g + 1), 2);
    const size_t n_a = a_max >= 0 ? static_cast<size_t>(a_max) + 1 : 0;
    const size_t n_b = b_max >= 0 ? static_cast<size_t>(b_max) + 1 : 0;
    const size_t ncols = n_a + n_b;

    // constrained finite places: everything above a denominator prime, plus
    // support places with vanishing conditions or tails
    std::map<Place, Constraint> constrained;
    for (const auto& [q, k] : qexp) {
        for (const Place& pl : places_above(*curve, q)) {
            Constraint cs;
            cs.pl = pl;
            cs.v_c = pl.ram_index() * k;
            if (auto it = info.find(pl); it != info.end()) {
                cs.m = it->second.first;
                cs.tail = it->second.second;
            }
            constrained.emplace(pl, cs);
        }
    }
    for (const auto& [pl, mt] : info) {
        if (pl.is_infinity() || constrained.count(pl)) continue;
        Constraint cs;
        cs.pl = pl;
        cs.v_c = 0;
        cs.m = mt.first;
        cs.tail = mt.second;
        constrained.emplace(pl, cs);
    }

    // assemble rows
    std::vector<Vec> rows;
    std::vector<FieldElem> rhs;
    const auto add_equation = [&](const std::vector<ResElem>& lhs, const ResElem& r) {
        const auto rcs = r.coords();
        std::vector<std::vector<FieldElem>> lcs;
        lcs.reserve(lhs.size());
        for (const auto& e : lhs) lcs.push_back(e.coords());
        for (size_t k = 0; k < rcs.size(); ++k) {
            Vec row;
            row.reserve(ncols);
            for (const auto& cs : lcs) row.push_back(cs[k]);
            rows.push_back(std::move(row));
            rhs.push_back(rcs[k]);
        }
    };

    for (const auto& [pl, cs] : constrained) {
        const long r = cs.v_c - cs.m; // rows cover A-orders [0, r)
        if (r <= 0) continue;
        const long t_c = cs.tail ? r - std::min(0, cs.tail->min_order()) : r;
        MonomialTable tab(*curve, pl, static_cast<int>(a_max), static_cast<int>(b_max), c, r, t_c);
        Laurent rhs_series = Laurent::zero(tab.rf, 1 << 28);
        if (cs.tail) rhs_series = tab.c_series * cs.tail->to_laurent(tab.rf);
        for (long nu = 0; nu < r; ++nu) {
            std::vector<ResElem> lhs;
            lhs.reserve(ncols);
            for (size_t j = 0; j < n_a; ++j)
                lhs.push_back(tab.xpow[j].coeff(static_cast<int>(nu)));
            for (size_t j = 0; j < n_b; ++j)
                lhs.push_back(tab.ypow[j].coeff(static_cast<int>(nu)));
            add_equation(lhs, rhs_series.coeff(static_cast<int>(nu)));
        }
    }

    // rows at infinity only when a tail demands orders beyond the ansatz bound
    if (tail_inf) {
        const long lo = -cap_inf - 2 * degc;           // deepest matched A-order
        const long hi = -m_inf - 2 * degc;             // exclusive upper A-order
        const long t_mono = hi;
        const long t_c = hi - std::min(0, tail_inf->min_order());
        MonomialTable tab(*curve, inf, static_cast<int>(a_max), static_cast<int>(b_max), c, t_mono, t_c);
        Laurent rhs_series = tab.c_series * tail_inf->to_laurent(tab.rf);
        for (long nu = lo; nu < hi; ++nu) {
            std::vector<ResElem> lhs;
            lhs.reserve(ncols);
            for (size_t j = 0; j < n_a; ++j)
                lhs.push_back(tab.xpow[j].coeff(static_cast<int>(nu)));
            for (size_t j = 0; j < n_b; ++j)
                lhs.push_back(tab.ypow[j].coeff(static_cast<int>(nu)));
            add_equation(lhs, rhs_series.coeff(static_cast<int>(nu)));
        }
    }

    Mat A(F, rows.size(), ncols);
    Vec b(rows.size(), FieldElem(F, 0));
    for (size_t i = 0; i < rows.size(); ++i) {
        for (size_t j = 0; j < ncols; ++j) A.at(i, j) = rows[i][j];
        b[i] = rhs[i];
    }
    LinearSolution sol = solve_linear(A, b);

    const auto to_function = [&](const Vec& v) {
        std::vector<FieldElem> ac(v.begin(), v.begin() + static_cast<long>(n_a));
        std::vector<FieldElem> bc(v.begin() + static_cast<long>(n_a), v.end());
        return FunctionElement(curve, Poly(F, ac), Poly(F, bc), c);
    };

    MLResult out;
    out.solvable = sol.solvable;
    if (sol.solvable) out.witness = to_function(sol.particular);
    for (const Vec& v : sol.kernel) out.kernel.push_back(to_function(v));
    return out;
}

RRSpace rr_basis(const Divisor& d) {
    MLResult r = ml_solve(d, {});
    return RRSpace{d, std::move(r.kernel)};
}

int h0(const Divisor& d) {
    return rr_basis(d).dim();
}

int h1(const Divisor& d) {
    return h0(canonical_divisor(d.curve()) - d);
}

LinEquivResult is_linearly_equivalent(const Divisor& d1, const Divisor& d2) {
    if (!d1.curve()->same_curve(*d2.curve()))
        throw ContractViolation("linear equivalence across curves");
    LinEquivResult out;
    if (d1.degree() != d2.degree()) return out;
    if (d1 == d2) {
        out.equivalent = true;
        out.witness = std::make_shared<FunctionElement>(FunctionElement::one(d1.curve()));
        return out;
    }
    // h in L(D1 - D2) with deg(D1 - D2) = 0 forces div(h) = D2 - D1 exactly
    RRSpace sp = rr_basis(d1 - d2);
    if (sp.basis.empty()) return out;
    const FunctionElement& w = sp.basis.front();
    if (divisor_of(w) != d2 - d1)
        throw InternalError("linear equivalence witness has the wrong divisor");
    out.equivalent = true;
    out.witness = std::make_shared<FunctionElement>(w);
    return out;
}

} // namespace hecc
