#include "hecc/h1.hpp"

#include <sstream>

#include "hecc/linalg.hpp"

namespace hecc {

H1Class::H1Class(Divisor ambient) : ambient_(std::move(ambient)) {}

H1Class::H1Class(Divisor ambient, TailMap tails, bool normalize)
    : ambient_(std::move(ambient)), tails_(std::move(tails)) {
    if (!normalize) return;
    TailMap kept;
    for (auto& [pl, tail] : tails_) {
        const long m = ambient_.mult_of(pl);
        Tail t;
        for (auto& [ord, c] : tail.terms)
            if (ord < -m && !c.is_zero()) t.terms.emplace(ord, c);
        if (!t.empty()) kept.emplace(pl, std::move(t));
    }
    tails_ = std::move(kept);
}

void H1Class::validate() const {
    for (const auto& [pl, tail] : tails_) {
        const long m = ambient_.mult_of(pl);
        ResFieldPtr rf = pl.residue_field(*ambient_.curve());
        bool has_forbidden = false;
        for (const auto& [ord, c] : tail.terms) {
            if (c.is_zero() || !c.field()->same_field(*rf))
                throw ContractViolation("malformed tail coefficient at " + pl.str());
            if (ord < -m) has_forbidden = true;
        }
        if (!has_forbidden)
            throw ContractViolation("tail at " + pl.str() + " has no forbidden-order term");
    }
}

bool H1Class::operator==(const H1Class& o) const {
    if (ambient_ != o.ambient_) return false;
    if (tails_.size() != o.tails_.size()) return false;
    auto it = o.tails_.begin();
    for (const auto& [pl, tail] : tails_) {
        if (!(pl == it->first) || tail.terms != it->second.terms) return false;
        ++it;
    }
    return true;
}

std::string H1Class::str() const {
    std::ostringstream out;
    out << "[";
    bool first = true;
    for (const auto& [pl, tail] : tails_) {
        if (!first) out << "; ";
        first = false;
        out << pl.str() << ": ";
        bool ft = true;
        for (const auto& [ord, c] : tail.terms) {
            if (!ft) out << " + ";
            ft = false;
            out << "(" << c.str() << ")*t^" << ord;
        }
    }
    out << "] over " << ambient_.str();
    return out.str();
}

ZeroClassResult is_zero_class(const H1Class& c) {
    c.validate();
    ZeroClassResult out;
    if (c.is_empty()) {
        out.zero = true;
        out.witness = FunctionElement::zero(c.ambient().curve());
        return out;
    }
    MLResult r = ml_solve(c.ambient(), c.tails());
    out.zero = r.solvable;
    out.witness = r.witness;
    return out;
}

int h1_dim_via_corank(const Divisor& d) {
    const CurvePtr& curve = d.curve();
    const int g = curve->genus();
    const Place inf = Place::infinity();
    const long n = std::max(1L, 2L * g - 1 - d.degree());
    const long m_inf = d.mult_of(inf);

    // L(D + N*inf) restricted to the forbidden tail orders at infinity:
    // image rank r gives h1(D) = N - r once h1(D + N*inf) = 0.
    RRSpace sp = rr_basis(d + Divisor::single(curve, inf, n));
    const long hi = -m_inf;      // exclusive
    const long lo = -m_inf - n;
    std::vector<Vec> rows;
    for (const FunctionElement& h : sp.basis) {
        const long v = valuation(h, inf);
        Vec row;
        if (v >= hi) {
            row.assign(static_cast<size_t>(n), FieldElem(curve->field(), 0));
        } else {
            Laurent s = expand_at(h, inf, static_cast<int>(hi - v));
            for (long e = lo; e < hi; ++e) {
                ResElem ce = e < v ? s.field()->zero() : s.coeff(static_cast<int>(e));
                row.push_back(ce.coords().front());
            }
        }
        rows.push_back(std::move(row));
    }
    const size_t rank_r = rref_basis(curve->field(), rows).size();
    return static_cast<int>(n - static_cast<long>(rank_r));
}

namespace {

// deterministic candidate places: support of D, then infinity, then degree-1
// places over small x-values
std::vector<Place> candidate_places(const Divisor& d) {
    const CurvePtr& curve = d.curve();
    const Field& F = curve->field();
    std::vector<Place> out = d.support(); // map order = canonical place order
    const auto push_unique = [&out](const Place& p) {
        for (const Place& q : out)
            if (q == p) return;
        out.push_back(p);
    };
    push_unique(Place::infinity());

    std::vector<FieldElem> xs;
    if (F.is_prime_field()) {
        const std::uint64_t cap = std::min<std::uint64_t>(F.p, 40);
        for (std::uint64_t v = 0; v < cap; ++v) xs.emplace_back(F, static_cast<long>(v));
    } else {
        xs.emplace_back(F, 0);
        for (long v = 1; v <= 12; ++v) {
            xs.emplace_back(F, -v);
            xs.emplace_back(F, v);
        }
    }
    for (const FieldElem& x0 : xs) {
        if (out.size() >= 48) break;
        for (const Place& p : places_above(*curve, x0))
            if (p.degree() == 1) push_unique(p);
    }
    return out;
}

} // namespace

H1Class nonzero_class(const Divisor& d, std::uint64_t seed) {
    if (h1(d) == 0)
        throw NoNonzeroClass("h1 = 0: the divisor carries no nonzero class");
    const CurvePtr& curve = d.curve();
    const int g = curve->genus();

    // candidates: (place, order) pairs, place-major, orders -1 down to -(2g+2),
    // unit coefficient; the seed offsets the starting point
    std::vector<Place> places = candidate_places(d);
    std::vector<std::pair<Place, int>> cands;
    for (const Place& pl : places)
        for (int k = 1; k <= 2 * g + 2; ++k) cands.emplace_back(pl, -k);

    const size_t total = cands.size();
    size_t tried = 0;
    for (size_t i = 0; i < total && tried < 100; ++i) {
        const auto& [pl, ord] = cands[(i + seed) % total];
        if (ord >= -d.mult_of(pl)) continue; // permitted order, normalizes away
        ResFieldPtr rf = pl.residue_field(*curve);
        Tail t;
        t.terms.emplace(ord, rf->one());
        TailMap tm;
        tm.emplace(pl, std::move(t));
        H1Class c(d, std::move(tm));
        ++tried;
        if (!is_zero_class(c).zero) return c;
    }
    throw SearchExhausted("no nonzero class found within the tail budget");
}

H1Class push_forward(const H1Class& c, const Divisor& d_prime) {
    if (!(d_prime - c.ambient()).is_effective())
        throw ContractViolation("push_forward needs D <= D'");
    return H1Class(d_prime, c.tails());
}

H1Class add_classes(const H1Class& a, const H1Class& b) {
    if (a.ambient() != b.ambient())
        throw ContractViolation("class addition needs a common ambient divisor");
    TailMap merged = a.tails();
    for (const auto& [pl, tail] : b.tails()) {
        Tail& t = merged[pl];
        for (const auto& [ord, c] : tail.terms) {
            auto [it, fresh] = t.terms.emplace(ord, c);
            if (!fresh) it->second = it->second + c;
        }
    }
    return H1Class(a.ambient(), std::move(merged));
}

} // namespace hecc
