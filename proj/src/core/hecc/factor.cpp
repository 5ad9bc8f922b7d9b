#include "hecc/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace hecc {

namespace {

// deterministic splitmix64 stream for equal-degree splitting
struct Rng {
    std::uint64_t s = 0x9e3779b97f4a7c15ull;
    std::uint64_t next() {
        std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m) {
    return (a * b) % m;
}

Poly poly_powmod(const Poly& a, const mpz_class& e, const Poly& m) {
    const Field& F = a.field();
    Poly r = Poly::from_long_coeffs(F, {1});
    Poly base = a % m;
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) r = poly_mulmod(r, base, m);
        base = poly_mulmod(base, base, m);
    }
    return r;
}

// ---- F_p machinery ----

Poly pth_root_fp(const Poly& f) {
    // over F_p the Frobenius fixes coefficients, so just compress exponents
    const Field& F = f.field();
    const std::uint64_t p = F.p;
    std::vector<FieldElem> c;
    for (int i = 0; i * static_cast<long long>(p) <= f.degree(); ++i)
        c.push_back(f.coeff(i * static_cast<int>(p)));
    return Poly(F, std::move(c));
}

void squarefree_decomp_fp(const Poly& f, int outer_mult, std::vector<std::pair<Poly, int>>& out) {
    const Field& F = f.field();
    const int p = static_cast<int>(F.p);
    Poly d = f.derivative();
    if (d.is_zero()) {
        squarefree_decomp_fp(pth_root_fp(f), outer_mult * p, out);
        return;
    }
    Poly c = gcd(f, d);
    Poly w = (f / c).monic();
    int i = 1;
    while (w.degree() > 0) {
        Poly y = gcd(w, c);
        Poly z = (w / y).monic();
        if (z.degree() > 0) out.emplace_back(z, i * outer_mult);
        w = y;
        c = (c / y).monic();
        ++i;
    }
    if (c.degree() > 0) squarefree_decomp_fp(c, outer_mult * p, out);
}

std::vector<Poly> equal_degree_fp(const Poly& f, int d, Rng& rng) {
    const Field& F = f.field();
    if (f.degree() == d) return {f.monic()};
    const mpz_class q = [&] {
        mpz_class v;
        mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(F.p), static_cast<unsigned long>(d));
        return v;
    }();
    const mpz_class e = (q - 1) / 2;
    for (;;) {
        std::vector<FieldElem> rc;
        for (int i = 0; i < f.degree(); ++i)
            rc.emplace_back(F, static_cast<long>(rng.next() % F.p));
        Poly r(F, std::move(rc));
        if (r.degree() < 1) continue;
        Poly g = gcd(r, f);
        if (g.degree() == 0) {
            Poly s = poly_powmod(r, e, f) - Poly::from_long_coeffs(F, {1});
            g = gcd(s, f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            std::vector<Poly> left = equal_degree_fp(g, d, rng);
            std::vector<Poly> right = equal_degree_fp((f / g).monic(), d, rng);
            left.insert(left.end(), right.begin(), right.end());
            return left;
        }
    }
}

std::vector<Poly> factor_fp_squarefree(const Poly& f0) {
    const Field& F = f0.field();
    Poly f = f0.monic();
    std::vector<Poly> out;
    Rng rng;
    // distinct-degree pass
    Poly x = Poly::x(F);
    Poly h = x % f;
    Poly fstar = f;
    int i = 1;
    while (fstar.degree() >= 2 * i) {
        h = poly_powmod(h, mpz_class(static_cast<unsigned long>(F.p)), fstar);
        Poly g = gcd(fstar, h - x);
        if (g.degree() > 0) {
            for (Poly& irred : equal_degree_fp(g, i, rng)) out.push_back(std::move(irred));
            fstar = (fstar / g).monic();
            h = h % fstar;
        }
        ++i;
    }
    if (fstar.degree() > 0) out.push_back(fstar);
    return out;
}

std::vector<PolyFactor> factor_fp(const Poly& f) {
    std::vector<std::pair<Poly, int>> sqf;
    squarefree_decomp_fp(f.monic(), 1, sqf);
    std::vector<PolyFactor> out;
    for (auto& [part, mult] : sqf)
        for (Poly& irred : factor_fp_squarefree(part)) out.push_back({std::move(irred), mult});
    return out;
}

// ---- rationals: Zassenhaus with a monicizing substitution ----

struct ZPoly { // ascending, trimmed
    std::vector<mpz_class> c;
    int degree() const { return static_cast<int>(c.size()) - 1; }
    void trim() { while (!c.empty() && c.back() == 0) c.pop_back(); }
};

ZPoly zpoly_from_rational(const Poly& f) {
    mpz_class den = 1;
    for (int i = 0; i <= f.degree(); ++i)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), f.coeff(i).rational().get_den().get_mpz_t());
    ZPoly z;
    for (int i = 0; i <= f.degree(); ++i) {
        mpq_class q = f.coeff(i).rational() * den;
        z.c.push_back(q.get_num());
    }
    mpz_class g = 0;
    for (const auto& v : z.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g != 0)
        for (auto& v : z.c) v /= g;
    if (!z.c.empty() && z.c.back() < 0)
        for (auto& v : z.c) v = -v;
    return z;
}

Poly zpoly_to_monic_q(const ZPoly& z) {
    const Field F = Field::rationals();
    std::vector<FieldElem> c;
    for (const auto& v : z.c) c.push_back(FieldElem::from_ratio(v, z.c.back()));
    return Poly(F, std::move(c));
}

ZPoly zpoly_primitive(ZPoly z) {
    z.trim();
    mpz_class g = 0;
    for (const auto& v : z.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g != 0)
        for (auto& v : z.c) v /= g;
    if (!z.c.empty() && z.c.back() < 0)
        for (auto& v : z.c) v = -v;
    return z;
}

ZPoly zpoly_mul_mod(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    ZPoly r;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = (r.c[i + j] + a.c[i] * b.c[j]) % m;
    r.trim();
    return r;
}

ZPoly zpoly_sub_mod(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    ZPoly r;
    r.c.assign(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) {
        mpz_class av = i < a.c.size() ? a.c[i] : 0;
        mpz_class bv = i < b.c.size() ? b.c[i] : 0;
        r.c[i] = ((av - bv) % m + m) % m;
    }
    r.trim();
    return r;
}

ZPoly zpoly_add_mod(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    ZPoly r;
    r.c.assign(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) {
        mpz_class av = i < a.c.size() ? a.c[i] : 0;
        mpz_class bv = i < b.c.size() ? b.c[i] : 0;
        r.c[i] = (av + bv) % m;
    }
    r.trim();
    return r;
}

// division by a monic divisor, coefficients mod m
void zpoly_divrem_monic_mod(const ZPoly& a, const ZPoly& d, const mpz_class& m,
                            ZPoly& q, ZPoly& r) {
    r = a;
    q.c.clear();
    if (d.c.empty() || d.c.back() != 1) throw InternalError("monic divisor expected");
    const int dd = d.degree();
    if (r.degree() >= dd) q.c.assign(static_cast<size_t>(r.degree() - dd) + 1, 0);
    while (r.degree() >= dd) {
        const int k = r.degree() - dd;
        mpz_class f = r.c.back() % m;
        q.c[static_cast<size_t>(k)] = f;
        for (int i = 0; i <= dd; ++i) {
            mpz_class v = (r.c[static_cast<size_t>(i + k)] - f * d.c[static_cast<size_t>(i)]) % m;
            r.c[static_cast<size_t>(i + k)] = (v + m) % m;
        }
        r.trim();
        if (static_cast<int>(r.c.size()) - 1 >= dd + k) throw InternalError("divrem did not reduce");
    }
    q.trim();
    r.trim();
}

ZPoly zpoly_reduce(const ZPoly& a, const mpz_class& m) {
    ZPoly r = a;
    for (auto& v : r.c) v = ((v % m) + m) % m;
    r.trim();
    return r;
}

ZPoly from_poly_fp(const Poly& f) {
    ZPoly z;
    for (int i = 0; i <= f.degree(); ++i)
        z.c.push_back(mpz_class(static_cast<unsigned long>(f.coeff(i).residue())));
    return z;
}

// quadratic Hensel step: (f = g*h, s*g + t*h = 1) mod m -> same mod m^2
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const mpz_class& m) {
    const mpz_class m2 = m * m;
    ZPoly e = zpoly_sub_mod(f, zpoly_mul_mod(g, h, m2), m2);
    ZPoly q, r;
    zpoly_divrem_monic_mod(zpoly_mul_mod(s, e, m2), h, m2, q, r);
    ZPoly g1 = zpoly_add_mod(g, zpoly_add_mod(zpoly_mul_mod(t, e, m2), zpoly_mul_mod(q, g, m2), m2), m2);
    ZPoly h1 = zpoly_add_mod(h, r, m2);
    ZPoly one;
    one.c = {mpz_class(1)};
    ZPoly b = zpoly_sub_mod(
        zpoly_add_mod(zpoly_mul_mod(s, g1, m2), zpoly_mul_mod(t, h1, m2), m2), one, m2);
    ZPoly c, d;
    zpoly_divrem_monic_mod(zpoly_mul_mod(s, b, m2), h1, m2, c, d);
    ZPoly s1 = zpoly_sub_mod(s, d, m2);
    ZPoly t1 = zpoly_sub_mod(t, zpoly_add_mod(zpoly_mul_mod(t, b, m2), zpoly_mul_mod(c, g1, m2), m2), m2);
    g = g1; h = h1; s = s1; t = t1;
}

// lift the modular factorization of a monic squarefree f to modulus >= target
std::vector<ZPoly> hensel_lift_tree(const ZPoly& f, const std::vector<Poly>& modfactors,
                                    std::uint64_t p, const mpz_class& target, mpz_class& modulus_out) {
    if (modfactors.size() == 1) {
        modulus_out = target; // single factor: f itself, exact at any modulus
        return {f};
    }
    const Field Fp = Field::prime(p);
    const size_t half = modfactors.size() / 2;
    Poly gp = Poly::from_long_coeffs(Fp, {1}), hp = gp;
    for (size_t i = 0; i < half; ++i) gp = gp * modfactors[i];
    for (size_t i = half; i < modfactors.size(); ++i) hp = hp * modfactors[i];
    Poly sp(Fp), tp(Fp);
    Poly g0 = gcd_ext(gp, hp, sp, tp);
    if (g0.degree() != 0) throw InternalError("modular factors not coprime");

    ZPoly g = from_poly_fp(gp), h = from_poly_fp(hp);
    ZPoly s = from_poly_fp(sp), t = from_poly_fp(tp);
    mpz_class m(static_cast<unsigned long>(p));
    while (m < target) {
        hensel_step(f, g, h, s, t, m);
        m = m * m;
    }
    modulus_out = m;
    mpz_class sub_mod;
    std::vector<Poly> left(modfactors.begin(), modfactors.begin() + static_cast<long>(half));
    std::vector<Poly> right(modfactors.begin() + static_cast<long>(half), modfactors.end());
    std::vector<ZPoly> lf = hensel_lift_tree(g, left, p, m, sub_mod);
    std::vector<ZPoly> rf = hensel_lift_tree(h, right, p, m, sub_mod);
    for (auto& v : lf) v = zpoly_reduce(v, m);
    for (auto& v : rf) v = zpoly_reduce(v, m);
    lf.insert(lf.end(), rf.begin(), rf.end());
    return lf;
}

mpz_class symmetric(const mpz_class& v, const mpz_class& m) {
    mpz_class r = ((v % m) + m) % m;
    if (r * 2 > m) r -= m;
    return r;
}

bool zpoly_divides(const ZPoly& d, const ZPoly& a) {
    // exact division over Z, monic d
    ZPoly r = a;
    const int dd = d.degree();
    if (dd < 0) return false;
    while (r.degree() >= dd) {
        mpz_class f = r.c.back();
        const int k = r.degree() - dd;
        for (int i = 0; i <= dd; ++i)
            r.c[static_cast<size_t>(i + k)] -= f * d.c[static_cast<size_t>(i)];
        r.trim();
    }
    return r.c.empty();
}

ZPoly zpoly_exact_div(const ZPoly& a, const ZPoly& d) {
    ZPoly q, r = a;
    const int dd = d.degree();
    q.c.assign(static_cast<size_t>(std::max(r.degree() - dd, -1)) + 1, 0);
    while (r.degree() >= dd) {
        mpz_class f = r.c.back();
        const int k = r.degree() - dd;
        q.c[static_cast<size_t>(k)] = f;
        for (int i = 0; i <= dd; ++i)
            r.c[static_cast<size_t>(i + k)] -= f * d.c[static_cast<size_t>(i)];
        r.trim();
    }
    if (!r.c.empty()) throw InternalError("inexact division");
    q.trim();
    return q;
}

// monic squarefree integer polynomial -> monic irreducible integer factors
std::vector<ZPoly> factor_z_monic_squarefree(const ZPoly& F) {
    if (F.degree() == 1) return {F};

    // pick a prime keeping F squarefree
    std::uint64_t p = 0;
    Poly fp_poly;
    for (std::uint64_t cand = 1000003;; cand += 2) {
        if (!is_prime_u64(cand)) continue;
        const Field Fp = Field::prime(cand);
        std::vector<FieldElem> c;
        for (const auto& v : F.c) c.emplace_back(Fp, v);
        Poly red(Fp, std::move(c));
        if (red.degree() != F.degree()) continue;
        if (!is_squarefree(red)) continue;
        p = cand;
        fp_poly = red.monic();
        break;
    }

    std::vector<Poly> modfactors = factor_fp_squarefree(fp_poly);
    std::sort(modfactors.begin(), modfactors.end(),
              [](const Poly& a, const Poly& b) { return a.cmp(b) < 0; });
    if (modfactors.size() == 1) return {F};

    // Mignotte-style bound: |coeff of any monic factor| <= 2^n * ||F||_2
    const int n = F.degree();
    mpz_class norm2 = 0;
    for (const auto& v : F.c) norm2 += v * v;
    mpz_class b = sqrt(norm2) + 1;
    mpz_class bound = b << n;
    mpz_class target = 2 * bound + 1;

    mpz_class modulus;
    std::vector<ZPoly> lifted = hensel_lift_tree(F, modfactors, p, target, modulus);

    // subset recombination
    std::vector<ZPoly> out;
    ZPoly rem = F;
    std::vector<size_t> live(lifted.size());
    for (size_t i = 0; i < live.size(); ++i) live[i] = i;

    auto try_subsets = [&](size_t size, auto&& self, std::vector<size_t>& pick, size_t start) -> bool {
        if (pick.size() == size) {
            ZPoly cand;
            cand.c = {mpz_class(1)};
            for (size_t idx : pick) cand = zpoly_mul_mod(cand, lifted[live[idx]], modulus);
            for (auto& v : cand.c) v = symmetric(v, modulus);
            cand.trim();
            if (!cand.c.empty() && cand.c.back() == 1 && zpoly_divides(cand, rem)) {
                out.push_back(cand);
                rem = zpoly_exact_div(rem, cand);
                std::vector<size_t> next;
                for (size_t i = 0; i < live.size(); ++i)
                    if (std::find(pick.begin(), pick.end(), i) == pick.end())
                        next.push_back(live[i]);
                live = next;
                return true;
            }
            return false;
        }
        for (size_t i = start; i < live.size(); ++i) {
            pick.push_back(i);
            if (self(size, self, pick, i + 1)) { pick.pop_back(); return true; }
            pick.pop_back();
        }
        return false;
    };

    for (size_t size = 1; !live.empty() && size <= live.size() / 2;) {
        std::vector<size_t> pick;
        if (try_subsets(size, try_subsets, pick, 0)) continue; // retry same size
        ++size;
    }
    if (rem.degree() > 0) out.push_back(rem);
    return out;
}

std::vector<std::pair<Poly, int>> squarefree_decomp_q(const Poly& f) {
    std::vector<std::pair<Poly, int>> out;
    Poly c = gcd(f, f.derivative());
    Poly w = (f / c).monic();
    int i = 1;
    while (w.degree() > 0) {
        Poly y = gcd(w, c);
        Poly z = (w / y).monic();
        if (z.degree() > 0) out.emplace_back(z, i);
        w = y;
        c = (c / y).monic();
        ++i;
    }
    return out;
}

std::vector<PolyFactor> factor_q(const Poly& f) {
    std::vector<PolyFactor> out;
    for (auto& [part, mult] : squarefree_decomp_q(f.monic())) {
        ZPoly z = zpoly_from_rational(part);
        const mpz_class L = z.c.back();
        // monicize G(x) = L^(n-1) * part(x/L)
        ZPoly G;
        const int n = z.degree();
        for (int j = 0; j <= n; ++j) {
            mpz_class pw;
            mpz_pow_ui(pw.get_mpz_t(), L.get_mpz_t(), static_cast<unsigned long>(n - 1 - j >= 0 ? n - 1 - j : 0));
            G.c.push_back(n - 1 - j >= 0 ? z.c[static_cast<size_t>(j)] * pw
                                         : z.c[static_cast<size_t>(j)] / L);
        }
        G.trim();
        for (ZPoly& H : factor_z_monic_squarefree(G)) {
            // map back through x -> L*x and take the primitive part
            ZPoly M;
            mpz_class pw = 1;
            for (int j = 0; j <= H.degree(); ++j) {
                M.c.push_back(H.c[static_cast<size_t>(j)] * pw);
                pw *= L;
            }
            out.push_back({zpoly_to_monic_q(zpoly_primitive(M)), mult});
        }
    }
    return out;
}

} // namespace

std::vector<PolyFactor> factor(const Poly& f) {
    if (f.is_zero()) throw ContractViolation("factor of zero polynomial");
    if (f.degree() < 1) return {};
    std::vector<PolyFactor> out =
        f.field().is_prime_field() ? factor_fp(f) : factor_q(f);
    std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
        return a.p.cmp(b.p) < 0;
    });
    return out;
}

bool is_irreducible(const Poly& f) {
    if (f.is_zero() || f.degree() < 1) return false;
    const auto fs = factor(f);
    return fs.size() == 1 && fs[0].mult == 1;
}

} // namespace hecc
