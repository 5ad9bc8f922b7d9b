#include "hecc/field.hpp"

#include <sstream>

namespace hecc {

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    if (s >= p || s < a) s -= p;
    return s;
}

std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + (p - b);
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mod_mul(r, a, p);
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw ContractViolation("division by zero in F_p");
    // p is prime, so Fermat works and avoids signed-overflow bookkeeping
    return mod_pow(a % p, p - 2, p);
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // deterministic Miller-Rabin base set for 64-bit inputs
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = mod_pow(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mod_mul(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (p == 2) throw ValidationError("characteristic 2 is not supported");
    if (p >= (1ull << 62)) throw ValidationError("prime modulus must be below 2^62");
    if (!is_prime_u64(p)) throw ValidationError("modulus " + std::to_string(p) + " is not prime");
    return Field{Kind::Prime, p};
}

std::string Field::describe() const {
    if (kind == Kind::Rationals) return "Q";
    return "Fp:" + std::to_string(p);
}

Field Field::parse(const std::string& text) {
    if (text == "Q" || text == "q") return rationals();
    if (text.rfind("Fp:", 0) == 0 || text.rfind("fp:", 0) == 0) {
        const std::string num = text.substr(3);
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad prime in field descriptor '" + text + "'");
        return prime(std::stoull(num));
    }
    throw ParseError("unknown field descriptor '" + text + "' (expected Q or Fp:<prime>)");
}

FieldElem::FieldElem(const Field& f, long v) : field_(f) {
    if (f.is_prime_field()) {
        long m = v % static_cast<long>(f.p);
        if (m < 0) m += static_cast<long>(f.p);
        r_ = static_cast<std::uint64_t>(m);
    } else {
        q_ = v;
    }
}

FieldElem::FieldElem(const Field& f, const mpz_class& v) : field_(f) {
    if (f.is_prime_field()) {
        mpz_class m = v % mpz_class(static_cast<unsigned long>(f.p));
        if (m < 0) m += static_cast<unsigned long>(f.p);
        r_ = mpz_get_ui(m.get_mpz_t());
    } else {
        q_ = v;
    }
}

FieldElem FieldElem::from_rational(const mpq_class& q) {
    FieldElem e;
    e.field_ = Field::rationals();
    e.q_ = q;
    e.q_.canonicalize();
    return e;
}

FieldElem FieldElem::from_ratio(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw ContractViolation("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return from_rational(q);
}

void FieldElem::check_same(const FieldElem& o) const {
    if (field_ != o.field_) throw ContractViolation("mixed base fields in arithmetic");
}

bool FieldElem::is_zero() const {
    return field_.is_prime_field() ? r_ == 0 : q_ == 0;
}

bool FieldElem::is_one() const {
    return field_.is_prime_field() ? r_ == 1 : q_ == 1;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_same(o);
    FieldElem e;
    e.field_ = field_;
    if (field_.is_prime_field()) e.r_ = mod_add(r_, o.r_, field_.p);
    else { e.q_ = q_ + o.q_; }
    return e;
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    check_same(o);
    FieldElem e;
    e.field_ = field_;
    if (field_.is_prime_field()) e.r_ = mod_sub(r_, o.r_, field_.p);
    else { e.q_ = q_ - o.q_; }
    return e;
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_same(o);
    FieldElem e;
    e.field_ = field_;
    if (field_.is_prime_field()) e.r_ = mod_mul(r_, o.r_, field_.p);
    else { e.q_ = q_ * o.q_; }
    return e;
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
    return *this * o.inverse();
}

FieldElem FieldElem::operator-() const {
    FieldElem e;
    e.field_ = field_;
    if (field_.is_prime_field()) e.r_ = r_ == 0 ? 0 : field_.p - r_;
    else e.q_ = -q_;
    return e;
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw ContractViolation("inverse of zero");
    FieldElem e;
    e.field_ = field_;
    if (field_.is_prime_field()) e.r_ = mod_inv(r_, field_.p);
    else e.q_ = 1 / q_;
    return e;
}

bool FieldElem::operator==(const FieldElem& o) const {
    if (field_ != o.field_) return false;
    return field_.is_prime_field() ? r_ == o.r_ : q_ == o.q_;
}

int FieldElem::cmp(const FieldElem& o) const {
    check_same(o);
    if (field_.is_prime_field()) return r_ < o.r_ ? -1 : (r_ > o.r_ ? 1 : 0);
    return ::cmp(q_, o.q_);
}

const mpq_class& FieldElem::rational() const {
    if (field_.is_prime_field()) throw ContractViolation("rational() on prime-field element");
    return q_;
}

std::uint64_t FieldElem::residue() const {
    if (!field_.is_prime_field()) throw ContractViolation("residue() on rational element");
    return r_;
}

bool FieldElem::sqrt(FieldElem& out) const {
    if (field_.is_prime_field()) {
        const std::uint64_t p = field_.p;
        if (r_ == 0) { out = FieldElem(field_, 0); return true; }
        if (mod_pow(r_, (p - 1) / 2, p) != 1) return false;
        // Tonelli-Shanks
        std::uint64_t q = p - 1;
        int s = 0;
        while ((q & 1) == 0) { q >>= 1; ++s; }
        std::uint64_t z = 2;
        while (mod_pow(z, (p - 1) / 2, p) != p - 1) ++z;
        std::uint64_t m = s, c = mod_pow(z, q, p);
        std::uint64_t t = mod_pow(r_, q, p), rr = mod_pow(r_, (q + 1) / 2, p);
        while (t != 1) {
            std::uint64_t i = 0, tt = t;
            while (tt != 1) { tt = mod_mul(tt, tt, p); ++i; }
            std::uint64_t b = mod_pow(c, 1ull << (m - i - 1), p);
            m = i;
            c = mod_mul(b, b, p);
            t = mod_mul(t, c, p);
            rr = mod_mul(rr, b, p);
        }
        out = FieldElem(field_, mpz_class(static_cast<unsigned long>(rr)));
        return true;
    }
    if (q_ < 0) return false;
    mpz_class num = q_.get_num(), den = q_.get_den();
    mpz_class sn, rn, sd, rd;
    mpz_sqrtrem(sn.get_mpz_t(), rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrtrem(sd.get_mpz_t(), rd.get_mpz_t(), den.get_mpz_t());
    if (rn != 0 || rd != 0) return false;
    out = from_ratio(sn, sd);
    return true;
}

std::string FieldElem::str() const {
    if (field_.is_prime_field()) return std::to_string(r_);
    return q_.get_str();
}

} // namespace hecc
