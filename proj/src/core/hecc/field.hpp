#ifndef HECC_FIELD_HPP
#define HECC_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "hecc/errors.hpp"

namespace hecc {

// Base field of a curve: the rationals, or a prime field F_p with an odd
// machine-word prime p. Curves in characteristic 2 are rejected upstream.
struct Field {
    enum class Kind { Rationals, Prime };

    Kind kind = Kind::Rationals;
    std::uint64_t p = 0; // modulus, Prime only

    static Field rationals() { return Field{Kind::Rationals, 0}; }
    static Field prime(std::uint64_t p); // checks primality, p odd, p < 2^62

    bool is_prime_field() const { return kind == Kind::Prime; }
    bool operator==(const Field& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    std::string describe() const; // "Q" or "Fp:<p>"
    static Field parse(const std::string& text);
};

bool is_prime_u64(std::uint64_t n);

// Immutable exact field element. Rationals are kept canonical (lowest terms,
// positive denominator) by GMP; prime-field values are reduced to [0, p).
class FieldElem {
public:
    FieldElem() = default; // zero over Q
    FieldElem(const Field& f, long v);
    FieldElem(const Field& f, const mpz_class& v);
    static FieldElem from_rational(const mpq_class& q);
    static FieldElem from_ratio(const mpz_class& num, const mpz_class& den);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const; // throws on zero divisor
    FieldElem operator-() const;
    FieldElem inverse() const;

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    // Canonical total order used for deterministic sorting (value order over
    // Q, representative order over F_p). Not an algebraic order.
    int cmp(const FieldElem& o) const;

    const mpq_class& rational() const; // Rationals only
    std::uint64_t residue() const;     // Prime only

    // Exact square root when the element is a square; true iff it is one.
    bool sqrt(FieldElem& out) const;

    std::string str() const; // "n" or "n/d"; residue as decimal

private:
    Field field_ = Field::rationals();
    mpq_class q_ = 0;       // Rationals payload
    std::uint64_t r_ = 0;   // Prime payload
    void check_same(const FieldElem& o) const;
};

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p);

} // namespace hecc

#endif
