#ifndef MAGMAGB_FIELD_HPP
#define MAGMAGB_FIELD_HPP

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "magmagb/error.hpp"

namespace mgb {

enum class FieldKind { Rationals, PrimeField };

/// Runtime description of a coefficient field: Q, or GF(p) for a 31-bit prime p.
struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    uint32_t modulus = 0; // set iff kind == PrimeField

    bool operator==(const FieldSpec&) const = default;
};

/// Deterministic Miller-Rabin, valid for every 32-bit input.
bool is_prime_u32(uint32_t n);

/// Validates the modulus (primality, < 2^31) and builds the spec.
FieldSpec field_make(FieldKind kind, std::optional<uint32_t> modulus = std::nullopt);

FieldSpec parse_field_spec(const std::string& text); // "q" | "gf:P"
std::string field_spec_str(const FieldSpec& fs);

/// Exact rational arithmetic. Elements are always canonical: lowest terms,
/// positive denominator (GMP maintains this through mpq operations).
struct RationalField {
    using Elem = mpq_class;

    static FieldSpec spec() { return {FieldKind::Rationals, 0}; }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long v) const { return Elem(v); }
    Elem from_ratio(const mpz_class& num, const mpz_class& den) const {
        if (den == 0)
            fail(Errc::DivisionByZero, "rational with zero denominator");
        Elem r(num, den);
        r.canonicalize();
        return r;
    }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0)
            fail(Errc::DivisionByZero, "inverse of zero");
        return Elem(1) / a;
    }
    Elem div(const Elem& a, const Elem& b) const {
        if (b == 0)
            fail(Errc::DivisionByZero, "division by zero");
        return a / b;
    }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool is_one(const Elem& a) const { return a == 1; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    std::string str(const Elem& a) const {
        if (a.get_den() == 1)
            return a.get_num().get_str();
        return a.get_num().get_str() + "/" + a.get_den().get_str();
    }

    bool operator==(const RationalField&) const = default;
};

/// GF(p) with least non-negative residue representatives.
struct PrimeField {
    uint32_t p = 2;

    using Elem = uint32_t;

    explicit PrimeField(uint32_t modulus = 2) : p(modulus) {}

    FieldSpec spec() const { return {FieldKind::PrimeField, p}; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem from_int(long v) const {
        long r = v % static_cast<long>(p);
        if (r < 0)
            r += p;
        return static_cast<Elem>(r);
    }
    Elem from_ratio(const mpz_class& num, const mpz_class& den) const {
        return div(reduce(num), reduce(den));
    }
    Elem reduce(const mpz_class& v) const {
        mpz_class r = v % p;
        if (r < 0)
            r += p;
        return static_cast<Elem>(r.get_ui());
    }

    Elem add(Elem a, Elem b) const {
        uint64_t s = uint64_t(a) + b;
        return s >= p ? Elem(s - p) : Elem(s);
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : Elem(a + p - b); }
    Elem mul(Elem a, Elem b) const { return Elem(uint64_t(a) * b % p); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const {
        if (a == 0)
            fail(Errc::DivisionByZero, "inverse of zero");
        // extended Euclid on (a, p); p prime
        int64_t t = 0, newt = 1;
        int64_t r = p, newr = a;
        while (newr != 0) {
            int64_t q = r / newr;
            t = std::exchange(newt, t - q * newt);
            r = std::exchange(newr, r - q * newr);
        }
        if (t < 0)
            t += p;
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    bool is_zero(Elem a) const { return a == 0; }
    bool is_one(Elem a) const { return a == 1 % p; }
    bool eq(Elem a, Elem b) const { return a == b; }

    std::string str(Elem a) const { return std::to_string(a); }

    bool operator==(const PrimeField&) const = default;
};

template <class F>
concept CoefficientField = requires(const F f, const typename F::Elem a, const typename F::Elem b) {
    { f.zero() } -> std::same_as<typename F::Elem>;
    { f.one() } -> std::same_as<typename F::Elem>;
    { f.add(a, b) } -> std::same_as<typename F::Elem>;
    { f.sub(a, b) } -> std::same_as<typename F::Elem>;
    { f.mul(a, b) } -> std::same_as<typename F::Elem>;
    { f.neg(a) } -> std::same_as<typename F::Elem>;
    { f.inv(a) } -> std::same_as<typename F::Elem>;
    { f.div(a, b) } -> std::same_as<typename F::Elem>;
    { f.is_zero(a) } -> std::same_as<bool>;
    { f.is_one(a) } -> std::same_as<bool>;
    { f.eq(a, b) } -> std::same_as<bool>;
    { f.str(a) } -> std::same_as<std::string>;
    { f.spec() } -> std::same_as<FieldSpec>;
    { f.from_int(1L) } -> std::same_as<typename F::Elem>;
    { f.from_ratio(mpz_class(1), mpz_class(1)) } -> std::same_as<typename F::Elem>;
};

static_assert(CoefficientField<RationalField>);
static_assert(CoefficientField<PrimeField>);

/// Runs fn with the field object selected by the spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& fs, Fn&& fn) {
    if (fs.kind == FieldKind::Rationals)
        return fn(RationalField{});
    return fn(PrimeField{fs.modulus});
}

} // namespace mgb

#endif
