#include "magmagb/field.hpp"

namespace mgb {

namespace {

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t mod) {
    uint64_t r = 1;
    base %= mod;
    while (exp) {
        if (exp & 1)
            r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u32(uint32_t n) {
    if (n < 2)
        return false;
    for (uint32_t q : {2u, 3u, 5u, 7u}) {
        if (n == q)
            return true;
        if (n % q == 0)
            return false;
    }
    uint32_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // witnesses {2, 3, 5, 7} decide primality for all n < 3'215'031'751
    for (uint32_t a : {2u, 3u, 5u, 7u}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

FieldSpec field_make(FieldKind kind, std::optional<uint32_t> modulus) {
    if (kind == FieldKind::Rationals)
        return {FieldKind::Rationals, 0};
    if (!modulus)
        fail(Errc::NonPrimeModulus, "prime field requires a modulus");
    if (*modulus >= (1u << 31))
        fail(Errc::ModulusTooLarge, "modulus must fit in 31 bits");
    if (!is_prime_u32(*modulus))
        fail(Errc::NonPrimeModulus, "modulus " + std::to_string(*modulus) + " is not prime");
    return {FieldKind::PrimeField, *modulus};
}

FieldSpec parse_field_spec(const std::string& text) {
    if (text == "q" || text == "Q")
        return field_make(FieldKind::Rationals);
    if (text.rfind("gf:", 0) == 0) {
        const std::string rest = text.substr(3);
        if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
            fail(Errc::SyntaxError, "bad field spec '" + text + "'");
        unsigned long v = std::stoul(rest);
        if (v >= (1ul << 31))
            fail(Errc::ModulusTooLarge, "modulus must fit in 31 bits");
        return field_make(FieldKind::PrimeField, static_cast<uint32_t>(v));
    }
    fail(Errc::SyntaxError, "bad field spec '" + text + "' (expected q or gf:P)");
}

std::string field_spec_str(const FieldSpec& fs) {
    if (fs.kind == FieldKind::Rationals)
        return "q";
    return "gf:" + std::to_string(fs.modulus);
}

} // namespace mgb
