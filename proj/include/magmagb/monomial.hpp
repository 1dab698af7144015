#ifndef MAGMAGB_MONOMIAL_HPP
#define MAGMAGB_MONOMIAL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "magmagb/error.hpp"

namespace mgb {

inline constexpr int kMaxVars = 16;
inline constexpr uint32_t kMaxExponent = 0xFFFF;

/// Dense exponent vector over at most kMaxVars variables; unused slots stay zero.
struct Mono {
    std::array<uint16_t, kMaxVars> e{};
    uint32_t deg = 0;

    static Mono one() { return Mono{}; }
    static Mono var(int idx, uint16_t exp = 1) {
        Mono m;
        m.e[idx] = exp;
        m.deg = exp;
        return m;
    }

    bool is_one() const { return deg == 0; }

    bool operator==(const Mono& rhs) const { return deg == rhs.deg && e == rhs.e; }

    Mono mul(const Mono& rhs) const {
        Mono r;
        for (int i = 0; i < kMaxVars; ++i) {
            uint32_t s = uint32_t(e[i]) + rhs.e[i];
            if (s > kMaxExponent)
                fail(Errc::Overflow, "exponent overflow");
            r.e[i] = static_cast<uint16_t>(s);
        }
        r.deg = deg + rhs.deg;
        return r;
    }

    bool divides(const Mono& rhs) const {
        if (deg > rhs.deg)
            return false;
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] > rhs.e[i])
                return false;
        return true;
    }

    /// this / rhs; caller guarantees divisibility.
    Mono div(const Mono& rhs) const {
        Mono r;
        for (int i = 0; i < kMaxVars; ++i)
            r.e[i] = static_cast<uint16_t>(e[i] - rhs.e[i]);
        r.deg = deg - rhs.deg;
        return r;
    }

    Mono lcm(const Mono& rhs) const {
        Mono r;
        uint32_t d = 0;
        for (int i = 0; i < kMaxVars; ++i) {
            r.e[i] = std::max(e[i], rhs.e[i]);
            d += r.e[i];
        }
        r.deg = d;
        return r;
    }

    bool coprime(const Mono& rhs) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] && rhs.e[i])
                return false;
        return true;
    }
};

enum class OrderKind { Lex, DegLex, DegRevLex };

/// A monomial order: kind plus a variable precedence (prec[0] = biggest variable).
struct MonomialOrder {
    OrderKind kind = OrderKind::DegRevLex;
    int nvars = 0;
    std::array<uint8_t, kMaxVars> prec{}; // permutation of 0..nvars-1

    static MonomialOrder make(OrderKind kind, int nvars) {
        if (nvars > kMaxVars)
            fail(Errc::Overflow, "too many variables");
        MonomialOrder o;
        o.kind = kind;
        o.nvars = nvars;
        for (int i = 0; i < nvars; ++i)
            o.prec[i] = static_cast<uint8_t>(i);
        return o;
    }

    static MonomialOrder make(OrderKind kind, const std::vector<uint8_t>& precedence) {
        MonomialOrder o = make(kind, static_cast<int>(precedence.size()));
        for (size_t i = 0; i < precedence.size(); ++i)
            o.prec[i] = precedence[i];
        return o;
    }

    bool operator==(const MonomialOrder&) const = default;

    /// <0, 0, >0 as m1 is below, equal to, above m2.
    int compare(const Mono& m1, const Mono& m2) const {
        switch (kind) {
        case OrderKind::Lex:
            return cmp_lex(m1, m2);
        case OrderKind::DegLex:
            if (m1.deg != m2.deg)
                return m1.deg < m2.deg ? -1 : 1;
            return cmp_lex(m1, m2);
        case OrderKind::DegRevLex:
            if (m1.deg != m2.deg)
                return m1.deg < m2.deg ? -1 : 1;
            // first difference scanning from the least variable: smaller exponent wins
            for (int k = nvars - 1; k >= 0; --k) {
                uint16_t a = m1.e[prec[k]], b = m2.e[prec[k]];
                if (a != b)
                    return a < b ? 1 : -1;
            }
            return 0;
        }
        return 0;
    }

    bool less(const Mono& m1, const Mono& m2) const { return compare(m1, m2) < 0; }

  private:
    int cmp_lex(const Mono& m1, const Mono& m2) const {
        for (int k = 0; k < nvars; ++k) {
            uint16_t a = m1.e[prec[k]], b = m2.e[prec[k]];
            if (a != b)
                return a < b ? -1 : 1;
        }
        return 0;
    }
};

std::string order_kind_str(OrderKind k);
OrderKind parse_order_kind(const std::string& text); // dp | Dp | lp

} // namespace mgb

#endif
