#ifndef MAGMAGB_POLY_TEXT_HPP
#define MAGMAGB_POLY_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "magmagb/poly.hpp"

namespace mgb {

// Polynomial text grammar (one polynomial):
//   poly    := [sign] term { sign term }
//   term    := number [ "*" factors ] | factors
//   factors := factor { "*" factor }
//   factor  := varname [ "^" uint ]
//   number  := uint [ "/" uint ]
// Variable names are matched against the ring's names and aliases, longest
// match first. Whitespace is free between tokens.
template <CoefficientField F>
Poly<F> parse_poly(std::string_view text, const RingPtr<F>& ring) {
    struct Cursor {
        std::string_view s;
        size_t pos = 0;
        void ws() {
            while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t'))
                ++pos;
        }
        bool eof() {
            ws();
            return pos >= s.size();
        }
        char peek() { return s[pos]; }
        [[noreturn]] void die(const std::string& msg) const {
            fail(Errc::SyntaxError, msg + " at position " + std::to_string(pos));
        }
    } c{text};

    // variable names, longest first, so "l1" wins over "l"
    struct Name {
        std::string text;
        int idx;
    };
    std::vector<Name> names;
    for (int i = 0; i < ring->nvars(); ++i) {
        names.push_back({ring->vars[i], i});
        if (i < static_cast<int>(ring->aliases.size()) && !ring->aliases[i].empty())
            names.push_back({ring->aliases[i], i});
    }
    std::sort(names.begin(), names.end(),
              [](const Name& a, const Name& b) { return a.text.size() > b.text.size(); });

    auto match_var = [&]() -> int {
        c.ws();
        for (const auto& n : names) {
            if (c.s.substr(c.pos, n.text.size()) == n.text) {
                c.pos += n.text.size();
                return n.idx;
            }
        }
        return -1;
    };

    auto parse_uint_str = [&]() -> std::string {
        c.ws();
        size_t start = c.pos;
        while (c.pos < c.s.size() && isdigit(static_cast<unsigned char>(c.s[c.pos])))
            ++c.pos;
        if (c.pos == start)
            c.die("expected number");
        return std::string(c.s.substr(start, c.pos - start));
    };

    const F& f = ring->field;
    std::vector<Term<F>> acc;

    bool first = true;
    while (!c.eof()) {
        // sign
        bool negative = false;
        c.ws();
        if (c.peek() == '+' || c.peek() == '-') {
            negative = c.peek() == '-';
            ++c.pos;
        } else if (!first) {
            c.die("expected '+' or '-'");
        }
        first = false;
        c.ws();
        if (c.eof())
            c.die("dangling sign");

        typename F::Elem coeff = f.one();
        Mono mono = Mono::one();
        bool have_any = false;

        if (isdigit(static_cast<unsigned char>(c.peek()))) {
            mpz_class num(parse_uint_str());
            mpz_class den(1);
            c.ws();
            if (!c.eof() && c.peek() == '/') {
                ++c.pos;
                den = mpz_class(parse_uint_str());
            }
            coeff = f.from_ratio(num, den);
            have_any = true;
            c.ws();
            if (!c.eof() && c.peek() == '*')
                ++c.pos;
            else
                goto term_done;
        }

        for (;;) {
            int idx = match_var();
            if (idx < 0)
                c.die("expected variable");
            uint32_t exp = 1;
            c.ws();
            if (!c.eof() && c.peek() == '^') {
                ++c.pos;
                std::string e = parse_uint_str();
                if (e.size() > 5 || (exp = std::stoul(e)) > kMaxExponent)
                    fail(Errc::Overflow, "exponent too large");
            }
            mono = mono.mul(Mono::var(idx, static_cast<uint16_t>(exp)));
            have_any = true;
            c.ws();
            if (!c.eof() && c.peek() == '*') {
                ++c.pos;
                continue;
            }
            break;
        }

    term_done:
        if (!have_any)
            c.die("empty term");
        if (negative)
            coeff = f.neg(coeff);
        acc.push_back({mono, coeff});
    }

    const MonomialOrder& ord = ring->order;
    std::sort(acc.begin(), acc.end(),
              [&](const Term<F>& a, const Term<F>& b) { return ord.compare(a.m, b.m) > 0; });
    std::vector<Term<F>> out;
    for (auto& t : acc) {
        if (!out.empty() && out.back().m == t.m)
            out.back().c = f.add(out.back().c, t.c);
        else
            out.push_back(std::move(t));
        if (!out.empty() && f.is_zero(out.back().c))
            out.pop_back();
    }
    return Poly<F>::from_sorted_terms(ring, std::move(out));
}

/// Parses a polynomial-system text: one polynomial per line; blank lines and
/// '#' comments skipped; an optional leading "<name> =" is stripped.
template <CoefficientField F>
std::vector<Poly<F>> parse_system(std::string_view text, const RingPtr<F>& ring) {
    std::vector<Poly<F>> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        size_t h = line.find('#');
        if (h != std::string_view::npos)
            line = line.substr(0, h);
        size_t eq = line.find('=');
        if (eq != std::string_view::npos)
            line = line.substr(eq + 1);
        bool blank = true;
        for (char ch : line)
            if (!isspace(static_cast<unsigned char>(ch)))
                blank = false;
        if (blank)
            continue;
        out.push_back(parse_poly(line, ring));
    }
    return out;
}

} // namespace mgb

#endif
