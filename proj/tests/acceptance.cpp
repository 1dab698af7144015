// Acceptance suite: runs each release criterion at its stated tolerance and
// prints one pass/fail line per criterion. The command-line binary under test
// is passed as argv[1].

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "magmagb/groebner.hpp"
#include "magmagb/obstruction.hpp"
#include "magmagb/poly_text.hpp"
#include "testutil.hpp"

using namespace mgb;

namespace {

std::string g_cli;
int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void report(bool pass, const std::string& what, bool gating = true) {
    if (!pass && gating)
        ++g_failures;
    std::cout << (pass ? "PASS" : "FAIL") << (gating ? "      " : " (opt) ") << what << "\n"
              << std::flush;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = g_cli + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return {};
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string normalize_ws(const std::string& s) {
    std::string out;
    bool space = false;
    for (char c : s) {
        if (c == ' ' || c == '\t') {
            space = true;
            continue;
        }
        if (space && !out.empty())
            out += ' ';
        space = false;
        out += c;
    }
    return out;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line))
        lines.push_back(line);
    return lines;
}

void criterion1_appendix() {
    Timer t;
    auto r = run_cli("verify-appendix");
    double dt = t.seconds();
    bool pass = r.exit_code == 0 && r.out.find("128/128") != std::string::npos && dt < 5.0;
    std::ostringstream os;
    os << "1. appendix reproduction: 128/128 exact, " << dt << "s (< 5s)";
    report(pass, os.str());
}

void criterion2_script() {
    auto r = run_cli("generate --format script");
    bool pass = r.exit_code == 0;
    auto lines = lines_of(r.out);
    pass = pass && lines.size() > 2 &&
           normalize_ws(lines[0]) == "ring r=0,(x(1..8),y(1..8)),dp;" &&
           normalize_ws(lines[1]) ==
               "poly f(1) = y(5)*y(5) + y(6)*y(1) + y(7)*x(5) + y(8)*x(1) - 1;";
    auto r2 = run_cli("generate --format script --field gf:2");
    pass = pass && r2.exit_code == 0 &&
           normalize_ws(lines_of(r2.out)[0]) == "ring r=2,(x(1..8),y(1..8)),dp;";
    report(pass, "2. script export matches the published listing (ring header, f(1), gf:2 header)");
}

void criterion3_primes() {
    for (uint32_t p : {2u, 3u, 7u, 5u, 11u, 13u, 1049u}) {
        Timer t;
        auto r = run_cli("check --field gf:" + std::to_string(p) + " --budget 1800");
        double dt = t.seconds();
        bool pass = r.exit_code == 0 && r.out.find("UnitIdeal") != std::string::npos;
        std::ostringstream os;
        os << "3. full system over GF(" << p << ") is the unit ideal, " << dt << "s (< 1800s)";
        report(pass && dt < 1800, os.str());
    }
}

void criterion4_control() {
    Timer t;
    auto r = run_cli("check --field gf:32003 --subsystem 1..32 --budget 600");
    double dt = t.seconds();
    bool pass = r.exit_code == 0 && r.out.find("ProperIdeal") != std::string::npos && dt < 600;
    std::ostringstream os;
    os << "4. f1..f32 over GF(32003) stays a proper ideal, " << dt << "s (< 600s)";
    report(pass, os.str());
}

void criterion5_mini() {
    Timer t;
    auto ring = make_mini_ring(OrderKind::Lex);
    auto gens = mini_system(ring);
    auto res = buchberger(std::span<const QPoly>(gens));
    double dt = t.seconds();
    bool pass = res.status == GbStatus::Completed && res.basis.size() == 2 &&
                res.basis[0] == parse_poly<RationalField>("l + 1", ring) &&
                res.basis[1] == parse_poly<RationalField>("lp + 1", ring) && dt < 1.0;
    std::ostringstream os;
    os << "5. mini-system lex basis is {l + 1, lp + 1}, " << dt << "s (< 1s)";
    report(pass, os.str());
}

bool property_homogeneous(testutil::Rng& rng, int cases) {
    auto ring = make_parameter_ring();
    for (int k = 0; k < cases; ++k) {
        auto p = testutil::random_napoly(rng, ring, 8, 4, 3);
        auto comps = p.homogeneous_components();
        NAPoly<RationalField> sum(ring);
        std::vector<TypeVector> seen;
        for (const auto& [tv, comp] : comps) {
            if (comp.is_zero())
                return false;
            for (const auto& [w, c] : comp.terms())
                if (!(type_of(w) == tv))
                    return false;
            seen.push_back(tv);
            sum += comp;
        }
        for (size_t i = 0; i < seen.size(); ++i)
            for (size_t j = i + 1; j < seen.size(); ++j)
                if (seen[i] == seen[j])
                    return false;
        if (!(sum == p))
            return false;
    }
    return true;
}

bool property_letter_conservation(testutil::Rng& rng, int cases) {
    auto ring = make_parameter_ring();
    auto one = QPoly::from_int(ring, 1);
    int done = 0;
    while (done < cases) {
        MagmaWord w = testutil::random_word(rng, 3 + static_cast<int>(rng() % 3));
        RuleKind kind = (rng() & 1) ? RuleKind::Lambda : RuleKind::Mu;
        try {
            auto out = expand_word(ring, kind, w, one);
            ++done;
            TypeVector tv = type_of(w);
            for (const auto& [u, c] : out.terms())
                if (!(type_of(u) == tv))
                    return false;
        } catch (const Error&) {
            // wrong shape for the drawn rule
        }
    }
    return true;
}

template <CoefficientField F>
bool gb_checks(const std::vector<Poly<F>>& gens, const std::vector<Poly<F>>& basis) {
    for (const auto& g : gens)
        if (!reduce(g, std::span<const Poly<F>>(basis)).remainder.is_zero())
            return false;
    const F& f = basis.front().ring()->field;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) {
            Mono lc = basis[i].lead().m.lcm(basis[j].lead().m);
            auto s =
                basis[i].mul_monomial(lc.div(basis[i].lead().m), f.inv(basis[i].lead().c)) -
                basis[j].mul_monomial(lc.div(basis[j].lead().m), f.inv(basis[j].lead().c));
            if (!reduce(s, std::span<const Poly<F>>(basis)).remainder.is_zero())
                return false;
        }
    return true;
}

bool property_groebner(testutil::Rng& rng, int cases) {
    auto ring = make_ring(PrimeField{32003}, {"a", "b", "c", "d"}, OrderKind::DegRevLex);
    int done = 0;
    while (done < cases) {
        std::vector<Poly<PrimeField>> gens;
        int n = 2 + static_cast<int>(rng() % 3);
        for (int i = 0; i < n; ++i) {
            auto g = testutil::random_poly(rng, ring, 4, 3);
            if (!g.is_zero())
                gens.push_back(g);
        }
        if (gens.empty())
            continue;
        ++done;
        GroebnerOptions normal, fifo;
        fifo.strategy = PairStrategy::Fifo;
        auto r1 = buchberger(std::span<const Poly<PrimeField>>(gens), normal);
        auto r2 = buchberger(std::span<const Poly<PrimeField>>(gens), fifo);
        if (r1.status != GbStatus::Completed || r2.status != GbStatus::Completed)
            return false;
        if (!(r1.basis == r2.basis))
            return false;
        if (!gb_checks(gens, r1.basis))
            return false;
    }
    return true;
}

bool property_division(testutil::Rng& rng, int cases) {
    auto ring = make_ring(RationalField{}, {"a", "b", "c"}, OrderKind::DegRevLex);
    for (int k = 0; k < cases; ++k) {
        auto p = testutil::random_poly(rng, ring, 6, 3);
        std::vector<QPoly> basis;
        for (int i = 0; i < 1 + static_cast<int>(rng() % 3); ++i) {
            auto b = testutil::random_poly(rng, ring, 4, 2);
            if (!b.is_zero())
                basis.push_back(b);
        }
        if (basis.empty()) {
            --k;
            continue;
        }
        auto res = reduce(p, std::span<const QPoly>(basis));
        QPoly acc = res.remainder;
        for (size_t i = 0; i < basis.size(); ++i)
            acc += res.quotients[i] * basis[i];
        if (!(acc == p))
            return false;
        for (const auto& t : res.remainder.terms())
            for (const auto& b : basis)
                if (b.lead().m.divides(t.m))
                    return false;
    }
    return true;
}

void criterion6_properties() {
    testutil::Rng rng(160920);
    Timer t;
    report(property_homogeneous(rng, 1000), "6a. homogeneous-component reconstruction (1000 cases)");
    report(property_letter_conservation(rng, 1000), "6b. expansion letter conservation (1000 cases)");
    report(property_groebner(rng, 1000),
           "6c. S-polynomials reduce to zero, generators are members, reduced basis is "
           "strategy-independent (1000 random ideals)");
    report(property_division(rng, 1000), "6d. division identity p = sum(q_i b_i) + r (1000 cases)");
    std::cout << "   [property suites took " << t.seconds() << "s]\n";
}

void criterion7_certificate() {
    Timer t;
    auto sys = generate_full();
    auto ring = make_ring(PrimeField{2}, sys.ring->vars, OrderKind::DegRevLex, sys.ring->aliases);
    std::vector<Poly<PrimeField>> gens;
    for (const auto& g : sys.polys)
        gens.push_back(change_field(g, ring));
    GroebnerOptions opt;
    opt.cofactors = true;
    auto res = contains_one(std::span<const Poly<PrimeField>>(gens), opt);
    bool pass = res.verdict == Verdict::UnitIdeal && res.run.certificate.has_value() &&
                verify_certificate(*res.run.certificate, std::span<const Poly<PrimeField>>(gens));
    std::ostringstream os;
    os << "7. cofactor certificate for the full system over GF(2) verifies by direct expansion, "
       << t.seconds() << "s";
    report(pass, os.str(), /*gating=*/false);
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-magmagb-binary>\n";
        return 2;
    }
    g_cli = argv[1];

    criterion1_appendix();
    criterion2_script();
    criterion3_primes();
    criterion4_control();
    criterion5_mini();
    criterion6_properties();
    criterion7_certificate();

    if (g_failures) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all gating criteria passed\n";
    return 0;
}
