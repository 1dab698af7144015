#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "magmagb/groebner.hpp"
#include "magmagb/obstruction.hpp"
#include "magmagb/poly_text.hpp"
#include "testutil.hpp"

using namespace mgb;

namespace {

RingPtr<RationalField> xy_lex() {
    return make_ring(RationalField{}, {"x", "y"}, OrderKind::Lex);
}

template <CoefficientField F>
bool reduces_to_zero(const Poly<F>& p, const std::vector<Poly<F>>& basis) {
    return reduce(p, std::span<const Poly<F>>(basis)).remainder.is_zero();
}

template <CoefficientField F>
void check_division_identity(const Poly<F>& p, const std::vector<Poly<F>>& basis) {
    auto res = reduce(p, std::span<const Poly<F>>(basis));
    Poly<F> acc = res.remainder;
    for (size_t i = 0; i < basis.size(); ++i)
        acc += res.quotients[i] * basis[i];
    CHECK(acc == p);
    for (const auto& t : res.remainder.terms())
        for (const auto& b : basis)
            if (!b.is_zero())
                CHECK_FALSE(b.lead().m.divides(t.m));
}

template <CoefficientField F>
void check_gb_properties(const std::vector<Poly<F>>& gens, const std::vector<Poly<F>>& basis) {
    // membership soundness
    for (const auto& g : gens)
        CHECK(reduces_to_zero(g, basis));
    // every S-polynomial reduces to zero
    const auto& ring = basis.front().ring();
    const F& f = ring->field;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) {
            Mono lc = basis[i].lead().m.lcm(basis[j].lead().m);
            auto s = basis[i].mul_monomial(lc.div(basis[i].lead().m),
                                           f.inv(basis[i].lead().c)) -
                     basis[j].mul_monomial(lc.div(basis[j].lead().m),
                                           f.inv(basis[j].lead().c));
            CHECK(reduces_to_zero(s, basis));
        }
}

} // namespace

TEST_CASE("reduce") {
    auto ring = xy_lex();
    auto x = QPoly::variable(ring, 0);
    auto y = QPoly::variable(ring, 1);
    auto one = QPoly::from_int(ring, 1);

    SUBCASE("by itself") {
        std::vector<QPoly> basis{x * x - y};
        auto res = reduce(basis[0], std::span<const QPoly>(basis));
        CHECK(res.remainder.is_zero());
        CHECK(res.quotients[0] == one);
    }
    SUBCASE("one division step") {
        std::vector<QPoly> basis{x * x - y};
        auto res = reduce(x * x + y, std::span<const QPoly>(basis));
        CHECK(res.remainder == y.scale(2));
        CHECK(res.quotients[0] == one);
    }
    SUBCASE("constants are irreducible by non-constants") {
        std::vector<QPoly> basis{x};
        auto res = reduce(one, std::span<const QPoly>(basis));
        CHECK(res.remainder == one);
        CHECK(res.quotients[0].is_zero());
    }
    SUBCASE("field mismatch") {
        std::vector<QPoly> basis{QPoly::variable(make_mini_ring(), 0)};
        CHECK_THROWS_AS(reduce(x, std::span<const QPoly>(basis)), Error);
    }
}

TEST_CASE("division identity on random inputs") {
    testutil::Rng rng(123);
    auto qring = make_ring(RationalField{}, {"x", "y", "z"}, OrderKind::DegRevLex);
    auto gring = make_ring(PrimeField{32003}, {"x", "y", "z"}, OrderKind::DegRevLex);
    for (int k = 0; k < 200; ++k) {
        auto p = testutil::random_poly(rng, qring, 6, 3);
        std::vector<QPoly> basis;
        for (int i = 0; i < 1 + static_cast<int>(rng() % 3); ++i) {
            auto b = testutil::random_poly(rng, qring, 4, 2);
            if (!b.is_zero())
                basis.push_back(b);
        }
        if (basis.empty())
            continue;
        check_division_identity(p, basis);
    }
    for (int k = 0; k < 200; ++k) {
        auto p = testutil::random_poly(rng, gring, 6, 3);
        std::vector<Poly<PrimeField>> basis;
        for (int i = 0; i < 1 + static_cast<int>(rng() % 3); ++i) {
            auto b = testutil::random_poly(rng, gring, 4, 2);
            if (!b.is_zero())
                basis.push_back(b);
        }
        if (basis.empty())
            continue;
        check_division_identity(p, basis);
    }
}

TEST_CASE("buchberger on small ideals") {
    auto ring = xy_lex();
    auto x = QPoly::variable(ring, 0);

    SUBCASE("a single generator is its own basis") {
        std::vector<QPoly> gens{x};
        auto res = buchberger(std::span<const QPoly>(gens));
        REQUIRE(res.basis.size() == 1);
        CHECK(res.basis[0] == x);
    }
    SUBCASE("the mini system eliminates to lambda = lambda' = -1") {
        auto mring = make_mini_ring(OrderKind::Lex);
        auto gens = mini_system(mring);
        auto res = buchberger(std::span<const QPoly>(gens));
        REQUIRE(res.basis.size() == 2);
        CHECK(res.basis[0] == parse_poly<RationalField>("l + 1", mring));
        CHECK(res.basis[1] == parse_poly<RationalField>("lp + 1", mring));
    }
    SUBCASE("unit ideal via a constant difference") {
        std::vector<QPoly> gens{x, x + QPoly::from_int(ring, 1)};
        auto res = contains_one(std::span<const QPoly>(gens));
        CHECK(res.verdict == Verdict::UnitIdeal);
        CHECK(res.run.basis.size() == 1);
        CHECK(res.run.basis[0] == QPoly::from_int(ring, 1));
    }
}

TEST_CASE("budget handling") {
    auto sys = generate_full();
    GroebnerOptions opt;
    opt.budget.max_pairs = 3;
    auto res = buchberger(std::span<const QPoly>(sys.polys), opt);
    CHECK(res.status == GbStatus::BudgetExceeded);
    CHECK(res.stats.pairs_processed <= 3);
    CHECK(res.stats.pairs_generated > 0); // partial stats are reported

    opt = {};
    opt.budget.max_seconds = 0;
    auto res2 = buchberger(std::span<const QPoly>(sys.polys), opt);
    CHECK(res2.status == GbStatus::BudgetExceeded);
}

TEST_CASE("gb properties and strategy independence on random ideals") {
    testutil::Rng rng(90210);
    auto gring = make_ring(PrimeField{32003}, {"a", "b", "c", "d"}, OrderKind::DegRevLex);
    auto qring = make_ring(RationalField{}, {"a", "b", "c", "d"}, OrderKind::DegRevLex);

    int done = 0;
    while (done < 60) {
        std::vector<Poly<PrimeField>> gens;
        int n = 2 + static_cast<int>(rng() % 3);
        for (int i = 0; i < n; ++i) {
            auto g = testutil::random_poly(rng, gring, 4, 3);
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
        REQUIRE(r1.status == GbStatus::Completed);
        CHECK(r1.basis == r2.basis); // reduced monic basis is strategy-independent
        if (!r1.is_unit_basis())
            check_gb_properties(gens, r1.basis);
    }

    done = 0;
    while (done < 25) {
        std::vector<QPoly> gens;
        int n = 2 + static_cast<int>(rng() % 2);
        for (int i = 0; i < n; ++i) {
            auto g = testutil::random_poly(rng, qring, 3, 2);
            if (!g.is_zero())
                gens.push_back(g);
        }
        if (gens.empty())
            continue;
        ++done;
        GroebnerOptions normal, fifo;
        fifo.strategy = PairStrategy::Fifo;
        auto r1 = buchberger(std::span<const QPoly>(gens), normal);
        auto r2 = buchberger(std::span<const QPoly>(gens), fifo);
        CHECK(r1.basis == r2.basis);
        if (!r1.is_unit_basis())
            check_gb_properties(gens, r1.basis);
    }
}

TEST_CASE("the stage-1 subsystem stays proper modulo 32003") {
    auto sys = generate_full();
    auto gring = make_ring(PrimeField{32003}, sys.ring->vars, OrderKind::DegRevLex,
                           sys.ring->aliases);
    std::vector<Poly<PrimeField>> gens;
    for (int i = 0; i < 32; ++i)
        gens.push_back(change_field(sys.polys[i], gring));
    auto res = contains_one(std::span<const Poly<PrimeField>>(gens));
    CHECK(res.verdict == Verdict::ProperIdeal);
    CHECK(res.run.basis.size() > 1);
    // generator membership in the returned basis
    for (const auto& g : gens)
        CHECK(reduces_to_zero(g, res.run.basis));
}

TEST_CASE("certificates") {
    auto ring = xy_lex();
    auto x = QPoly::variable(ring, 0);
    auto one = QPoly::from_int(ring, 1);

    SUBCASE("hand-built certificates verify by direct expansion") {
        std::vector<QPoly> gens{x, one - x};
        CofactorCertificate<RationalField> cert;
        cert.cofactors = {one, one};
        cert.target = one;
        CHECK(verify_certificate(cert, std::span<const QPoly>(gens)));

        std::vector<QPoly> just_x{x};
        CofactorCertificate<RationalField> wrong;
        wrong.cofactors = {one};
        wrong.target = one;
        CHECK_FALSE(verify_certificate(wrong, std::span<const QPoly>(just_x)));

        CofactorCertificate<RationalField> misaligned;
        misaligned.cofactors = {one};
        misaligned.target = one;
        CHECK_THROWS_AS(verify_certificate(misaligned, std::span<const QPoly>(gens)), Error);
    }
    SUBCASE("engine-produced certificate over Q") {
        std::vector<QPoly> gens{x.scale(mpq_class(1, 2)), one - x};
        GroebnerOptions opt;
        opt.cofactors = true;
        auto res = contains_one(std::span<const QPoly>(gens), opt);
        REQUIRE(res.verdict == Verdict::UnitIdeal);
        REQUIRE(res.run.certificate.has_value());
        CHECK(verify_certificate(*res.run.certificate, std::span<const QPoly>(gens)));
        REQUIRE(res.run.certificate->cleared_integer.has_value());
        CHECK(*res.run.certificate->cleared_integer >= 1);
    }
    SUBCASE("engine-produced certificate over GF(7)") {
        auto g7 = make_ring(PrimeField{7}, {"x", "y"}, OrderKind::Lex);
        std::vector<Poly<PrimeField>> gens{
            parse_poly<PrimeField>("x*y + 1", g7),
            parse_poly<PrimeField>("x", g7),
        };
        GroebnerOptions opt;
        opt.cofactors = true;
        auto res = contains_one(std::span<const Poly<PrimeField>>(gens), opt);
        REQUIRE(res.verdict == Verdict::UnitIdeal);
        REQUIRE(res.run.certificate.has_value());
        CHECK(verify_certificate(*res.run.certificate, std::span<const Poly<PrimeField>>(gens)));
    }
}

TEST_CASE("unit detection uses the basis, not reduction of 1") {
    // reduce(1, basis) never returns 0 because constants are irreducible;
    // the unit criterion must be basis == {1}
    auto ring = xy_lex();
    auto x = QPoly::variable(ring, 0);
    auto one = QPoly::from_int(ring, 1);
    std::vector<QPoly> gens{x, x + one};
    auto res = contains_one(std::span<const QPoly>(gens));
    CHECK(res.verdict == Verdict::UnitIdeal);
    CHECK(reduce(one, std::span<const QPoly>(gens)).remainder == one);
}
