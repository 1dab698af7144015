#ifndef MAGMAGB_GROEBNER_HPP
#define MAGMAGB_GROEBNER_HPP

#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>

#include "magmagb/poly.hpp"

namespace mgb {

template <CoefficientField F>
struct DivisionResult {
    Poly<F> remainder;
    std::vector<Poly<F>> quotients; // aligned with the divisor list
};

namespace detail {

/// Division worker; bails out with nullopt when the abort callback fires.
template <CoefficientField F, class AbortFn>
std::optional<DivisionResult<F>> reduce_impl(const Poly<F>& p, std::span<const Poly<F>> basis,
                                             AbortFn&& abort) {
    const RingPtr<F>& ring = p.ring();
    const F& f = ring->field;
    for (const auto& b : basis)
        p.check_ring(b);

    DivisionResult<F> res;
    res.quotients.assign(basis.size(), Poly<F>::zero(ring));

    std::vector<Term<F>> rem;
    Poly<F> work = p;
    std::vector<std::vector<Term<F>>> qterms(basis.size());

    while (!work.is_zero()) {
        if (abort())
            return std::nullopt;
        const Term<F>& lt = work.lead();
        bool divided = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (basis[i].is_zero())
                continue;
            const Term<F>& bl = basis[i].lead();
            if (!bl.m.divides(lt.m))
                continue;
            Mono q = lt.m.div(bl.m);
            typename F::Elem c = f.div(lt.c, bl.c);
            work -= basis[i].mul_monomial(q, c);
            qterms[i].push_back({q, std::move(c)});
            divided = true;
            break;
        }
        if (!divided) {
            rem.push_back(lt);
            auto terms = work.terms();
            work = Poly<F>::from_sorted_terms(
                ring, std::vector<Term<F>>(terms.begin() + 1, terms.end()));
        }
    }
    // leads strictly decrease, so per-divisor quotient terms are already sorted
    for (size_t i = 0; i < basis.size(); ++i)
        res.quotients[i] = Poly<F>::from_sorted_terms(ring, std::move(qterms[i]));
    res.remainder = Poly<F>::from_sorted_terms(ring, std::move(rem));
    return res;
}

} // namespace detail

/// Full multivariate division: every term of the remainder is indivisible by
/// every divisor lead, and p = sum(quotients[i]*basis[i]) + remainder exactly.
/// Divisor choice: first divisor in list order whose lead divides.
template <CoefficientField F>
DivisionResult<F> reduce(const Poly<F>& p, std::span<const Poly<F>> basis) {
    return *detail::reduce_impl(p, basis, [] { return false; });
}

enum class PairStrategy { Normal, Fifo };

struct GroebnerBudget {
    double max_seconds = std::numeric_limits<double>::infinity();
    uint64_t max_pairs = std::numeric_limits<uint64_t>::max();
};

struct GroebnerOptions {
    PairStrategy strategy = PairStrategy::Normal;
    bool cofactors = false;
    GroebnerBudget budget;
};

enum class GbStatus { Completed, BudgetExceeded };

struct GroebnerStats {
    uint64_t pairs_generated = 0;
    uint64_t pairs_processed = 0;
    uint64_t reductions_to_zero = 0;
    uint64_t skipped_coprime = 0; // product criterion
    uint64_t skipped_chain = 0;   // chain criterion / Gebauer-Moeller pruning
    double elapsed_seconds = 0.0;
};

/// cofactors[i] expresses the target in the i-th original generator:
/// target = sum cofactors[i] * generators[i]. In rational mode the cleared
/// integer m satisfies m = sum (m*cofactors[i]) * generators[i] with integer
/// polynomials m*cofactors[i].
template <CoefficientField F>
struct CofactorCertificate {
    std::vector<Poly<F>> cofactors;
    Poly<F> target;
    std::optional<mpz_class> cleared_integer;
};

template <CoefficientField F>
struct GroebnerResult {
    GbStatus status = GbStatus::Completed;
    std::vector<Poly<F>> basis; // reduced and monic when Completed
    GroebnerStats stats;
    std::optional<CofactorCertificate<F>> certificate;

    bool is_unit_basis() const {
        return basis.size() == 1 && !basis[0].is_zero() && basis[0].is_constant();
    }
};

template <CoefficientField F>
class GbEngine {
  public:
    GbEngine(std::span<const Poly<F>> generators, GroebnerOptions options)
        : opt_(std::move(options)) {
        for (const auto& g : generators)
            if (!g.is_zero()) {
                ring_ = g.ring();
                break;
            }
        if (!ring_)
            fail(Errc::LengthMismatch, "empty or all-zero generator list");
        for (const auto& g : generators) {
            gens_.push_back(g);
            if (!g.is_zero())
                g.check_ring(gens_.front());
        }
    }

    GroebnerResult<F> run() {
        start_ = Clock::now();
        const F& f = ring_->field;

        for (size_t i = 0; i < gens_.size(); ++i) {
            if (gens_[i].is_zero())
                continue;
            Poly<F> g = gb_normalize(gens_[i]);
            std::vector<Poly<F>> rep;
            if (opt_.cofactors) {
                rep.assign(gens_.size(), Poly<F>::zero(ring_));
                // normalization factor: g = s * gens_[i]
                typename F::Elem s = f.div(g.lead().c, gens_[i].lead().c);
                rep[i] = Poly<F>::constant(ring_, s);
            }
            if (g.is_constant())
                return finish_unit(std::move(g), std::move(rep));
            add_element(std::move(g), std::move(rep));
        }

        while (!pairs_.empty()) {
            if (over_budget())
                return finish(GbStatus::BudgetExceeded);
            size_t pick = select_pair();
            Pair pr = pairs_[pick];
            pairs_[pick] = pairs_.back();
            pairs_.pop_back();
            ++stats_.pairs_processed;

            auto [spoly, srep] = s_polynomial(pr);
            // abort long reductions at the budget boundary too, so a single
            // pathological division cannot blow far past the cap
            uint32_t ticks = 0;
            auto maybe = detail::reduce_impl(
                spoly, std::span<const Poly<F>>(basis_),
                [&] { return (++ticks & 63u) == 0 && over_budget(); });
            if (!maybe)
                return finish(GbStatus::BudgetExceeded);
            DivisionResult<F> div = std::move(*maybe);
            if (div.remainder.is_zero()) {
                ++stats_.reductions_to_zero;
                continue;
            }
            std::vector<Poly<F>> rep;
            if (opt_.cofactors) {
                rep = std::move(srep);
                for (size_t k = 0; k < basis_.size(); ++k)
                    if (!div.quotients[k].is_zero())
                        for (size_t g = 0; g < rep.size(); ++g)
                            rep[g] -= div.quotients[k] * rep_[k][g];
            }
            Poly<F> h = gb_normalize(div.remainder);
            if (opt_.cofactors) {
                typename F::Elem s = f.div(h.lead().c, div.remainder.lead().c);
                for (auto& r : rep)
                    r = r.scale(s);
            }
            if (h.is_constant())
                return finish_unit(std::move(h), std::move(rep));
            add_element(std::move(h), std::move(rep));
        }
        return finish(GbStatus::Completed);
    }

  private:
    using Clock = std::chrono::steady_clock;

    struct Pair {
        uint32_t i, j;
        Mono lcm;
        uint64_t serial;
    };

    double elapsed() const {
        return std::chrono::duration<double>(Clock::now() - start_).count();
    }

    bool over_budget() const {
        return stats_.pairs_processed >= opt_.budget.max_pairs ||
               elapsed() > opt_.budget.max_seconds;
    }

    size_t select_pair() const {
        size_t best = 0;
        for (size_t k = 1; k < pairs_.size(); ++k) {
            const Pair &a = pairs_[k], &b = pairs_[best];
            bool better;
            if (opt_.strategy == PairStrategy::Fifo)
                better = a.serial < b.serial;
            else
                better = a.lcm.deg != b.lcm.deg ? a.lcm.deg < b.lcm.deg : a.serial < b.serial;
            if (better)
                best = k;
        }
        return best;
    }

    std::pair<Poly<F>, std::vector<Poly<F>>> s_polynomial(const Pair& pr) {
        const F& f = ring_->field;
        const Poly<F>&gi = basis_[pr.i], &gj = basis_[pr.j];
        Mono u = pr.lcm.div(gi.lead().m);
        Mono v = pr.lcm.div(gj.lead().m);
        // cross-scaled so the leads cancel without fractions
        typename F::Elem a = gj.lead().c, b = f.neg(gi.lead().c);
        Poly<F> s = gi.mul_monomial(u, a) + gj.mul_monomial(v, b);
        std::vector<Poly<F>> rep;
        if (opt_.cofactors) {
            rep.assign(gens_.size(), Poly<F>::zero(ring_));
            for (size_t g = 0; g < gens_.size(); ++g)
                rep[g] = rep_[pr.i][g].mul_monomial(u, a) + rep_[pr.j][g].mul_monomial(v, b);
        }
        return {std::move(s), std::move(rep)};
    }

    /// Gebauer-Moeller update: prune the old pair set with the chain
    /// criterion, filter the new pairs (M and F criteria), then apply the
    /// product criterion.
    void add_element(Poly<F> h, std::vector<Poly<F>> rep) {
        const uint32_t t = static_cast<uint32_t>(basis_.size());
        const Mono& lt = h.lead().m;

        std::vector<Pair> kept;
        kept.reserve(pairs_.size());
        for (const Pair& pr : pairs_) {
            bool drop = lt.divides(pr.lcm) &&
                        !(basis_[pr.i].lead().m.lcm(lt) == pr.lcm) &&
                        !(basis_[pr.j].lead().m.lcm(lt) == pr.lcm);
            if (drop)
                ++stats_.skipped_chain;
            else
                kept.push_back(pr);
        }
        pairs_ = std::move(kept);

        struct Cand {
            uint32_t i;
            Mono lcm;
            bool alive = true;
        };
        std::vector<Cand> cand;
        cand.reserve(t);
        for (uint32_t i = 0; i < t; ++i)
            cand.push_back({i, basis_[i].lead().m.lcm(lt)});
        stats_.pairs_generated += cand.size();

        // M criterion: drop a candidate whose lcm is a proper multiple of
        // another candidate's lcm
        for (auto& a : cand) {
            if (!a.alive)
                continue;
            for (const auto& b : cand) {
                if (&a == &b || !b.alive)
                    continue;
                if (b.lcm.divides(a.lcm) && !(b.lcm == a.lcm)) {
                    a.alive = false;
                    ++stats_.skipped_chain;
                    break;
                }
            }
        }
        // F criterion: among equal lcms keep a single representative,
        // preferring one whose leads are coprime (it then dies with the
        // product criterion, killing the whole class)
        for (size_t x = 0; x < cand.size(); ++x) {
            if (!cand[x].alive)
                continue;
            size_t keep = x;
            for (size_t z = x + 1; z < cand.size(); ++z) {
                if (!cand[z].alive || !(cand[z].lcm == cand[x].lcm))
                    continue;
                if (basis_[cand[z].i].lead().m.coprime(lt) &&
                    !basis_[cand[keep].i].lead().m.coprime(lt)) {
                    cand[keep].alive = false;
                    ++stats_.skipped_chain;
                    keep = z;
                } else {
                    cand[z].alive = false;
                    ++stats_.skipped_chain;
                }
            }
        }
        // product criterion
        for (auto& a : cand) {
            if (!a.alive)
                continue;
            if (basis_[a.i].lead().m.coprime(lt)) {
                a.alive = false;
                ++stats_.skipped_coprime;
            }
        }
        for (const auto& a : cand)
            if (a.alive)
                pairs_.push_back({a.i, t, a.lcm, serial_++});

        basis_.push_back(std::move(h));
        if (opt_.cofactors)
            rep_.push_back(std::move(rep));
    }

    GroebnerResult<F> finish_unit(Poly<F> constant, std::vector<Poly<F>> rep) {
        const F& f = ring_->field;
        GroebnerResult<F> res;
        res.status = GbStatus::Completed;
        res.basis = {Poly<F>::from_int(ring_, 1)};
        if (opt_.cofactors) {
            typename F::Elem inv = f.inv(constant.lead().c);
            CofactorCertificate<F> cert;
            cert.target = Poly<F>::from_int(ring_, 1);
            cert.cofactors.reserve(rep.size());
            for (auto& r : rep)
                cert.cofactors.push_back(r.scale(inv));
            attach_cleared_integer(cert);
            res.certificate = std::move(cert);
        }
        res.stats = stats_;
        res.stats.elapsed_seconds = elapsed();
        return res;
    }

    static void attach_cleared_integer(CofactorCertificate<F>& cert) {
        if constexpr (std::is_same_v<F, RationalField>) {
            mpz_class m = 1;
            for (const auto& c : cert.cofactors)
                for (const auto& t : c.terms())
                    mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), t.c.get_den().get_mpz_t());
            cert.cleared_integer = m;
        }
    }

    GroebnerResult<F> finish(GbStatus status) {
        GroebnerResult<F> res;
        res.status = status;
        if (status == GbStatus::Completed)
            interreduce();
        for (auto& g : basis_)
            g = monic(g);
        res.basis = std::move(basis_);
        res.stats = stats_;
        res.stats.elapsed_seconds = elapsed();
        return res;
    }

    void interreduce() {
        // minimal: drop elements whose lead is a multiple of another lead
        std::vector<Poly<F>> minimal;
        for (size_t i = 0; i < basis_.size(); ++i) {
            bool redundant = false;
            for (size_t j = 0; j < basis_.size(); ++j) {
                if (i == j)
                    continue;
                const Mono &mi = basis_[i].lead().m, &mj = basis_[j].lead().m;
                if (mj.divides(mi) && (!(mi == mj) || j < i)) {
                    redundant = true;
                    break;
                }
            }
            if (!redundant)
                minimal.push_back(basis_[i]);
        }
        // reduced: take each element to normal form against the others
        for (size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Poly<F>> others;
            others.reserve(minimal.size() - 1);
            for (size_t j = 0; j < minimal.size(); ++j)
                if (j != i)
                    others.push_back(minimal[j]);
            minimal[i] = reduce(minimal[i], std::span<const Poly<F>>(others)).remainder;
        }
        const MonomialOrder& ord = ring_->order;
        std::sort(minimal.begin(), minimal.end(), [&](const Poly<F>& a, const Poly<F>& b) {
            return ord.compare(a.lead().m, b.lead().m) > 0;
        });
        basis_ = std::move(minimal);
    }

    GroebnerOptions opt_;
    RingPtr<F> ring_;
    std::vector<Poly<F>> gens_;
    std::vector<Poly<F>> basis_;
    std::vector<std::vector<Poly<F>>> rep_; // basis element -> generator cofactors
    std::vector<Pair> pairs_;
    uint64_t serial_ = 0;
    GroebnerStats stats_;
    Clock::time_point start_;
};

template <CoefficientField F>
GroebnerResult<F> buchberger(std::span<const Poly<F>> generators,
                             const GroebnerOptions& options = {}) {
    return GbEngine<F>(generators, options).run();
}

enum class Verdict { UnitIdeal, ProperIdeal };

inline const char* verdict_str(Verdict v) {
    return v == Verdict::UnitIdeal ? "UnitIdeal" : "ProperIdeal";
}

template <CoefficientField F>
struct ContainsOneResult {
    std::optional<Verdict> verdict; // empty when the budget ran out
    GroebnerResult<F> run;
};

/// The criterion is reduced basis == {1}; constants are never reduced.
template <CoefficientField F>
ContainsOneResult<F> contains_one(std::span<const Poly<F>> generators,
                                  const GroebnerOptions& options = {}) {
    ContainsOneResult<F> res;
    res.run = buchberger(generators, options);
    if (res.run.status == GbStatus::Completed)
        res.verdict = res.run.is_unit_basis() ? Verdict::UnitIdeal : Verdict::ProperIdeal;
    return res;
}

/// Recomputes sum(c_i * g_i) by direct arithmetic and compares with the
/// target; in integer-cleared mode additionally checks the clearing integer.
template <CoefficientField F>
bool verify_certificate(const CofactorCertificate<F>& cert,
                        std::span<const Poly<F>> generators) {
    if (cert.cofactors.size() != generators.size())
        fail(Errc::LengthMismatch, "certificate length does not match generator count");
    if (generators.empty())
        return false;
    const RingPtr<F>& ring = cert.target.ring();
    Poly<F> acc = Poly<F>::zero(ring);
    for (size_t i = 0; i < generators.size(); ++i)
        if (!cert.cofactors[i].is_zero())
            acc += cert.cofactors[i] * generators[i];
    if (!(acc == cert.target))
        return false;
    if (cert.cleared_integer) {
        if constexpr (std::is_same_v<F, RationalField>) {
            mpq_class m(*cert.cleared_integer);
            Poly<F> cleared = Poly<F>::zero(ring);
            for (size_t i = 0; i < generators.size(); ++i) {
                Poly<F> ci = cert.cofactors[i].scale(m);
                for (const auto& t : ci.terms())
                    if (t.c.get_den() != 1)
                        return false;
                cleared += ci * generators[i];
            }
            if (!(cleared == cert.target.scale(m)))
                return false;
        }
    }
    return true;
}

} // namespace mgb

#endif
