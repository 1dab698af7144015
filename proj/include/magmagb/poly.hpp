#ifndef MAGMAGB_POLY_HPP
#define MAGMAGB_POLY_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "magmagb/field.hpp"
#include "magmagb/monomial.hpp"

namespace mgb {

/// Ambient polynomial ring: coefficient field, ordered variable list, monomial order.
/// Polynomials keep a shared handle to their ring; terms are stored sorted
/// descending under the ring's order, with no zero coefficients.
template <CoefficientField F>
struct Ring {
    F field;
    std::vector<std::string> vars;
    std::vector<std::string> aliases; // optional per-variable alternate spellings
    MonomialOrder order;

    int nvars() const { return static_cast<int>(vars.size()); }

    int var_index(const std::string& name) const {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name || (i < aliases.size() && aliases[i] == name))
                return static_cast<int>(i);
        return -1;
    }
};

template <CoefficientField F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <CoefficientField F>
RingPtr<F> make_ring(F field, std::vector<std::string> vars,
                     OrderKind kind = OrderKind::DegRevLex,
                     std::vector<std::string> aliases = {}) {
    if (vars.size() > kMaxVars)
        fail(Errc::Overflow, "too many variables");
    auto r = std::make_shared<Ring<F>>();
    r->field = std::move(field);
    r->vars = std::move(vars);
    r->aliases = std::move(aliases);
    r->order = MonomialOrder::make(kind, static_cast<int>(r->vars.size()));
    return r;
}

template <CoefficientField F>
RingPtr<F> with_order(const RingPtr<F>& ring, MonomialOrder order) {
    auto r = std::make_shared<Ring<F>>(*ring);
    r->order = std::move(order);
    return r;
}

template <CoefficientField F>
RingPtr<F> with_order(const RingPtr<F>& ring, OrderKind kind) {
    return with_order(ring, MonomialOrder::make(kind, ring->nvars()));
}

template <CoefficientField F>
bool same_ring(const Ring<F>& a, const Ring<F>& b) {
    return a.field == b.field && a.vars == b.vars && a.order == b.order;
}

template <CoefficientField F>
struct Term {
    Mono m;
    typename F::Elem c;
};

template <CoefficientField F>
class Poly {
  public:
    using Elem = typename F::Elem;

    Poly() = default;
    explicit Poly(RingPtr<F> ring) : ring_(std::move(ring)) {}

    static Poly zero(RingPtr<F> ring) { return Poly(std::move(ring)); }

    static Poly constant(RingPtr<F> ring, Elem c) {
        Poly p(ring);
        if (!ring->field.is_zero(c))
            p.t_.push_back({Mono::one(), std::move(c)});
        return p;
    }

    static Poly from_int(RingPtr<F> ring, long v) {
        return constant(ring, ring->field.from_int(v));
    }

    static Poly variable(RingPtr<F> ring, int idx, uint16_t exp = 1) {
        Poly p(ring);
        p.t_.push_back({Mono::var(idx, exp), ring->field.one()});
        return p;
    }

    static Poly monomial(RingPtr<F> ring, Mono m, Elem c) {
        Poly p(ring);
        if (!ring->field.is_zero(c))
            p.t_.push_back({std::move(m), std::move(c)});
        return p;
    }

    /// terms must already be sorted descending, nonzero, distinct.
    static Poly from_sorted_terms(RingPtr<F> ring, std::vector<Term<F>> terms) {
        Poly p(std::move(ring));
        p.t_ = std::move(terms);
        return p;
    }

    const RingPtr<F>& ring() const { return ring_; }
    const std::vector<Term<F>>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
    size_t size() const { return t_.size(); }

    const Term<F>& lead() const { return t_.front(); }

    uint32_t total_degree() const {
        uint32_t d = 0;
        for (const auto& t : t_)
            d = std::max(d, t.m.deg);
        return d;
    }

    Poly operator-() const {
        Poly r(ring_);
        r.t_.reserve(t_.size());
        for (const auto& t : t_)
            r.t_.push_back({t.m, ring_->field.neg(t.c)});
        return r;
    }

    Poly operator+(const Poly& rhs) const { return merged(rhs, false); }
    Poly operator-(const Poly& rhs) const { return merged(rhs, true); }

    Poly& operator+=(const Poly& rhs) { return *this = *this + rhs; }
    Poly& operator-=(const Poly& rhs) { return *this = *this - rhs; }

    Poly scale(const Elem& c) const {
        const F& f = ring_->field;
        Poly r(ring_);
        if (f.is_zero(c))
            return r;
        r.t_.reserve(t_.size());
        for (const auto& t : t_)
            r.t_.push_back({t.m, f.mul(t.c, c)});
        return r;
    }

    /// multiplication by c*m keeps the term order (orders are multiplicative)
    Poly mul_monomial(const Mono& m, const Elem& c) const {
        const F& f = ring_->field;
        Poly r(ring_);
        if (f.is_zero(c))
            return r;
        r.t_.reserve(t_.size());
        for (const auto& t : t_)
            r.t_.push_back({t.m.mul(m), f.mul(t.c, c)});
        return r;
    }

    Poly operator*(const Poly& rhs) const {
        check_ring(rhs);
        const F& f = ring_->field;
        std::vector<Term<F>> acc;
        acc.reserve(t_.size() * rhs.t_.size());
        for (const auto& a : t_)
            for (const auto& b : rhs.t_)
                acc.push_back({a.m.mul(b.m), f.mul(a.c, b.c)});
        const MonomialOrder& ord = ring_->order;
        std::sort(acc.begin(), acc.end(),
                  [&](const Term<F>& x, const Term<F>& y) { return ord.compare(x.m, y.m) > 0; });
        std::vector<Term<F>> out;
        out.reserve(acc.size());
        for (auto& t : acc) {
            if (!out.empty() && out.back().m == t.m)
                out.back().c = f.add(out.back().c, t.c);
            else
                out.push_back(std::move(t));
            if (!out.empty() && f.is_zero(out.back().c))
                out.pop_back();
        }
        return from_sorted_terms(ring_, std::move(out));
    }

    Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }

    bool operator==(const Poly& rhs) const {
        if (t_.size() != rhs.t_.size())
            return false;
        const F& f = ring_->field;
        for (size_t i = 0; i < t_.size(); ++i)
            if (!(t_[i].m == rhs.t_[i].m) || !f.eq(t_[i].c, rhs.t_[i].c))
                return false;
        return true;
    }

    /// Evaluation at a point given by variable name. Every variable that occurs
    /// in the polynomial must be assigned.
    Elem eval(const std::map<std::string, Elem>& point) const {
        const F& f = ring_->field;
        std::vector<Elem> vals(ring_->nvars(), f.zero());
        std::vector<bool> assigned(ring_->nvars(), false);
        for (const auto& [name, v] : point) {
            int idx = ring_->var_index(name);
            if (idx < 0)
                fail(Errc::MissingAssignment, "unknown variable '" + name + "'");
            vals[idx] = v;
            assigned[idx] = true;
        }
        for (const auto& t : t_)
            for (int i = 0; i < ring_->nvars(); ++i)
                if (t.m.e[i] && !assigned[i])
                    fail(Errc::MissingAssignment, "variable '" + ring_->vars[i] + "' not assigned");
        return eval(vals);
    }

    Elem eval(std::span<const Elem> vals) const {
        const F& f = ring_->field;
        Elem acc = f.zero();
        for (const auto& t : t_) {
            Elem prod = t.c;
            for (int i = 0; i < ring_->nvars(); ++i)
                for (uint16_t k = 0; k < t.m.e[i]; ++k)
                    prod = f.mul(prod, vals[i]);
            acc = f.add(acc, prod);
        }
        return acc;
    }

    enum class NameStyle { Primary, Alias };

    std::string str(NameStyle style = NameStyle::Primary) const {
        if (t_.empty())
            return "0";
        const F& f = ring_->field;
        std::ostringstream os;
        bool first = true;
        for (const auto& t : t_) {
            Elem c = t.c;
            bool negative = coeff_is_negative(c);
            if (negative)
                c = f.neg(c);
            if (first) {
                if (negative)
                    os << "-";
                first = false;
            } else {
                os << (negative ? " - " : " + ");
            }
            bool unit = f.is_one(c);
            if (!unit || t.m.is_one())
                os << f.str(c);
            bool need_star = !unit || t.m.is_one();
            for (int i = 0; i < ring_->nvars(); ++i) {
                if (!t.m.e[i])
                    continue;
                if (need_star)
                    os << "*";
                need_star = true;
                os << name_of(i, style);
                if (t.m.e[i] > 1)
                    os << "^" << t.m.e[i];
            }
        }
        return os.str();
    }

    void check_ring(const Poly& rhs) const {
        if (ring_ == rhs.ring_)
            return;
        if (!ring_ || !rhs.ring_ || !same_ring(*ring_, *rhs.ring_))
            fail(Errc::FieldMismatch, "polynomials from different rings");
    }

  private:
    std::string name_of(int i, NameStyle style) const {
        if (style == NameStyle::Alias && i < static_cast<int>(ring_->aliases.size()) &&
            !ring_->aliases[i].empty())
            return ring_->aliases[i];
        return ring_->vars[i];
    }

    bool coeff_is_negative(const Elem& c) const {
        if constexpr (std::is_same_v<F, RationalField>)
            return sgn(c) < 0;
        else
            return false;
    }

    Poly merged(const Poly& rhs, bool subtract) const {
        check_ring(rhs);
        const F& f = ring_->field;
        const MonomialOrder& ord = ring_->order;
        std::vector<Term<F>> out;
        out.reserve(t_.size() + rhs.t_.size());
        size_t i = 0, j = 0;
        while (i < t_.size() && j < rhs.t_.size()) {
            int cmp = ord.compare(t_[i].m, rhs.t_[j].m);
            if (cmp > 0) {
                out.push_back(t_[i++]);
            } else if (cmp < 0) {
                out.push_back({rhs.t_[j].m, subtract ? f.neg(rhs.t_[j].c) : rhs.t_[j].c});
                ++j;
            } else {
                Elem c = subtract ? f.sub(t_[i].c, rhs.t_[j].c) : f.add(t_[i].c, rhs.t_[j].c);
                if (!f.is_zero(c))
                    out.push_back({t_[i].m, std::move(c)});
                ++i;
                ++j;
            }
        }
        for (; i < t_.size(); ++i)
            out.push_back(t_[i]);
        for (; j < rhs.t_.size(); ++j)
            out.push_back({rhs.t_[j].m, subtract ? f.neg(rhs.t_[j].c) : rhs.t_[j].c});
        return from_sorted_terms(ring_, std::move(out));
    }

    RingPtr<F> ring_;
    std::vector<Term<F>> t_;
};

/// Re-sorts a polynomial into a ring that differs only in monomial order.
template <CoefficientField F>
Poly<F> convert(const Poly<F>& p, const RingPtr<F>& target) {
    std::vector<Term<F>> terms = p.terms();
    const MonomialOrder& ord = target->order;
    std::sort(terms.begin(), terms.end(),
              [&](const Term<F>& a, const Term<F>& b) { return ord.compare(a.m, b.m) > 0; });
    return Poly<F>::from_sorted_terms(target, std::move(terms));
}

/// Monic rescaling (leading coefficient 1).
template <CoefficientField F>
Poly<F> monic(const Poly<F>& p) {
    if (p.is_zero())
        return p;
    const F& f = p.ring()->field;
    if (f.is_one(p.lead().c))
        return p;
    return p.scale(f.inv(p.lead().c));
}

/// Over Q: integer-content 1 and positive leading coefficient. Identity elsewhere.
inline Poly<RationalField> primitive_part(const Poly<RationalField>& p) {
    if (p.is_zero())
        return p;
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& t : p.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den().get_mpz_t());
    }
    mpq_class scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (sgn(p.lead().c) < 0)
        scale = -scale;
    return p.scale(scale);
}

template <CoefficientField F>
Poly<F> gb_normalize(const Poly<F>& p) {
    if constexpr (std::is_same_v<F, RationalField>)
        return primitive_part(p);
    else
        return monic(p);
}

/// Maps a rational-coefficient polynomial into a ring over another field
/// (coefficients are pushed through num/den reduction).
template <CoefficientField F>
Poly<F> change_field(const Poly<RationalField>& p, const RingPtr<F>& target) {
    std::vector<Term<F>> terms;
    terms.reserve(p.size());
    const F& f = target->field;
    for (const auto& t : p.terms()) {
        auto c = f.from_ratio(t.c.get_num(), t.c.get_den());
        if (!f.is_zero(c))
            terms.push_back({t.m, std::move(c)});
    }
    const MonomialOrder& ord = target->order;
    std::sort(terms.begin(), terms.end(),
              [&](const Term<F>& a, const Term<F>& b) { return ord.compare(a.m, b.m) > 0; });
    return Poly<F>::from_sorted_terms(target, std::move(terms));
}

} // namespace mgb

#endif
