#ifndef MAGMAGB_NAPOLY_HPP
#define MAGMAGB_NAPOLY_HPP

#include <map>
#include <sstream>

#include "magmagb/poly.hpp"
#include "magmagb/word.hpp"

namespace mgb {

/// A formal linear combination of magma words with polynomial coefficients in
/// the parameter ring. No zero coefficients are stored.
template <CoefficientField F>
class NAPoly {
  public:
    using Coeff = Poly<F>;
    using Map = std::map<MagmaWord, Coeff, WordLess>;

    NAPoly() = default;
    explicit NAPoly(RingPtr<F> ring) : ring_(std::move(ring)) {}

    static NAPoly term(RingPtr<F> ring, const MagmaWord& w, Coeff c) {
        NAPoly p(std::move(ring));
        p.add_term(w, std::move(c));
        return p;
    }

    const RingPtr<F>& ring() const { return ring_; }
    const Map& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }

    void add_term(const MagmaWord& w, const Coeff& c) {
        if (c.is_zero())
            return;
        auto it = t_.find(w);
        if (it == t_.end()) {
            t_.emplace(w, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero())
            t_.erase(it);
    }

    NAPoly& operator+=(const NAPoly& rhs) {
        for (const auto& [w, c] : rhs.t_)
            add_term(w, c);
        return *this;
    }

    NAPoly& operator-=(const NAPoly& rhs) {
        for (const auto& [w, c] : rhs.t_)
            add_term(w, -c);
        return *this;
    }

    NAPoly operator+(const NAPoly& rhs) const {
        NAPoly r = *this;
        r += rhs;
        return r;
    }

    NAPoly operator-(const NAPoly& rhs) const {
        NAPoly r = *this;
        r -= rhs;
        return r;
    }

    NAPoly scale(const Coeff& c) const {
        NAPoly r(ring_);
        if (c.is_zero())
            return r;
        for (const auto& [w, k] : t_)
            r.add_term(w, k * c);
        return r;
    }

    /// nullptr when the word is absent.
    const Coeff* coeff(const MagmaWord& w) const {
        auto it = t_.find(w);
        return it == t_.end() ? nullptr : &it->second;
    }

    bool operator==(const NAPoly& rhs) const {
        if (t_.size() != rhs.t_.size())
            return false;
        auto it = t_.begin();
        auto jt = rhs.t_.begin();
        for (; it != t_.end(); ++it, ++jt)
            if (it->first != jt->first || !(it->second == jt->second))
                return false;
        return true;
    }

    /// Partition of the terms by type; the components sum back to this value.
    std::map<TypeVector, NAPoly> homogeneous_components() const {
        std::map<TypeVector, NAPoly> out;
        for (const auto& [w, c] : t_) {
            TypeVector tv = type_of(w);
            auto it = out.find(tv);
            if (it == out.end())
                it = out.emplace(tv, NAPoly(ring_)).first;
            it->second.add_term(w, c);
        }
        return out;
    }

    std::string str() const {
        if (t_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [w, c] : t_) {
            if (!first)
                os << " + ";
            first = false;
            os << "(" << c.str() << ")*" << word_str(w);
        }
        return os.str();
    }

  private:
    RingPtr<F> ring_;
    Map t_;
};

} // namespace mgb

#endif
