#ifndef MAGMAGB_EXPAND_HPP
#define MAGMAGB_EXPAND_HPP

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "magmagb/napoly.hpp"

namespace mgb {

// The two 8-parameter rewriting rules over the 16-variable parameter ring
// (variables 0..7 are the lambda bank, 8..15 the mu bank):
//
//   LambdaRule   z(xy) = l1*(zx)y + l2*(xz)y + l3*y(zx) + l4*y(xz)
//                      + l5*(zy)x + l6*(yz)x + l7*x(zy) + l8*x(yz)
//   MuRule       (xy)z = m1*(zx)y + m2*(xz)y + m3*y(zx) + m4*y(xz)
//                      + m5*(zy)x + m6*(yz)x + m7*x(zy) + m8*x(yz)
//
// Both rules share the same eight target shapes; they differ in how the
// matched word is split and in the parameter bank.
enum class RuleKind { Lambda, Mu };

struct RuleMatch {
    MagmaWord z, x, y;
};

/// LambdaRule needs a product right child (z := left, x := right.left,
/// y := right.right); MuRule a product left child (x := left.left,
/// y := left.right, z := right). Compound children stay opaque.
inline RuleMatch match_rule(RuleKind kind, const MagmaWord& w) {
    if (w.empty() || w.is_leaf())
        fail(Errc::BadShape, "cannot expand a leaf");
    if (kind == RuleKind::Lambda) {
        if (w.right().is_leaf())
            fail(Errc::BadShape, "LambdaRule needs a product right child");
        return {w.left(), w.right().left(), w.right().right()};
    }
    if (w.left().is_leaf())
        fail(Errc::BadShape, "MuRule needs a product left child");
    return {w.right(), w.left().left(), w.left().right()};
}

/// The eight template words (zx)y, (xz)y, y(zx), y(xz), (zy)x, (yz)x, x(zy), x(yz).
inline std::array<MagmaWord, 8> rule_template_words(const RuleMatch& m) {
    using W = MagmaWord;
    return {
        W::prod(W::prod(m.z, m.x), m.y), W::prod(W::prod(m.x, m.z), m.y),
        W::prod(m.y, W::prod(m.z, m.x)), W::prod(m.y, W::prod(m.x, m.z)),
        W::prod(W::prod(m.z, m.y), m.x), W::prod(W::prod(m.y, m.z), m.x),
        W::prod(m.x, W::prod(m.z, m.y)), W::prod(m.x, W::prod(m.y, m.z)),
    };
}

/// Parameter-ring variable index of the j-th (0-based) template coefficient.
inline int rule_param_index(RuleKind kind, int j, bool swap_bank = false) {
    bool mu = (kind == RuleKind::Mu) != swap_bank;
    return (mu ? 8 : 0) + j;
}

/// Replaces the monomial w (carrying coefficient coeff) by its 8-term rule
/// instantiation.
template <CoefficientField F>
NAPoly<F> expand_word(const RingPtr<F>& ring, RuleKind kind, const MagmaWord& w,
                      const Poly<F>& coeff, bool swap_bank = false) {
    RuleMatch m = match_rule(kind, w);
    auto words = rule_template_words(m);
    NAPoly<F> out(ring);
    for (int j = 0; j < 8; ++j) {
        Poly<F> c = coeff * Poly<F>::variable(ring, rule_param_index(kind, j, swap_bank));
        out.add_term(words[j], c);
    }
    return out;
}

/// A path into a word: 0 descends left, 1 descends right.
using Path = std::vector<int>;

inline MagmaWord subtree_at(const MagmaWord& w, const Path& path) {
    MagmaWord cur = w;
    for (int step : path) {
        if (cur.is_leaf())
            fail(Errc::BadPath, "path descends through a leaf");
        cur = step ? cur.right() : cur.left();
    }
    return cur;
}

inline MagmaWord graft(const MagmaWord& w, const Path& path, const MagmaWord& replacement,
                       size_t depth = 0) {
    if (depth == path.size())
        return replacement;
    if (w.is_leaf())
        fail(Errc::BadPath, "path descends through a leaf");
    if (path[depth])
        return MagmaWord::prod(w.left(), graft(w.right(), path, replacement, depth + 1));
    return MagmaWord::prod(graft(w.left(), path, replacement, depth + 1), w.right());
}

/// Expands the subtree addressed by path inside the monomial w, rebuilding the
/// surrounding context around each of the eight produced words.
template <CoefficientField F>
NAPoly<F> expand_word_at(const RingPtr<F>& ring, const MagmaWord& w, const Path& path,
                         RuleKind kind, const Poly<F>& coeff, bool swap_bank = false) {
    MagmaWord sub = subtree_at(w, path);
    NAPoly<F> local = expand_word(ring, kind, sub, coeff, swap_bank);
    if (path.empty())
        return local;
    NAPoly<F> out(ring);
    for (const auto& [lw, lc] : local.terms())
        out.add_term(graft(w, path, lw), lc);
    return out;
}

/// Applies the rule at the same path inside every monomial of p.
template <CoefficientField F>
NAPoly<F> expand_at(const NAPoly<F>& p, const Path& path, RuleKind kind) {
    NAPoly<F> out(p.ring());
    for (const auto& [w, c] : p.terms())
        out += expand_word_at(p.ring(), w, path, kind, c);
    return out;
}

/// Under anticommutativity the eight lambda-rule terms collapse onto the
/// two-word basis {y(zx), x(yz)}; returns the collapsed pair of coefficients,
/// derived by normal-form sign tracking.
template <CoefficientField F>
std::pair<Poly<F>, Poly<F>> anticommutative_reduce(std::span<const Poly<F>, 8> lambdas) {
    using W = MagmaWord;
    const W z = W::leaf(Letter::B), x = W::leaf(Letter::X), y = W::leaf(Letter::Y);
    RuleMatch m{z, x, y};
    auto words = rule_template_words(m);
    SignedWord basis1 = anticomm_normal_form(W::prod(y, W::prod(z, x)));
    SignedWord basis2 = anticomm_normal_form(W::prod(x, W::prod(y, z)));

    RingPtr<F> ring = lambdas[0].ring();
    Poly<F> c1 = Poly<F>::zero(ring), c2 = Poly<F>::zero(ring);
    for (int j = 0; j < 8; ++j) {
        SignedWord nf = anticomm_normal_form(words[j]);
        if (nf.word == basis1.word) {
            Poly<F> t = lambdas[j];
            c1 += (nf.sign * basis1.sign < 0) ? -t : t;
        } else if (nf.word == basis2.word) {
            Poly<F> t = lambdas[j];
            c2 += (nf.sign * basis2.sign < 0) ? -t : t;
        } else {
            fail(Errc::BadShape, "template word escapes the anticommutative basis");
        }
    }
    return {c1, c2};
}

} // namespace mgb

#endif
