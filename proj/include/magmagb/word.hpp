#ifndef MAGMAGB_WORD_HPP
#define MAGMAGB_WORD_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <string>

#include "magmagb/error.hpp"

namespace mgb {

enum class Letter : uint8_t { X = 0, Y = 1, B = 2, Bp = 3 };

enum class LetterClass { Chi, Beta };

inline LetterClass letter_class(Letter l) {
    return (l == Letter::X || l == Letter::Y) ? LetterClass::Chi : LetterClass::Beta;
}

inline const char* letter_str(Letter l) {
    switch (l) {
    case Letter::X: return "x";
    case Letter::Y: return "y";
    case Letter::B: return "b";
    case Letter::Bp: return "b'";
    }
    return "?";
}

/// A word of the free magma on {b, b', x, y}: a leaf letter or a product of
/// two words. Immutable; copies share structure.
class MagmaWord {
  public:
    MagmaWord() = default;

    static MagmaWord leaf(Letter l) {
        auto n = std::make_shared<Node>();
        n->ltr = l;
        n->deg = 1;
        return MagmaWord(std::move(n));
    }

    static MagmaWord prod(const MagmaWord& a, const MagmaWord& b) {
        auto n = std::make_shared<Node>();
        n->l = a.n_;
        n->r = b.n_;
        n->deg = static_cast<uint16_t>(a.degree() + b.degree());
        return MagmaWord(std::move(n));
    }

    bool empty() const { return !n_; }
    bool is_leaf() const { return n_ && !n_->l; }
    Letter letter() const { return n_->ltr; }
    MagmaWord left() const { return MagmaWord(n_->l); }
    MagmaWord right() const { return MagmaWord(n_->r); }
    int degree() const { return n_ ? n_->deg : 0; }

    bool operator==(const MagmaWord& rhs) const {
        if (n_ == rhs.n_)
            return true;
        if (!n_ || !rhs.n_ || n_->deg != rhs.n_->deg || is_leaf() != rhs.is_leaf())
            return false;
        if (is_leaf())
            return n_->ltr == rhs.n_->ltr;
        return left() == rhs.left() && right() == rhs.right();
    }
    bool operator!=(const MagmaWord& rhs) const { return !(*this == rhs); }

  private:
    struct Node {
        Letter ltr = Letter::X;
        std::shared_ptr<const Node> l, r;
        uint16_t deg = 0;
    };

    explicit MagmaWord(std::shared_ptr<const Node> n) : n_(std::move(n)) {}

    std::shared_ptr<const Node> n_;
};

using LetterRanks = std::array<uint8_t, 4>; // rank per Letter value

inline constexpr LetterRanks kDefaultRanks = {0, 1, 2, 3}; // x < y < b < b'

/// Lexicographic comparison of preorder serializations, with every letter
/// ranking below the internal-node marker (so leaves sort before products).
int serial_compare(const MagmaWord& a, const MagmaWord& b,
                   const LetterRanks& ranks = kDefaultRanks);

/// Total order on words: by degree, then by serialization.
int word_compare(const MagmaWord& a, const MagmaWord& b);

struct WordLess {
    bool operator()(const MagmaWord& a, const MagmaWord& b) const {
        return word_compare(a, b) < 0;
    }
};

/// Multiplicity of each letter; total equals the word's degree.
struct TypeVector {
    std::array<uint16_t, 4> count{};

    uint32_t total() const {
        return uint32_t(count[0]) + count[1] + count[2] + count[3];
    }
    auto operator<=>(const TypeVector&) const = default;
    std::string str() const;
};

TypeVector type_of(const MagmaWord& w);

struct SignedWord {
    int sign = 1;
    MagmaWord word;
    bool operator==(const SignedWord&) const = default;
};

/// Normal form modulo anticommutativity: children are normalized recursively,
/// then swapped (flipping the sign) wherever the left child exceeds the right
/// under the given subtree order. Equal children stay in place with no flip.
SignedWord anticomm_normal_form(const MagmaWord& w, const LetterRanks& ranks = kDefaultRanks);

// Word grammar:  word := letter | "(" word word ")"
// with the outermost parentheses of a top-level product optional on input;
// juxtaposition is one product node. Letters: b, b', x, y.
MagmaWord word_parse(std::string_view text);

/// Fully parenthesized rendering except for the outermost node, e.g. "(bx)y".
std::string word_str(const MagmaWord& w);

} // namespace mgb

#endif
