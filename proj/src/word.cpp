#include "magmagb/word.hpp"

#include <sstream>

namespace mgb {

int serial_compare(const MagmaWord& a, const MagmaWord& b, const LetterRanks& ranks) {
    const bool la = a.is_leaf(), lb = b.is_leaf();
    if (la && lb) {
        int ra = ranks[static_cast<int>(a.letter())];
        int rb = ranks[static_cast<int>(b.letter())];
        return ra < rb ? -1 : ra > rb ? 1 : 0;
    }
    if (la != lb)
        return la ? -1 : 1; // letters rank below the node marker
    if (int c = serial_compare(a.left(), b.left(), ranks))
        return c;
    return serial_compare(a.right(), b.right(), ranks);
}

int word_compare(const MagmaWord& a, const MagmaWord& b) {
    if (a.degree() != b.degree())
        return a.degree() < b.degree() ? -1 : 1;
    return serial_compare(a, b);
}

TypeVector type_of(const MagmaWord& w) {
    TypeVector tv;
    if (w.empty())
        return tv;
    if (w.is_leaf()) {
        tv.count[static_cast<int>(w.letter())]++;
        return tv;
    }
    TypeVector l = type_of(w.left()), r = type_of(w.right());
    for (int i = 0; i < 4; ++i)
        tv.count[i] = static_cast<uint16_t>(l.count[i] + r.count[i]);
    return tv;
}

std::string TypeVector::str() const {
    // display order b, b', x, y
    static constexpr Letter disp[4] = {Letter::B, Letter::Bp, Letter::X, Letter::Y};
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (Letter l : disp) {
        uint16_t c = count[static_cast<int>(l)];
        if (!c)
            continue;
        if (!first)
            os << ", ";
        first = false;
        os << letter_str(l) << ":" << c;
    }
    os << "}";
    return os.str();
}

SignedWord anticomm_normal_form(const MagmaWord& w, const LetterRanks& ranks) {
    if (w.is_leaf())
        return {1, w};
    SignedWord l = anticomm_normal_form(w.left(), ranks);
    SignedWord r = anticomm_normal_form(w.right(), ranks);
    int sign = l.sign * r.sign;
    if (serial_compare(l.word, r.word, ranks) > 0) {
        sign = -sign;
        std::swap(l.word, r.word);
    }
    return {sign, MagmaWord::prod(l.word, r.word)};
}

namespace {

struct WordCursor {
    std::string_view s;
    size_t pos = 0;

    void ws() {
        while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool eof() {
        ws();
        return pos >= s.size();
    }
    [[noreturn]] void die(const std::string& msg) {
        fail(Errc::SyntaxError, msg + " at position " + std::to_string(pos));
    }

    MagmaWord primary() {
        ws();
        if (pos >= s.size())
            die("unexpected end of word");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            MagmaWord a = primary();
            MagmaWord b = primary();
            ws();
            if (pos >= s.size() || s[pos] != ')')
                die("expected ')'");
            ++pos;
            return MagmaWord::prod(a, b);
        }
        if (c == 'x') {
            ++pos;
            return MagmaWord::leaf(Letter::X);
        }
        if (c == 'y') {
            ++pos;
            return MagmaWord::leaf(Letter::Y);
        }
        if (c == 'b') {
            ++pos;
            if (pos < s.size() && s[pos] == '\'') {
                ++pos;
                return MagmaWord::leaf(Letter::Bp);
            }
            return MagmaWord::leaf(Letter::B);
        }
        die("expected letter or '('");
    }
};

} // namespace

MagmaWord word_parse(std::string_view text) {
    WordCursor c{text};
    MagmaWord first = c.primary();
    if (c.eof())
        return first;
    MagmaWord second = c.primary();
    if (!c.eof())
        c.die("trailing input (products need brackets)");
    return MagmaWord::prod(first, second);
}

namespace {

void render_child(const MagmaWord& w, std::ostringstream& os) {
    if (w.is_leaf()) {
        os << letter_str(w.letter());
        return;
    }
    os << "(";
    render_child(w.left(), os);
    render_child(w.right(), os);
    os << ")";
}

} // namespace

std::string word_str(const MagmaWord& w) {
    if (w.empty())
        return "";
    std::ostringstream os;
    if (w.is_leaf())
        os << letter_str(w.letter());
    else {
        render_child(w.left(), os);
        render_child(w.right(), os);
    }
    return os.str();
}

} // namespace mgb
