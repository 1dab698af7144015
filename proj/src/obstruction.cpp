#include "magmagb/obstruction.hpp"

#include <fstream>
#include <sstream>

#include "magmagb/poly_text.hpp"

namespace mgb {

namespace {

using W = MagmaWord;
using NAQ = NAPoly<RationalField>;

W leaf_b() { return W::leaf(Letter::B); }
W leaf_bp() { return W::leaf(Letter::Bp); }
W leaf_x() { return W::leaf(Letter::X); }
W leaf_y() { return W::leaf(Letter::Y); }

bool all_chi(const W& w) {
    if (w.is_leaf())
        return letter_class(w.letter()) == LetterClass::Chi;
    return all_chi(w.left()) && all_chi(w.right());
}

/// Root rule by shape: compound left child matches MuRule, compound right
/// child LambdaRule.
RuleKind root_rule(const W& w) {
    if (!w.left().is_leaf())
        return RuleKind::Mu;
    if (!w.right().is_leaf())
        return RuleKind::Lambda;
    fail(Errc::BadShape, "no compound child to expand at " + word_str(w));
}

/// Words shaped (xy)b, (yx)b, b(xy), b(yx): a pure-chi compound against a
/// single beta leaf.
bool chi_compound_vs_beta(const W& w) {
    if (w.is_leaf())
        return false;
    const W l = w.left(), r = w.right();
    if (l.is_leaf() && letter_class(l.letter()) == LetterClass::Beta && !r.is_leaf())
        return all_chi(r);
    if (r.is_leaf() && letter_class(r.letter()) == LetterClass::Beta && !l.is_leaf())
        return all_chi(l);
    return false;
}

/// Path to the unique compound child of a root product (the other child is a
/// leaf).
Path compound_child_path(const W& w) {
    if (!w.left().is_leaf() && w.right().is_leaf())
        return {0};
    if (w.left().is_leaf() && !w.right().is_leaf())
        return {1};
    fail(Errc::BadShape, "expected exactly one compound child in " + word_str(w));
}

/// Extracts the coefficients of `basis` from p, appending them to out.
/// Returns how many basis words were present in p.
size_t extract(const NAQ& p, const std::vector<W>& basis, const QRing& ring,
               std::vector<QPoly>& out, std::vector<Provenance>* prov, int pipeline,
               const std::string& block) {
    size_t covered = 0;
    for (const W& w : basis) {
        const QPoly* c = p.coeff(w);
        out.push_back(c ? *c : QPoly::zero(ring));
        if (c)
            ++covered;
        if (prov)
            prov->push_back({pipeline, block, word_str(w)});
    }
    return covered;
}

} // namespace

QRing make_parameter_ring(OrderKind kind) {
    std::vector<std::string> vars, aliases;
    for (int i = 1; i <= 8; ++i) {
        vars.push_back("l" + std::to_string(i));
        aliases.push_back("x(" + std::to_string(i) + ")");
    }
    for (int i = 1; i <= 8; ++i) {
        vars.push_back("m" + std::to_string(i));
        aliases.push_back("y(" + std::to_string(i) + ")");
    }
    return make_ring(RationalField{}, std::move(vars), kind, std::move(aliases));
}

QRing make_mini_ring(OrderKind kind) {
    return make_ring(RationalField{}, {"l", "lp"}, kind);
}

std::vector<QPoly> generate_stage1(const QRing& ring, std::vector<Provenance>* prov) {
    const W b = leaf_b(), x = leaf_x(), y = leaf_y();
    const std::vector<W> starts = {
        W::prod(W::prod(b, x), y),
        W::prod(W::prod(x, b), y),
        W::prod(y, W::prod(b, x)),
        W::prod(y, W::prod(x, b)),
    };
    const std::vector<W> basis = {
        W::prod(W::prod(b, x), y), W::prod(W::prod(x, b), y),
        W::prod(y, W::prod(b, x)), W::prod(y, W::prod(x, b)),
        W::prod(W::prod(b, y), x), W::prod(W::prod(y, b), x),
        W::prod(x, W::prod(b, y)), W::prod(x, W::prod(y, b)),
    };

    std::vector<QPoly> out;
    const QPoly one = QPoly::from_int(ring, 1);
    for (const W& start : starts) {
        NAQ first = expand_word(ring, root_rule(start), start, one);
        NAQ flat(ring);
        for (const auto& [w, c] : first.terms()) {
            if (chi_compound_vs_beta(w))
                flat += expand_word(ring, root_rule(w), w, c);
            else
                flat.add_term(w, c);
        }
        flat.add_term(start, QPoly::from_int(ring, -1));
        if (extract(flat, basis, ring, out, prov, 1, word_str(start)) != flat.size())
            fail(Errc::BadShape, "expansion support escapes the stage-1 basis");
    }
    return out;
}

namespace {

/// The side of the (bb')(xy) / (xy)(bb') comparison whose root step keeps the
/// pure-chi bracket in the opaque z slot: root-expand, expand the inner
/// chi-vs-beta bracket of every term, then re-expand every term at the root.
NAQ chi_opaque_side(const QRing& ring, const W& start, bool swap_top) {
    RuleKind top = all_chi(start.left()) ? RuleKind::Lambda : RuleKind::Mu;
    NAQ p1 = expand_word(ring, top, start, QPoly::from_int(ring, 1), swap_top);
    NAQ p2(ring);
    for (const auto& [w, c] : p1.terms()) {
        Path path = compound_child_path(w);
        W inner = subtree_at(w, path);
        p2 += expand_word_at(ring, w, path, root_rule(inner), c);
    }
    NAQ p3(ring);
    for (const auto& [w, c] : p2.terms())
        p3 += expand_word(ring, root_rule(w), w, c);
    return p3;
}

/// The side whose root step keeps (bb') opaque: root-expand, then expand each
/// term's inner (bb')-vs-chi bracket.
NAQ beta_opaque_side(const QRing& ring, const W& start, bool swap_top) {
    RuleKind top = all_chi(start.left()) ? RuleKind::Mu : RuleKind::Lambda;
    NAQ p1 = expand_word(ring, top, start, QPoly::from_int(ring, 1), swap_top);
    NAQ p2(ring);
    for (const auto& [w, c] : p1.terms()) {
        Path path = compound_child_path(w);
        W inner = subtree_at(w, path);
        p2 += expand_word_at(ring, w, path, root_rule(inner), c);
    }
    return p2;
}

/// Mixed-product basis for one beta/chi pairing: all products of the two-letter
/// words over (beta1, chi1) and (beta2, chi2), ordered as printed.
std::vector<W> mixed_basis(const W& b1, const W& c1, const W& b2, const W& c2) {
    const W u = W::prod(b1, c1);   // (b c1)
    const W up = W::prod(c1, b1);  // (c1 b)
    const W v = W::prod(b2, c2);   // (b' c2)
    const W vp = W::prod(c2, b2);  // (c2 b')
    return {
        W::prod(v, u),  W::prod(vp, u),  W::prod(u, v),  W::prod(u, vp),
        W::prod(v, up), W::prod(vp, up), W::prod(up, v), W::prod(up, vp),
    };
}

/// The kappa-block word list for chi letter z: the MuRule template applied to
/// (bb')z, in template order.
std::vector<W> kappa_basis(const W& z) {
    const W b = leaf_b(), bp = leaf_bp();
    return {
        W::prod(W::prod(z, b), bp), W::prod(W::prod(b, z), bp),
        W::prod(bp, W::prod(z, b)), W::prod(bp, W::prod(b, z)),
        W::prod(W::prod(z, bp), b), W::prod(W::prod(bp, z), b),
        W::prod(b, W::prod(z, bp)), W::prod(b, W::prod(bp, z)),
    };
}

std::vector<QPoly> generate_delta_stage(const QRing& ring, const W& start, int pipeline,
                                        std::vector<Provenance>* prov, bool swap_top) {
    NAQ delta = chi_opaque_side(ring, start, swap_top);
    delta -= beta_opaque_side(ring, start, swap_top);

    const W b = leaf_b(), bp = leaf_bp(), x = leaf_x(), y = leaf_y();

    std::vector<QPoly> out;
    size_t support = delta.size();

    // the two mixed bases, then kappa(b,b',x) against y, then kappa(b,b',y)
    // against x, each on both sides
    std::vector<std::pair<std::string, std::vector<W>>> blocks;
    blocks.emplace_back("M1", mixed_basis(b, x, bp, y));
    blocks.emplace_back("M2", mixed_basis(b, y, bp, x));
    {
        std::vector<W> kx = kappa_basis(x), ky = kappa_basis(y);
        std::vector<W> right_y, left_y, right_x, left_x;
        for (const W& w : kx) {
            right_y.push_back(W::prod(w, y));
            left_y.push_back(W::prod(y, w));
        }
        for (const W& w : ky) {
            right_x.push_back(W::prod(w, x));
            left_x.push_back(W::prod(x, w));
        }
        blocks.emplace_back("K(x)*y", std::move(right_y));
        blocks.emplace_back("y*K(x)", std::move(left_y));
        blocks.emplace_back("K(y)*x", std::move(right_x));
        blocks.emplace_back("x*K(y)", std::move(left_x));
    }

    size_t covered = 0;
    for (const auto& [name, words] : blocks)
        covered += extract(delta, words, ring, out, prov, pipeline, name);
    // the six blocks are disjoint and must jointly cover the difference
    if (covered != support)
        fail(Errc::BadShape, "delta support escapes the six coefficient blocks");
    return out;
}

} // namespace

std::vector<QPoly> generate_stage2(const QRing& ring, std::vector<Provenance>* prov,
                                   bool swap_top) {
    const W start = W::prod(W::prod(leaf_b(), leaf_bp()), W::prod(leaf_x(), leaf_y()));
    return generate_delta_stage(ring, start, 2, prov, swap_top);
}

std::vector<QPoly> generate_stage3(const QRing& ring, std::vector<Provenance>* prov,
                                   bool swap_top) {
    const W start = W::prod(W::prod(leaf_x(), leaf_y()), W::prod(leaf_b(), leaf_bp()));
    return generate_delta_stage(ring, start, 3, prov, swap_top);
}

ObstructionSystem generate_full(OrderKind kind) {
    ObstructionSystem sys;
    sys.ring = make_parameter_ring(kind);
    auto s1 = generate_stage1(sys.ring, &sys.provenance);
    auto s2 = generate_stage2(sys.ring, &sys.provenance);
    auto s3 = generate_stage3(sys.ring, &sys.provenance);
    sys.polys.reserve(128);
    for (auto* v : {&s1, &s2, &s3})
        for (auto& p : *v)
            sys.polys.push_back(std::move(p));
    return sys;
}

AppendixData load_appendix(const std::string& path, const QRing& ring) {
    std::ifstream in(path);
    if (!in)
        fail(Errc::MissingData, "cannot open appendix data file '" + path + "'");
    AppendixData data;
    data.ring = ring;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        size_t eq = line.find('=');
        if (line[0] != 'f' || eq == std::string::npos)
            fail(Errc::SyntaxError,
                 path + ":" + std::to_string(lineno) + ": expected 'f<i> = <poly>'");
        int index = std::stoi(line.substr(1, eq - 1));
        std::string raw = line.substr(eq + 1);
        size_t a = raw.find_first_not_of(" \t");
        size_t z = raw.find_last_not_of(" \t\r");
        raw = a == std::string::npos ? "" : raw.substr(a, z - a + 1);
        data.entries.push_back({index, parse_poly(std::string_view(raw), ring), raw});
    }
    return data;
}

VerifyReport verify_appendix(const std::vector<QPoly>& system,
                             const std::vector<QPoly>& reference) {
    if (system.size() != reference.size())
        fail(Errc::LengthMismatch, "system has " + std::to_string(system.size()) +
                                       " polynomials, reference " +
                                       std::to_string(reference.size()));
    VerifyReport report;
    report.total = static_cast<int>(system.size());
    for (size_t i = 0; i < system.size(); ++i) {
        if (system[i] == reference[i])
            ++report.matched;
        else
            report.mismatches.push_back(
                {static_cast<int>(i) + 1, system[i].str(), reference[i].str()});
    }
    return report;
}

std::vector<QPoly> mini_system(const QRing& ring) {
    QPoly l = QPoly::variable(ring, 0);
    QPoly lp = QPoly::variable(ring, 1);
    QPoly one = QPoly::from_int(ring, 1);
    return {l - lp, l * l - one, l * l + l};
}

namespace {

/// l<k> -> x(k), m<k> -> y(k); everything else passes through.
std::string script_term_text(const std::string& raw) {
    std::string out;
    out.reserve(raw.size() * 2);
    for (size_t i = 0; i < raw.size(); ++i) {
        char ch = raw[i];
        if ((ch == 'l' || ch == 'm') && i + 1 < raw.size() && isdigit(raw[i + 1])) {
            out += (ch == 'l') ? "x(" : "y(";
            out += raw[i + 1];
            out += ')';
            ++i;
        } else {
            out += ch;
        }
    }
    return out;
}

} // namespace

std::string singular_script(const AppendixData& data, uint32_t characteristic) {
    std::ostringstream os;
    os << "ring r=" << characteristic << ",(x(1..8),y(1..8)),dp;\n";
    for (const auto& e : data.entries)
        os << "poly f(" << e.index << ") = " << script_term_text(e.raw) << ";\n";
    os << "ideal i=f(1.." << data.entries.size() << ");\n";
    os << "ideal si=std(i);\n";
    os << "si;\n";
    return os.str();
}

} // namespace mgb
