#ifndef MAGMAGB_OBSTRUCTION_HPP
#define MAGMAGB_OBSTRUCTION_HPP

#include <string>
#include <vector>

#include "magmagb/expand.hpp"
#include "magmagb/poly.hpp"

namespace mgb {

using QPoly = Poly<RationalField>;
using QRing = RingPtr<RationalField>;

/// The 16-variable parameter ring K[l1..l8, m1..m8], with script-compatible
/// aliases x(1)..x(8), y(1)..y(8). Precedence l1 > ... > l8 > m1 > ... > m8.
QRing make_parameter_ring(OrderKind kind = OrderKind::DegRevLex);

/// Two-variable ring for the commutative mini system.
QRing make_mini_ring(OrderKind kind = OrderKind::Lex);

struct Provenance {
    int pipeline = 0;        // 1, 2 or 3
    std::string block;       // start word or coefficient block
    std::string basis_word;  // the word whose coefficient this is
};

/// The 128 generated polynomials f1..f128 in generation order:
/// 1..32 from pipeline 1, 33..80 from pipeline 2, 81..128 from pipeline 3.
struct ObstructionSystem {
    QRing ring;
    std::vector<QPoly> polys;
    std::vector<Provenance> provenance;
};

/// Pipeline 1: expand (bx)y, (xb)y, y(bx), y(xb) down to the eight-word basis
/// and collect coefficients, subtracting the start word itself.
std::vector<QPoly> generate_stage1(const QRing& ring,
                                   std::vector<Provenance>* provenance = nullptr);

/// Pipeline 2: both decompositions of (bb')(xy); difference collected over the
/// two mixed bases and the four kappa blocks. With swap_top set, the very
/// first (root-step) expansion of each side draws its coefficients from the
/// opposite parameter bank.
std::vector<QPoly> generate_stage2(const QRing& ring,
                                   std::vector<Provenance>* provenance = nullptr,
                                   bool swap_top = false);

/// Pipeline 3: same for (xy)(bb'), with the root rules of the two sides swapped.
std::vector<QPoly> generate_stage3(const QRing& ring,
                                   std::vector<Provenance>* provenance = nullptr,
                                   bool swap_top = false);

ObstructionSystem generate_full(OrderKind kind = OrderKind::DegRevLex);

/// Bundled transcription of the printed coefficient table. `raw` keeps each
/// line's text so exports can reproduce the printed term order.
struct AppendixEntry {
    int index = 0;
    QPoly poly;
    std::string raw;
};

struct AppendixData {
    QRing ring;
    std::vector<AppendixEntry> entries;
};

AppendixData load_appendix(const std::string& path, const QRing& ring);

struct VerifyMismatch {
    int index = 0;
    std::string generated;
    std::string reference;
};

struct VerifyReport {
    int total = 0;
    int matched = 0;
    std::vector<VerifyMismatch> mismatches;
    bool ok() const { return matched == total && total > 0; }
};

/// Index-by-index exact comparison after canonical term sorting.
VerifyReport verify_appendix(const std::vector<QPoly>& system,
                             const std::vector<QPoly>& reference);

/// The commutative-case constraint set {l - lp, l^2 - 1, l^2 + l}.
std::vector<QPoly> mini_system(const QRing& mini_ring);

/// External-CAS script: ring header for the given characteristic, one
/// poly f(i) = ...; line per entry in the printed term order, and the
/// ideal/std/print footer.
std::string singular_script(const AppendixData& data, uint32_t characteristic);

} // namespace mgb

#endif
