#include "magmagb/monomial.hpp"

namespace mgb {

std::string order_kind_str(OrderKind k) {
    switch (k) {
    case OrderKind::Lex: return "lp";
    case OrderKind::DegLex: return "Dp";
    case OrderKind::DegRevLex: return "dp";
    }
    return "?";
}

OrderKind parse_order_kind(const std::string& text) {
    if (text == "dp")
        return OrderKind::DegRevLex;
    if (text == "Dp")
        return OrderKind::DegLex;
    if (text == "lp")
        return OrderKind::Lex;
    fail(Errc::SyntaxError, "unknown monomial order '" + text + "' (expected dp, Dp or lp)");
}

} // namespace mgb
