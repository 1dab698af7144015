#ifndef MAGMAGB_VERSION_HPP
#define MAGMAGB_VERSION_HPP

namespace mgb {

inline constexpr const char* kVersion = "0.1.0";

} // namespace mgb

#endif
