#ifndef MAGMAGB_ERROR_HPP
#define MAGMAGB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mgb {

enum class Errc {
    NonPrimeModulus,
    ModulusTooLarge,
    DivisionByZero,
    FieldMismatch,
    LengthMismatch,
    MissingAssignment,
    SyntaxError,
    BadShape,
    BadPath,
    Overflow,
    MissingData,
    IoError,
};

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace mgb

#endif
