#ifndef HYCART_ERROR_HPP
#define HYCART_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hycart {

/// Failure categories raised by the library.
///
/// `invalid_input` style codes mean the caller handed us something outside
/// the supported domain (a singular curve, an unsupported characteristic, a
/// cap violation).  `internal_check` style codes mean an exact certificate
/// that should hold by theory failed; callers should treat those as bugs or
/// as evidence that the input object was not what it claimed to be.
enum class errc {
  invalid_input,        // malformed parameters, caps exceeded, parse errors
  bad_characteristic,   // p = 2 or a constant that must be invertible is not
  not_smooth,           // the chart equations define a singular curve
  precision_exhausted,  // series budget too small for the requested residue
  window_not_stabilized,// quotient dimension kept changing while enlarging
  fixed_space_not_saturated, // extension search hit its cap before saturating
  gauge_missing,        // operation needs a Frobenius gauge, cocycle has none
  gauge_unsolvable,     // no gauge exists (an obstruction class is nonzero)
  gluing_violated,      // chartwise images disagree on the overlap
  class_not_fixed,      // requested extension class is not Frobenius fixed
  no_fixed_class,       // no nonzero Frobenius fixed class exists
  internal_check        // any other exact consistency certificate failed
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
  throw error(code, what);
}

inline void check(bool ok, errc code, const std::string& what) {
  if (!ok) raise(code, what);
}

} // namespace hycart

#endif
