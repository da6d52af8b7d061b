#ifndef LOGRES_ERROR_HPP
#define LOGRES_ERROR_HPP

#include <stdexcept>
#include <string>

namespace logres {

// Stable error codes surfaced by the CLI. Internal throw sites pick the
// closest code; the CLI maps codes to exit status (2 input, 3 math
// precondition, 4 internal invariant).
enum class ErrorCode {
    Parse,              // bad input text (problem file, polynomial grammar)
    TypeMismatch,       // mixing Q and Q(t) scalars
    DivisionByZero,     // field division by zero / malformed scalar
    Specialization,     // denominator vanishes at the requested t value
    NonIsolated,        // quotient not finite dimensional
    NonGenericCoord,    // (f, df/dx2, ..., df/dxn) fails zero-dimensionality
    NonSingularInput,   // f(O) != 0 or the origin is a smooth point
    InconsistentInvariants, // computed dimension contradicts supplied mu/tau
    BoundExceeded,      // degree-by-degree search failed to stabilize
    PreconditionViolation,  // nonzero remainder where membership was promised
    NotIntegrallyClosed,    // f^2 not in (f dF, dF dF) at degree 2
    InternalInvariant,  // a checked identity failed; a bug, not user error
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace logres

#endif
