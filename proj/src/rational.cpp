#include "logres/rational.hpp"

namespace logres {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den.is_zero())
        raise(ErrorCode::DivisionByZero, "rational with zero denominator");
    value_ = boost::multiprecision::cpp_rational(num, den);
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        return Rational(num, den);
    } catch (const std::exception&) {
        raise(ErrorCode::Parse, "malformed rational literal: " + text);
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        raise(ErrorCode::DivisionByZero, "rational division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero())
        raise(ErrorCode::DivisionByZero, "inverse of zero");
    Rational r(1);
    r.value_ /= value_;
    return r;
}

std::string Rational::str() const {
    if (is_integer())
        return numerator().str();
    return numerator().str() + "/" + denominator().str();
}

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::Parse: return "E_PARSE";
    case ErrorCode::TypeMismatch: return "E_PARSE";
    case ErrorCode::DivisionByZero: return "E_PARSE";
    case ErrorCode::Specialization: return "E_SPECIALIZATION";
    case ErrorCode::NonIsolated: return "E_NONISOLATED";
    case ErrorCode::NonGenericCoord: return "E_NONGENERIC_COORD";
    case ErrorCode::NonSingularInput: return "E_NONISOLATED";
    case ErrorCode::InconsistentInvariants: return "E_INTERNAL_INVARIANT";
    case ErrorCode::BoundExceeded: return "E_INTERNAL_INVARIANT";
    case ErrorCode::PreconditionViolation: return "E_INTERNAL_INVARIANT";
    case ErrorCode::NotIntegrallyClosed: return "E_NONISOLATED";
    case ErrorCode::InternalInvariant: return "E_INTERNAL_INVARIANT";
    }
    return "E_INTERNAL_INVARIANT";
}

} // namespace logres
