#ifndef LOGRES_FIELD_HPP
#define LOGRES_FIELD_HPP

#include <variant>

#include "logres/ratfun.hpp"

namespace logres {

// Coefficient field of one computation session: Q, or Q(t) when the problem
// declares a deformation parameter. All scalars of a session share the tag.
enum class FieldKind { Q, Qt };

class FieldElement {
public:
    FieldElement() : v_(Rational(0)) {}
    explicit FieldElement(Rational r) : v_(std::move(r)) {}
    explicit FieldElement(RationalFunction f) : v_(std::move(f)) {}

    static FieldElement zero(FieldKind kind);
    static FieldElement one(FieldKind kind);
    static FieldElement integer(FieldKind kind, long n);
    static FieldElement from_rational(FieldKind kind, const Rational& r);
    static FieldElement parameter(); // t, Qt only

    FieldKind kind() const {
        return std::holds_alternative<Rational>(v_) ? FieldKind::Q : FieldKind::Qt;
    }
    const Rational& rational() const;
    const RationalFunction& ratfun() const;

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator-() const;
    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    FieldElement inverse() const;

    // Evaluation of a Q(t) scalar at t = value. Raises Specialization at
    // poles and TypeMismatch when the tag is plain Q.
    Rational substitute_parameter(const Rational& value) const;

    std::string str(const std::string& param = "t") const;

private:
    static void check_same_kind(const FieldElement& a, const FieldElement& b);
    std::variant<Rational, RationalFunction> v_;
};

} // namespace logres

#endif
