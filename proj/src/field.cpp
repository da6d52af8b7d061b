#include "logres/field.hpp"

namespace logres {

FieldElement FieldElement::zero(FieldKind kind) {
    return integer(kind, 0);
}

FieldElement FieldElement::one(FieldKind kind) {
    return integer(kind, 1);
}

FieldElement FieldElement::integer(FieldKind kind, long n) {
    if (kind == FieldKind::Q)
        return FieldElement(Rational(n));
    return FieldElement(RationalFunction(Rational(n)));
}

FieldElement FieldElement::from_rational(FieldKind kind, const Rational& r) {
    if (kind == FieldKind::Q)
        return FieldElement(r);
    return FieldElement(RationalFunction(r));
}

FieldElement FieldElement::parameter() {
    return FieldElement(RationalFunction::parameter());
}

const Rational& FieldElement::rational() const {
    if (!std::holds_alternative<Rational>(v_))
        raise(ErrorCode::TypeMismatch, "expected a rational scalar");
    return std::get<Rational>(v_);
}

const RationalFunction& FieldElement::ratfun() const {
    if (!std::holds_alternative<RationalFunction>(v_))
        raise(ErrorCode::TypeMismatch, "expected a rational function scalar");
    return std::get<RationalFunction>(v_);
}

bool FieldElement::is_zero() const {
    return std::visit([](const auto& x) { return x.is_zero(); }, v_);
}

bool FieldElement::is_one() const {
    return std::visit([](const auto& x) { return x.is_one(); }, v_);
}

void FieldElement::check_same_kind(const FieldElement& a, const FieldElement& b) {
    if (a.kind() != b.kind())
        raise(ErrorCode::TypeMismatch, "mixed Q and Q(t) scalars in one operation");
}

FieldElement FieldElement::operator-() const {
    return std::visit([](const auto& x) { return FieldElement(-x); }, v_);
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    FieldElement::check_same_kind(a, b);
    if (a.kind() == FieldKind::Q)
        return FieldElement(a.rational() + b.rational());
    return FieldElement(a.ratfun() + b.ratfun());
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    FieldElement::check_same_kind(a, b);
    if (a.kind() == FieldKind::Q)
        return FieldElement(a.rational() - b.rational());
    return FieldElement(a.ratfun() - b.ratfun());
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    FieldElement::check_same_kind(a, b);
    if (a.kind() == FieldKind::Q)
        return FieldElement(a.rational() * b.rational());
    return FieldElement(a.ratfun() * b.ratfun());
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    FieldElement::check_same_kind(a, b);
    if (a.kind() == FieldKind::Q)
        return FieldElement(a.rational() / b.rational());
    return FieldElement(a.ratfun() / b.ratfun());
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.kind() != b.kind())
        return false;
    if (a.kind() == FieldKind::Q)
        return a.rational() == b.rational();
    return a.ratfun() == b.ratfun();
}

FieldElement FieldElement::inverse() const {
    return std::visit([](const auto& x) { return FieldElement(x.inverse()); }, v_);
}

Rational FieldElement::substitute_parameter(const Rational& value) const {
    return ratfun().eval(value);
}

std::string FieldElement::str(const std::string& param) const {
    if (kind() == FieldKind::Q)
        return rational().str();
    return ratfun().str(param);
}

} // namespace logres
