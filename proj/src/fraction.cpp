#include "logres/fraction.hpp"

namespace logres {

namespace {
void check_unit(const Polynomial& den) {
    if (den.is_zero() || den.constant_coeff().is_zero())
        raise(ErrorCode::InternalInvariant,
              "local fraction denominator is not a unit: " + den.str());
}
} // namespace

LocalFraction::LocalFraction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::constant(num_.ring(), 1)) {}

LocalFraction::LocalFraction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    check_unit(den_);
    if (num_.is_zero())
        den_ = Polynomial::constant(num_.ring(), 1);
}

LocalFraction LocalFraction::operator-() const {
    LocalFraction r = *this;
    r.num_ = -r.num_;
    return r;
}

LocalFraction operator+(const LocalFraction& a, const LocalFraction& b) {
    if (a.num_.is_zero())
        return b;
    if (b.num_.is_zero())
        return a;
    if (a.den_ == b.den_)
        return LocalFraction(a.num_ + b.num_, a.den_);
    return LocalFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

LocalFraction operator-(const LocalFraction& a, const LocalFraction& b) {
    return a + (-b);
}

LocalFraction operator*(const LocalFraction& a, const LocalFraction& b) {
    return LocalFraction(a.num_ * b.num_, a.den_ * b.den_);
}

LocalFraction LocalFraction::scaled(const FieldElement& c) const {
    if (c.is_zero())
        return LocalFraction(Polynomial(ring()));
    return LocalFraction(num_.scaled(c), den_);
}

LocalFraction LocalFraction::times_poly(const Polynomial& p) const {
    return LocalFraction(num_ * p, den_);
}

bool LocalFraction::equals(const LocalFraction& other) const {
    return (num_ * other.den_ - other.num_ * den_).is_zero();
}

LocalFraction LocalFraction::partial_derivative(int var) const {
    Polynomial dn = num_.partial_derivative(var);
    if (den_.is_constant())
        return LocalFraction(dn, den_);
    Polynomial dd = den_.partial_derivative(var);
    return LocalFraction(dn * den_ - num_ * dd, den_ * den_);
}

LocalFraction LocalFraction::substitute_parameter(const Rational& value) const {
    Polynomial den = den_.substitute_parameter(value);
    if (den.constant_coeff().is_zero())
        raise(ErrorCode::Specialization,
              "denominator " + den_.str() + " degenerates at t = " + value.str());
    return LocalFraction(num_.substitute_parameter(value), std::move(den));
}

std::string LocalFraction::str() const {
    if (den_.is_constant() && den_.constant_coeff().is_one())
        return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace logres
