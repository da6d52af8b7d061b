#ifndef LOGRES_FRACTION_HPP
#define LOGRES_FRACTION_HPP

#include "logres/polynomial.hpp"

namespace logres {

// Element of the local ring O_{X,O}: polynomial numerator over a unit
// denominator (nonzero constant term). No multivariate gcd is performed;
// fractions may carry common unit factors and equality is tested by
// cross-multiplication, which is exact.
class LocalFraction {
public:
    LocalFraction() = default;
    explicit LocalFraction(Polynomial num);
    LocalFraction(Polynomial num, Polynomial den);

    static LocalFraction zero(RingPtr ring) { return LocalFraction(Polynomial(std::move(ring))); }

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    const RingPtr& ring() const { return num_.ring(); }

    bool is_zero() const { return num_.is_zero(); }

    LocalFraction operator-() const;
    friend LocalFraction operator+(const LocalFraction& a, const LocalFraction& b);
    friend LocalFraction operator-(const LocalFraction& a, const LocalFraction& b);
    friend LocalFraction operator*(const LocalFraction& a, const LocalFraction& b);
    LocalFraction& operator+=(const LocalFraction& o) { return *this = *this + o; }
    LocalFraction& operator-=(const LocalFraction& o) { return *this = *this - o; }

    LocalFraction scaled(const FieldElement& c) const;
    LocalFraction times_poly(const Polynomial& p) const;

    // a/b == c/d iff a*d - c*b == 0 as polynomials.
    bool equals(const LocalFraction& other) const;

    // Formal partial derivative by the quotient rule:
    // d(p/u) = (u dp - p du) / u^2.
    LocalFraction partial_derivative(int var) const;

    LocalFraction substitute_parameter(const Rational& value) const;

    std::string str() const;

private:
    Polynomial num_, den_;
};

} // namespace logres

#endif
