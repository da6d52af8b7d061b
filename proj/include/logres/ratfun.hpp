#ifndef LOGRES_RATFUN_HPP
#define LOGRES_RATFUN_HPP

#include <string>
#include <vector>

#include "logres/rational.hpp"

namespace logres {

// Dense univariate polynomial over Q, used as numerator/denominator of
// rational functions in the deformation parameter.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(Rational constant);
    static UniPoly monomial(const Rational& c, int degree);
    static UniPoly variable() { return monomial(Rational(1), 1); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    const Rational& coeff(int i) const;
    Rational leading_coeff() const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

    UniPoly scaled(const Rational& c) const;
    // Euclidean division: *this = q*d + r with deg r < deg d.
    void divrem(const UniPoly& d, UniPoly& q, UniPoly& r) const;
    static UniPoly gcd(UniPoly a, UniPoly b); // monic gcd, 0 for (0,0)

    Rational eval(const Rational& t0) const;
    std::string str(const std::string& param) const;

private:
    void trim();
    std::vector<Rational> coeffs_; // coeffs_[i] multiplies param^i; no trailing zeros
};

// Rational function in one parameter: numerator/denominator reduced eagerly,
// denominator monic. A single deformation parameter only; multi-parameter
// coefficient systems are out of scope.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    RationalFunction(Rational constant) : num_(constant), den_(Rational(1)) {}
    RationalFunction(UniPoly num, UniPoly den);
    static RationalFunction parameter() { return RationalFunction(UniPoly::variable(), UniPoly(Rational(1))); }

    const UniPoly& numerator() const { return num_; }
    const UniPoly& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_polynomial() const { return den_.degree() == 0; }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b);

    RationalFunction inverse() const;

    // Evaluation at t = t0; raises Specialization when the denominator
    // vanishes there (a non-generic parameter value).
    Rational eval(const Rational& t0) const;

    std::string str(const std::string& param) const;

private:
    void reduce();
    UniPoly num_, den_;
};

} // namespace logres

#endif
