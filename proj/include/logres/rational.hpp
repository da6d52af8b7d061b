#ifndef LOGRES_RATIONAL_HPP
#define LOGRES_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "logres/error.hpp"

namespace logres {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number. Kept in lowest terms with positive denominator
// (cpp_rational maintains exactly that canonical form).
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}
    Rational(const BigInt& n) : value_(n) {}
    Rational(const BigInt& num, const BigInt& den);
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    static Rational parse(const std::string& text);

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_.is_zero(); }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return value_.sign(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }

    Rational inverse() const;

    // "p" for integers, "p/q" otherwise.
    std::string str() const;

private:
    boost::multiprecision::cpp_rational value_;
};

} // namespace logres

#endif
