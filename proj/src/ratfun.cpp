#include "logres/ratfun.hpp"

namespace logres {

UniPoly::UniPoly(Rational constant) {
    if (!constant.is_zero())
        coeffs_.push_back(std::move(constant));
}

UniPoly UniPoly::monomial(const Rational& c, int degree) {
    UniPoly p;
    if (!c.is_zero()) {
        p.coeffs_.assign(static_cast<size_t>(degree) + 1, Rational(0));
        p.coeffs_.back() = c;
    }
    return p;
}

const Rational& UniPoly::coeff(int i) const {
    static const Rational zero(0);
    if (i < 0 || i >= static_cast<int>(coeffs_.size()))
        return zero;
    return coeffs_[static_cast<size_t>(i)];
}

Rational UniPoly::leading_coeff() const {
    return is_zero() ? Rational(0) : coeffs_.back();
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
    r.trim();
    return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    return a + (-b);
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    if (a.is_zero() || b.is_zero())
        return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    r.trim();
    return r;
}

UniPoly UniPoly::scaled(const Rational& c) const {
    UniPoly r;
    if (c.is_zero())
        return r;
    r.coeffs_ = coeffs_;
    for (auto& x : r.coeffs_)
        x *= c;
    return r;
}

void UniPoly::divrem(const UniPoly& d, UniPoly& q, UniPoly& r) const {
    if (d.is_zero())
        raise(ErrorCode::DivisionByZero, "univariate division by zero polynomial");
    q = UniPoly();
    r = *this;
    Rational lc_inv = d.leading_coeff().inverse();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        Rational c = r.leading_coeff() * lc_inv;
        UniPoly term = UniPoly::monomial(c, k);
        q = q + term;
        r = r - term * d;
    }
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly q, r;
        a.divrem(b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero())
        return a;
    return a.scaled(a.leading_coeff().inverse()); // monic
}

Rational UniPoly::eval(const Rational& t0) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * t0 + *it;
    return acc;
}

std::string UniPoly::str(const std::string& param) const {
    if (is_zero())
        return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeff(i);
        if (c.is_zero())
            continue;
        bool negative = c.sign() < 0;
        Rational mag = negative ? -c : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? "-" : "+";
        }
        if (i == 0) {
            out += mag.str();
        } else {
            if (!mag.is_one())
                out += mag.str() + "*";
            out += param;
            if (i > 1)
                out += "^" + std::to_string(i);
        }
    }
    return out;
}

RationalFunction::RationalFunction(UniPoly num, UniPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        raise(ErrorCode::DivisionByZero, "rational function with zero denominator");
    reduce();
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = UniPoly(Rational(1));
        return;
    }
    UniPoly g = UniPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        UniPoly q, r;
        num_.divrem(g, q, r);
        num_ = q;
        den_.divrem(g, q, r);
        den_ = q;
    }
    Rational lc = den_.leading_coeff();
    if (!lc.is_one()) {
        Rational inv = lc.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

bool RationalFunction::is_one() const {
    return den_.degree() == 0 && num_.degree() == 0 && num_.coeff(0).is_one();
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero())
        raise(ErrorCode::DivisionByZero, "rational function division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero())
        raise(ErrorCode::DivisionByZero, "inverse of zero rational function");
    return RationalFunction(den_, num_);
}

Rational RationalFunction::eval(const Rational& t0) const {
    Rational d = den_.eval(t0);
    if (d.is_zero())
        raise(ErrorCode::Specialization,
              "denominator " + den_.str("t") + " vanishes at t = " + t0.str());
    return num_.eval(t0) / d;
}

std::string RationalFunction::str(const std::string& param) const {
    if (is_polynomial())
        return num_.str(param);
    std::string n = num_.str(param);
    std::string d = den_.str(param);
    return "(" + n + ")/(" + d + ")";
}

} // namespace logres
