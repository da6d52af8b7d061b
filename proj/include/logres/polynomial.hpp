#ifndef LOGRES_POLYNOMIAL_HPP
#define LOGRES_POLYNOMIAL_HPP

#include <map>

#include "logres/ring.hpp"

namespace logres {

struct Term {
    Monomial mono;
    FieldElement coeff;
};

// Multivariate polynomial with exact coefficients. Terms are kept sorted in
// the ring's local order, leading term first, and never store zeros.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
    static Polynomial constant(RingPtr ring, const FieldElement& c);
    static Polynomial constant(RingPtr ring, long n);
    static Polynomial monomial_term(RingPtr ring, const Monomial& m, const FieldElement& c);
    static Polynomial variable(RingPtr ring, int i);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const FieldElement& leading_coeff() const { return leading_term().coeff; }

    // max weighted degree over terms minus weighted degree of the leading
    // monomial; the termination measure of Mora reduction.
    long ecart() const;
    long order_degree() const; // weighted degree of the leading monomial
    long max_weighted_degree() const;

    FieldElement constant_coeff() const; // coefficient of the monomial 1
    bool is_unit() const { return !is_zero() && !constant_coeff().is_zero(); }
    bool is_constant() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

    Polynomial scaled(const FieldElement& c) const;
    Polynomial times_term(const FieldElement& c, const Monomial& m) const;
    Polynomial monic() const; // leading coefficient scaled to 1

    Polynomial partial_derivative(int var) const;
    // Substitute the distinguished variable by zero; result lives in the
    // restricted ring in the remaining n-1 variables.
    Polynomial restrict_hyperplane() const;
    // Evaluate coefficients at t = value; result lives over Q.
    Polynomial substitute_parameter(const Rational& value) const;

    std::string str() const;

private:
    void sort_and_combine();
    RingPtr ring_;
    std::vector<Term> terms_;
};

// Total order on polynomials (by leading monomials, then coefficients as
// strings); used only to give printed bases a deterministic sequence.
bool poly_less(const Polynomial& a, const Polynomial& b);

void check_same_ring(const Polynomial& a, const Polynomial& b);

} // namespace logres

#endif
