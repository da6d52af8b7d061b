#ifndef LOGRES_LOCAL_ALGEBRA_HPP
#define LOGRES_LOCAL_ALGEBRA_HPP

#include "logres/linalg.hpp"
#include "logres/standard_basis.hpp"

#include <map>

namespace logres {

// Monomial basis of a finite-dimensional quotient O/I: the staircase
// complement of the leading-term ideal, listed with greater monomials first
// (so the constant monomial leads).
struct QuotientBasis {
    std::vector<Monomial> monomials;
    int dimension() const { return static_cast<int>(monomials.size()); }
};

// The finite-dimensional algebra O/I attached to a standard basis of a
// zero-dimensional ideal. Provides canonical normal forms (exact class
// representatives in the span of the monomial basis) computed by rewriting:
// a monomial in the leading-term ideal rewrites through the first matching
// generator, and any monomial of total degree >= dim vanishes (m^dim is
// contained in any ideal of colength dim). The rewriting is unit-free, so
// normal forms are linear and class-exact; this is what reductions of
// divergences and connection entries rely on.
class LocalAlgebra {
public:
    static LocalAlgebra build(const StandardBasis& sb); // NonIsolated unless zero-dimensional

    const StandardBasis& basis() const { return sb_; }
    const QuotientBasis& monomials() const { return quotient_; }
    int dimension() const { return quotient_.dimension(); }
    const RingPtr& ring() const { return sb_.ring; }

    int index_of(const Monomial& m) const; // -1 when not a basis monomial

    Vec nf_coords(const Polynomial& p) const;
    Polynomial nf_poly(const Polynomial& p) const;
    Polynomial coords_to_poly(const Vec& v) const;

    bool contains(const Polynomial& p) const { return nf_is_zero(p); }
    bool nf_is_zero(const Polynomial& p) const;

    // Class of a product of two classes.
    Vec mul_classes(const Vec& a, const Vec& b) const;

    // w with u*w == 1 in O/I; exact linear solve over the monomial basis.
    // Requires u to be a unit of the local ring.
    Polynomial unit_inverse(const Polynomial& u) const;

    // Canonical class of a local fraction p/q (q a unit): nf(p * q^{-1}).
    Vec fraction_coords(const Polynomial& num, const Polynomial& den) const;

    // Polynomials spanning {classes killed by multiplication with g}.
    std::vector<Polynomial> multiplication_kernel(const Polynomial& g) const;

private:
    const Vec& monomial_class(const Monomial& m) const;

    StandardBasis sb_;
    QuotientBasis quotient_;
    std::map<Monomial, int> index_;
    long nilpotency_ = 0; // m^nilpotency lies in the ideal
    mutable std::map<Monomial, Vec> classes_;
};

// Staircase complement of the leading-term ideal of sb; NonIsolated when the
// quotient is infinite dimensional. Dimension by staircase counting.
QuotientBasis quotient_monomial_basis(const StandardBasis& sb);

} // namespace logres

#endif
