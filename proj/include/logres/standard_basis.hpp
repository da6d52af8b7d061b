#ifndef LOGRES_STANDARD_BASIS_HPP
#define LOGRES_STANDARD_BASIS_HPP

#include "logres/division.hpp"

namespace logres {

// Standard basis of an ideal in the local ring, canonically presented:
// minimal (no leading monomial divides another's), tail-reduced against the
// staircase complement whenever the quotient is finite dimensional, monic,
// sorted with greater leading monomials first.
struct StandardBasis {
    RingPtr ring;
    std::vector<Polynomial> gens;

    bool zero_dimensional() const; // every variable has a pure power among the leading monomials
};

StandardBasis standard_basis(const std::vector<Polynomial>& gens);

// Standard basis with exact representations over the input generators:
// element.poly == sum element.rep[i] * gens[i]. Minimal but not tail-reduced
// (representation tracking is the point here, canonical tails are not).
struct TrackedElement {
    Polynomial poly;
    std::vector<Polynomial> rep;
};

std::vector<TrackedElement> standard_basis_tracked(const std::vector<Polynomial>& gens);

// All s-polynomials of the basis reduce to zero (the Buchberger-Mora
// criterion); exposed for the test suites.
bool spolynomials_reduce_to_zero(const StandardBasis& sb);

} // namespace logres

#endif
