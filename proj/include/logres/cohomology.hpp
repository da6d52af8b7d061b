#ifndef LOGRES_COHOMOLOGY_HPP
#define LOGRES_COHOMOLOGY_HPP

#include "logres/invariants.hpp"

namespace logres {

// Order on Grothendieck symbols [1/x^lambda]: dual to the local order, so a
// deeper pole is a greater symbol. +1 when a is the greater symbol.
int symbol_compare(const Ring& ring, const Monomial& a, const Monomial& b);

struct SymbolTerm {
    Monomial index; // lambda, all components >= 1
    FieldElement coeff;
};

// Finite sum of Grothendieck symbols sum c_lambda [1/x^lambda]; the symbols
// of algebraic local cohomology supported at the origin. Terms are kept
// sorted with the greatest symbol (the head) first.
class CohomologyClass {
public:
    CohomologyClass() = default;
    explicit CohomologyClass(RingPtr ring) : ring_(std::move(ring)) {}

    static CohomologyClass from_terms(RingPtr ring, std::vector<SymbolTerm> terms);
    static CohomologyClass symbol(RingPtr ring, const Monomial& lambda,
                                  const FieldElement& c);

    const RingPtr& ring() const { return ring_; }
    const std::vector<SymbolTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    const SymbolTerm& head() const;

    CohomologyClass operator-() const;
    friend CohomologyClass operator+(const CohomologyClass& a, const CohomologyClass& b);
    friend CohomologyClass operator-(const CohomologyClass& a, const CohomologyClass& b);
    friend bool operator==(const CohomologyClass& a, const CohomologyClass& b);
    CohomologyClass scaled(const FieldElement& c) const;

    FieldElement coeff_of(const Monomial& lambda) const;

    std::string str() const; // e.g. "[x^2*y*z^3] - 1/3*t*[x*y^3*z]"

private:
    RingPtr ring_;
    std::vector<SymbolTerm> terms_;
};

// Contraction action: x^a * [1/x^lambda] = [1/x^(lambda-a)] when every
// component of lambda-a stays >= 1, and zero otherwise; extended linearly.
CohomologyClass act(const Polynomial& p, const CohomologyClass& c);

// Grothendieck point residue: coefficient of the socle symbol
// [1/(x_1 x_2 ... x_n)] in act(p, c).
FieldElement residue_pairing(const Polynomial& p, const CohomologyClass& c);

enum class SpaceRole { Gamma, Delta, T, J };

struct CohomologySpace {
    RingPtr ring;
    SpaceRole role;
    std::vector<CohomologyClass> basis; // echelon: distinct heads, head coefficient 1
    int dimension() const { return static_cast<int>(basis.size()); }
};

// Basis of {phi : p * phi = 0 for all p in annihilators}, found degree by
// degree: candidate symbols of weighted degree <= d, exact kernel, increment
// d until the dimension reaches stop_dimension and one extra level adds
// nothing. max_weighted_degree converts a non-terminating search into a
// BoundExceeded error; callers derive it from independently computed
// invariants (4*(mu + mu_hyperplane + n) in the pipelines).
CohomologySpace annihilated_space(const std::vector<Polynomial>& annihilators,
                                  int stop_dimension, long max_weighted_degree,
                                  SpaceRole role);

// Basis of {g * phi : phi in gamma}; role Delta.
CohomologySpace image_space(const Polynomial& g, const CohomologySpace& gamma);

// Basis of {phi in gamma : g * phi = 0}; role T. When expected_dimension is
// nonnegative a mismatch raises InconsistentInvariants (the kernel dimension
// must be the Tjurina number).
CohomologySpace kernel_space(const Polynomial& g, const CohomologySpace& gamma,
                             int expected_dimension = -1);

// Reduced standard basis of Ann(space) = {p : p * phi = 0 for all phi}. The
// heads of the echelon basis give the staircase complement (Grothendieck
// duality); the generators are the staircase corners completed by exact
// linear solves against the pairing.
StandardBasis annihilator_standard_basis(const CohomologySpace& space);

} // namespace logres

#endif
