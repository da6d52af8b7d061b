#ifndef LOGRES_INVARIANTS_HPP
#define LOGRES_INVARIANTS_HPP

#include "logres/local_algebra.hpp"

namespace logres {

// Generator lists used throughout. The distinguished variable of the ring
// plays the role of x1.
std::vector<Polynomial> jacobi_gens(const Polynomial& f);               // df/dx1 .. df/dxn
std::vector<Polynomial> gamma_gens(const Polynomial& f);                // f, df/dx2 .. df/dxn
std::vector<Polynomial> tjurina_gens(const Polynomial& f);              // f, df/dx1 .. df/dxn

// Rejects f with f(O) != 0 or with a nonvanishing first derivative at the
// origin (a smooth point); the methods assume an isolated singularity at O.
void check_singular_input(const Polynomial& f);

// dim O/(df/dx1,...,df/dxn); NonIsolated when infinite.
int milnor_number(const Polynomial& f);
// dim O/(f, df/dx1,...,df/dxn).
int tjurina_number(const Polynomial& f);
// Milnor number of the restriction of f to the hyperplane {x1 = 0};
// NonGenericCoord when the restriction has a non-isolated singularity.
int hyperplane_milnor(const Polynomial& f);

// True iff the quotient by the ideal is finite dimensional.
bool check_zero_dimensional(const std::vector<Polynomial>& gens);

struct MembershipCertificate {
    bool member = false;
    // for members: unit * p = sum quotients[i] * gens[i], exactly
    Polynomial unit;
    std::vector<Polynomial> quotients;
    // canonical normal form (nonzero iff not a member)
    Polynomial normal_form;

    bool verify(const Polynomial& p, const std::vector<Polynomial>& gens) const;
};

// Membership with an explicit certificate over the given generators.
MembershipCertificate ideal_membership(const Polynomial& p, const std::vector<Polynomial>& gens);

// Canonical normal form of p modulo the ideal of sb: the unique
// representative supported on the staircase complement when the quotient is
// finite dimensional, the fully reduced Mora remainder otherwise. Zero iff p
// lies in the ideal either way.
Polynomial normal_form(const Polynomial& p, const StandardBasis& sb);

// Standard basis of I : (g) = {p : p g in I}. Computed from the kernel of
// multiplication by g on O/I, so I must be zero-dimensional (all uses here
// are); constant g short-circuits to I itself.
StandardBasis ideal_quotient(const std::vector<Polynomial>& gens_I, const Polynomial& g);

// Saito's criterion: f quasi-homogeneous (after a change of coordinates)
// iff f lies in its Jacobi ideal, iff mu = tau.
bool is_quasi_homogeneous(const Polynomial& f);

} // namespace logres

#endif
