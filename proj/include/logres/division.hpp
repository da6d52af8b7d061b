#ifndef LOGRES_DIVISION_HPP
#define LOGRES_DIVISION_HPP

#include "logres/polynomial.hpp"

namespace logres {

// Result of Mora division in the local ring:
//
//     unit * dividend = sum quotients[i] * divisors[i] + remainder
//
// holds exactly, with unit a unit of the local ring (nonzero constant term).
// After the full division no monomial of the remainder is divisible by any
// divisor's leading monomial.
struct DivisionResult {
    Polynomial unit;
    std::vector<Polynomial> quotients;
    Polynomial remainder;

    // Expands the identity and compares with zero.
    bool verify(const Polynomial& dividend, const std::vector<Polynomial>& divisors) const;
};

// When enabled every division verifies its identity by expansion and raises
// InternalInvariant on failure (test mode).
void set_division_self_check(bool enabled);
bool division_self_check_enabled();

// Weak Mora normal form: reduces until the leading monomial of the working
// polynomial is no longer divisible by any divisor's leading monomial.
// Ecart-minimal reducer selection (ties by list position) plus the side list
// of intermediate results guarantees termination.
DivisionResult mora_weak_divide(const Polynomial& p, const std::vector<Polynomial>& divisors);

// Full division: like the weak form but non-divisible leading terms are
// moved to the remainder and reduction continues on the tail. Side-list
// reducers recorded before the first such move stay usable; afterwards no
// new ones are recorded, which keeps the emitted remainder out of the unit
// bookkeeping. A step budget turns a non-terminating tail (possible for
// pathological divisor sets) into a diagnosable error.
DivisionResult mora_divide(const Polynomial& p, const std::vector<Polynomial>& divisors);

} // namespace logres

#endif
