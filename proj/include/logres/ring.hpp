#ifndef LOGRES_RING_HPP
#define LOGRES_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "logres/field.hpp"

namespace logres {

// Exponent vector; length = number of variables of the ambient ring.
using Monomial = std::vector<int>;

struct VariableSet {
    std::vector<std::string> names;
    // Position of the "first variable" x1 of the polar method. Problem files
    // always put it first; kept as a field so restricted rings stay honest.
    int distinguished = 0;
};

struct WeightVector {
    std::vector<int> weights; // all >= 1
};

// Shared immutable context: variables, weights, coefficient field, and the
// local monomial order.
//
// The order is fixed throughout: weighted degree ascending as the primary key
// (so 1 is the largest monomial), reverse-lexicographic tie-break in the
// given variable order. This is the <^-1 order of the computation and is the
// canonical presentation order for all printed bases.
class Ring {
public:
    Ring(VariableSet vars, WeightVector weights, FieldKind kind,
         std::string param_name = "t");

    static std::shared_ptr<const Ring> make(std::vector<std::string> names,
                                            std::vector<int> weights,
                                            FieldKind kind,
                                            std::string param_name = "t");

    int nvars() const { return static_cast<int>(vars_.names.size()); }
    const std::string& name(int i) const { return vars_.names[static_cast<size_t>(i)]; }
    const VariableSet& vars() const { return vars_; }
    const WeightVector& weights() const { return weights_; }
    int weight(int i) const { return weights_.weights[static_cast<size_t>(i)]; }
    int max_weight() const;
    FieldKind kind() const { return kind_; }
    const std::string& param_name() const { return param_name_; }

    long weighted_degree(const Monomial& m) const;
    long total_degree(const Monomial& m) const;

    // +1 when a is greater than b in the local order, -1 when smaller.
    int compare(const Monomial& a, const Monomial& b) const;

    Monomial one() const { return Monomial(static_cast<size_t>(nvars()), 0); }
    Monomial unit_exponent(int i) const;

    // Ring in the remaining variables after setting the distinguished
    // variable to zero.
    std::shared_ptr<const Ring> restricted() const;
    // Same variables and weights over plain Q (for t-specialization).
    std::shared_ptr<const Ring> rational_ring() const;

    bool same_as(const Ring& other) const;

private:
    VariableSet vars_;
    WeightVector weights_;
    FieldKind kind_;
    std::string param_name_;
};

using RingPtr = std::shared_ptr<const Ring>;

bool mono_divides(const Monomial& a, const Monomial& b); // a | b
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b); // a / b, requires b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_is_one(const Monomial& a);

} // namespace logres

#endif
