#include "logres/ring.hpp"

#include <algorithm>
#include <set>

namespace logres {

Ring::Ring(VariableSet vars, WeightVector weights, FieldKind kind, std::string param_name)
    : vars_(std::move(vars)), weights_(std::move(weights)), kind_(kind),
      param_name_(std::move(param_name)) {
    if (vars_.names.empty())
        raise(ErrorCode::Parse, "empty variable set");
    std::set<std::string> seen(vars_.names.begin(), vars_.names.end());
    if (seen.size() != vars_.names.size())
        raise(ErrorCode::Parse, "duplicate variable names");
    if (weights_.weights.size() != vars_.names.size())
        raise(ErrorCode::Parse, "weight vector arity mismatch");
    for (int w : weights_.weights)
        if (w < 1)
            raise(ErrorCode::Parse, "weights must be positive integers");
    if (vars_.distinguished < 0 || vars_.distinguished >= nvars())
        raise(ErrorCode::Parse, "invalid distinguished variable index");
}

RingPtr Ring::make(std::vector<std::string> names, std::vector<int> weights,
                   FieldKind kind, std::string param_name) {
    VariableSet vs;
    vs.names = std::move(names);
    WeightVector wv;
    wv.weights = std::move(weights);
    return std::make_shared<const Ring>(std::move(vs), std::move(wv), kind,
                                        std::move(param_name));
}

int Ring::max_weight() const {
    return *std::max_element(weights_.weights.begin(), weights_.weights.end());
}

long Ring::weighted_degree(const Monomial& m) const {
    long d = 0;
    for (int i = 0; i < nvars(); ++i)
        d += static_cast<long>(weight(i)) * m[static_cast<size_t>(i)];
    return d;
}

long Ring::total_degree(const Monomial& m) const {
    long d = 0;
    for (int e : m)
        d += e;
    return d;
}

int Ring::compare(const Monomial& a, const Monomial& b) const {
    long da = weighted_degree(a), db = weighted_degree(b);
    if (da != db)
        return da < db ? 1 : -1; // lower weighted degree is greater (local)
    // tie-break within a weight level: the monomial whose trailing exponents
    // are larger is greater (reverse-lexicographic reading from the last
    // variable)
    for (int i = nvars() - 1; i >= 0; --i) {
        int diff = a[static_cast<size_t>(i)] - b[static_cast<size_t>(i)];
        if (diff != 0)
            return diff > 0 ? 1 : -1;
    }
    return 0;
}

Monomial Ring::unit_exponent(int i) const {
    Monomial m = one();
    m[static_cast<size_t>(i)] = 1;
    return m;
}

RingPtr Ring::restricted() const {
    if (nvars() < 2)
        raise(ErrorCode::InternalInvariant, "cannot restrict a univariate ring");
    std::vector<std::string> names;
    std::vector<int> weights;
    for (int i = 0; i < nvars(); ++i) {
        if (i == vars_.distinguished)
            continue;
        names.push_back(name(i));
        weights.push_back(weight(i));
    }
    return Ring::make(std::move(names), std::move(weights), kind_, param_name_);
}

RingPtr Ring::rational_ring() const {
    return Ring::make(vars_.names, weights_.weights, FieldKind::Q, param_name_);
}

bool Ring::same_as(const Ring& other) const {
    return vars_.names == other.vars_.names &&
           vars_.distinguished == other.vars_.distinguished &&
           weights_.weights == other.weights_.weights && kind_ == other.kind_;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < a.size(); ++i)
        r[i] += b[i];
    return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < a.size(); ++i)
        r[i] -= b[i];
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = std::max(a[i], b[i]);
    return r;
}

bool mono_is_one(const Monomial& a) {
    for (int e : a)
        if (e != 0)
            return false;
    return true;
}

} // namespace logres
