#include "logres/standard_basis.hpp"
#include "logres/local_algebra.hpp"

#include <algorithm>
#include <deque>

namespace logres {

namespace {

Polynomial spolynomial(const Polynomial& a, const Polynomial& b) {
    Monomial l = mono_lcm(a.leading_monomial(), b.leading_monomial());
    Polynomial left = a.times_term(a.leading_coeff().inverse(), mono_div(l, a.leading_monomial()));
    Polynomial right = b.times_term(b.leading_coeff().inverse(), mono_div(l, b.leading_monomial()));
    return left - right;
}

std::vector<Polynomial> nonzero_inputs(const std::vector<Polynomial>& gens) {
    std::vector<Polynomial> out;
    for (const auto& g : gens)
        if (!g.is_zero())
            out.push_back(g);
    return out;
}

// Buchberger loop; fills `basis` (which seeds it). Reduction is the weak
// Mora normal form against the current basis.
void complete_basis(std::vector<Polynomial>& basis) {
    std::deque<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j)
            pairs.emplace_back(i, j);
    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        Polynomial s = spolynomial(basis[i], basis[j]);
        if (s.is_zero())
            continue;
        DivisionResult d = mora_weak_divide(s, basis);
        if (d.remainder.is_zero())
            continue;
        basis.push_back(d.remainder);
        for (size_t k = 0; k + 1 < basis.size(); ++k)
            pairs.emplace_back(k, basis.size() - 1);
    }
}

std::vector<size_t> minimal_indices(const std::vector<Polynomial>& basis) {
    std::vector<size_t> keep;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j)
                continue;
            const Monomial& mi = basis[i].leading_monomial();
            const Monomial& mj = basis[j].leading_monomial();
            if (mono_divides(mj, mi) && (mi != mj || j < i))
                redundant = true;
        }
        if (!redundant)
            keep.push_back(i);
    }
    return keep;
}

} // namespace

bool StandardBasis::zero_dimensional() const {
    if (gens.empty())
        return false;
    for (int v = 0; v < ring->nvars(); ++v) {
        bool has_pure_power = false;
        for (const auto& g : gens) {
            const Monomial& m = g.leading_monomial();
            bool pure = m[static_cast<size_t>(v)] > 0;
            for (int u = 0; u < ring->nvars() && pure; ++u)
                if (u != v && m[static_cast<size_t>(u)] != 0)
                    pure = false;
            if (pure) {
                has_pure_power = true;
                break;
            }
        }
        if (!has_pure_power)
            return false;
    }
    return true;
}

StandardBasis standard_basis(const std::vector<Polynomial>& gens) {
    std::vector<Polynomial> work = nonzero_inputs(gens);
    if (work.empty())
        raise(ErrorCode::InternalInvariant, "standard basis of the zero ideal");
    RingPtr ring = work.front().ring();
    complete_basis(work);

    std::vector<Polynomial> minimal;
    for (size_t i : minimal_indices(work))
        minimal.push_back(work[i].monic());

    StandardBasis sb{ring, std::move(minimal)};
    if (sb.zero_dimensional()) {
        // canonical tails: replace each tail by the class representative of
        // minus the leading monomial, so tails live in the staircase
        // complement
        LocalAlgebra algebra = LocalAlgebra::build(sb);
        std::vector<Polynomial> reduced;
        for (const auto& g : sb.gens) {
            Polynomial lt = Polynomial::monomial_term(ring, g.leading_monomial(),
                                                      FieldElement::one(ring->kind()));
            Polynomial tail = g - lt;
            reduced.push_back(lt + algebra.nf_poly(tail));
        }
        sb.gens = std::move(reduced);
    }
    std::sort(sb.gens.begin(), sb.gens.end(), poly_less);
    return sb;
}

std::vector<TrackedElement> standard_basis_tracked(const std::vector<Polynomial>& gens) {
    std::vector<Polynomial> inputs = nonzero_inputs(gens);
    if (inputs.empty())
        raise(ErrorCode::InternalInvariant, "standard basis of the zero ideal");
    RingPtr ring = inputs.front().ring();
    FieldKind kind = ring->kind();

    std::vector<TrackedElement> basis;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].is_zero())
            continue;
        TrackedElement e;
        e.poly = gens[i];
        e.rep.assign(gens.size(), Polynomial(ring));
        e.rep[i] = Polynomial::constant(ring, 1);
        basis.push_back(std::move(e));
    }

    std::deque<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j)
            pairs.emplace_back(i, j);

    auto polys_of = [&]() {
        std::vector<Polynomial> ps;
        ps.reserve(basis.size());
        for (const auto& e : basis)
            ps.push_back(e.poly);
        return ps;
    };

    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        const Polynomial& a = basis[i].poly;
        const Polynomial& b = basis[j].poly;
        Monomial l = mono_lcm(a.leading_monomial(), b.leading_monomial());
        FieldElement ca = a.leading_coeff().inverse();
        FieldElement cb = b.leading_coeff().inverse();
        Monomial ma = mono_div(l, a.leading_monomial());
        Monomial mb = mono_div(l, b.leading_monomial());
        Polynomial s = a.times_term(ca, ma) - b.times_term(cb, mb);
        if (s.is_zero())
            continue;
        DivisionResult d = mora_weak_divide(s, polys_of());
        if (d.remainder.is_zero())
            continue;
        TrackedElement e;
        e.poly = d.remainder;
        e.rep.assign(gens.size(), Polynomial(ring));
        // remainder = unit*s - sum quotients[k]*basis[k], all in terms of inputs
        for (size_t g = 0; g < gens.size(); ++g) {
            Polynomial acc =
                d.unit * (basis[i].rep[g].times_term(ca, ma) - basis[j].rep[g].times_term(cb, mb));
            for (size_t k = 0; k < basis.size(); ++k)
                acc -= d.quotients[k] * basis[k].rep[g];
            e.rep[g] = std::move(acc);
        }
        basis.push_back(std::move(e));
        for (size_t k = 0; k + 1 < basis.size(); ++k)
            pairs.emplace_back(k, basis.size() - 1);
        (void)kind;
    }

    // drop elements whose leading monomial another element divides
    std::vector<Polynomial> polys = polys_of();
    std::vector<size_t> keep = minimal_indices(polys);
    std::vector<TrackedElement> out;
    for (size_t i : keep)
        out.push_back(std::move(basis[i]));
    return out;
}

bool spolynomials_reduce_to_zero(const StandardBasis& sb) {
    for (size_t i = 0; i < sb.gens.size(); ++i) {
        for (size_t j = i + 1; j < sb.gens.size(); ++j) {
            Polynomial s = spolynomial(sb.gens[i], sb.gens[j]);
            if (s.is_zero())
                continue;
            if (!mora_weak_divide(s, sb.gens).remainder.is_zero())
                return false;
        }
    }
    return true;
}

} // namespace logres
