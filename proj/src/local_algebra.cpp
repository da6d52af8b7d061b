#include "logres/local_algebra.hpp"

#include <algorithm>

namespace logres {

QuotientBasis quotient_monomial_basis(const StandardBasis& sb) {
    const RingPtr& ring = sb.ring;
    int n = ring->nvars();
    for (const auto& g : sb.gens)
        if (mono_is_one(g.leading_monomial()))
            return QuotientBasis{}; // unit ideal, zero ring
    // pure-power bound per variable
    std::vector<int> box(static_cast<size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        for (const auto& g : sb.gens) {
            const Monomial& m = g.leading_monomial();
            bool pure = m[static_cast<size_t>(v)] > 0;
            for (int u = 0; u < n && pure; ++u)
                if (u != v && m[static_cast<size_t>(u)] != 0)
                    pure = false;
            if (pure) {
                int e = m[static_cast<size_t>(v)];
                if (box[static_cast<size_t>(v)] < 0 || e < box[static_cast<size_t>(v)])
                    box[static_cast<size_t>(v)] = e;
            }
        }
        if (box[static_cast<size_t>(v)] < 0)
            raise(ErrorCode::NonIsolated,
                  "quotient is not finite dimensional: no pure power of " + ring->name(v) +
                      " in the leading-term ideal");
    }
    QuotientBasis out;
    Monomial m(static_cast<size_t>(n), 0);
    // walk the box, keeping monomials outside the staircase
    while (true) {
        bool divisible = false;
        for (const auto& g : sb.gens) {
            if (mono_divides(g.leading_monomial(), m)) {
                divisible = true;
                break;
            }
        }
        if (!divisible)
            out.monomials.push_back(m);
        int i = 0;
        while (i < n) {
            if (++m[static_cast<size_t>(i)] < box[static_cast<size_t>(i)])
                break;
            m[static_cast<size_t>(i)] = 0;
            ++i;
        }
        if (i == n)
            break;
    }
    std::sort(out.monomials.begin(), out.monomials.end(),
              [&](const Monomial& a, const Monomial& b) { return ring->compare(a, b) > 0; });
    return out;
}

LocalAlgebra LocalAlgebra::build(const StandardBasis& sb) {
    LocalAlgebra a;
    a.sb_ = sb;
    a.quotient_ = quotient_monomial_basis(sb);
    for (size_t i = 0; i < a.quotient_.monomials.size(); ++i)
        a.index_[a.quotient_.monomials[i]] = static_cast<int>(i);
    a.nilpotency_ = a.quotient_.dimension();
    return a;
}

int LocalAlgebra::index_of(const Monomial& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
}

const Vec& LocalAlgebra::monomial_class(const Monomial& m) const {
    auto it = classes_.find(m);
    if (it != classes_.end())
        return it->second;
    FieldKind kind = ring()->kind();
    size_t dim = static_cast<size_t>(dimension());
    Vec v = zero_vec(dim, kind);
    int idx = index_of(m);
    if (idx >= 0) {
        v[static_cast<size_t>(idx)] = FieldElement::one(kind);
    } else if (ring()->total_degree(m) < nilpotency_) {
        // rewrite through the first generator whose leading monomial divides m
        const Polynomial* g = nullptr;
        for (const auto& cand : sb_.gens) {
            if (mono_divides(cand.leading_monomial(), m)) {
                g = &cand;
                break;
            }
        }
        if (!g)
            raise(ErrorCode::InternalInvariant, "monomial neither reducible nor in the basis");
        Monomial cof = mono_div(m, g->leading_monomial());
        FieldElement lc_inv = g->leading_coeff().inverse();
        bool leading = true;
        for (const auto& t : g->terms()) {
            if (leading) { // skip the leading term itself
                leading = false;
                continue;
            }
            const Vec& sub = monomial_class(mono_mul(cof, t.mono));
            FieldElement c = -(t.coeff * lc_inv);
            for (size_t i = 0; i < dim; ++i)
                v[i] += c * sub[i];
        }
    }
    // total degree >= colength: the monomial lies in the ideal, class is zero
    auto [pos, _] = classes_.emplace(m, std::move(v));
    return pos->second;
}

Vec LocalAlgebra::nf_coords(const Polynomial& p) const {
    Vec out = zero_vec(static_cast<size_t>(dimension()), ring()->kind());
    for (const auto& t : p.terms()) {
        const Vec& cls = monomial_class(t.mono);
        for (size_t i = 0; i < out.size(); ++i)
            out[i] += t.coeff * cls[i];
    }
    return out;
}

Polynomial LocalAlgebra::coords_to_poly(const Vec& v) const {
    std::vector<Term> terms;
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero())
            terms.push_back({quotient_.monomials[i], v[i]});
    return Polynomial::from_terms(ring(), std::move(terms));
}

Polynomial LocalAlgebra::nf_poly(const Polynomial& p) const {
    return coords_to_poly(nf_coords(p));
}

bool LocalAlgebra::nf_is_zero(const Polynomial& p) const {
    for (const auto& c : nf_coords(p))
        if (!c.is_zero())
            return false;
    return true;
}

Vec LocalAlgebra::mul_classes(const Vec& a, const Vec& b) const {
    return nf_coords(coords_to_poly(a) * coords_to_poly(b));
}

Polynomial LocalAlgebra::unit_inverse(const Polynomial& u) const {
    if (u.constant_coeff().is_zero())
        raise(ErrorCode::InternalInvariant, "inverse of a non-unit in the local algebra");
    FieldKind kind = ring()->kind();
    size_t dim = static_cast<size_t>(dimension());
    if (dim == 0)
        return Polynomial(ring());
    // columns: class of u * m_j for each basis monomial
    Mat cols;
    for (size_t j = 0; j < dim; ++j) {
        Polynomial um = u.times_term(FieldElement::one(kind), quotient_.monomials[j]);
        cols.push_back(nf_coords(um));
    }
    Mat a(dim, zero_vec(dim, kind));
    for (size_t j = 0; j < dim; ++j)
        for (size_t i = 0; i < dim; ++i)
            a[i][j] = cols[j][i];
    Vec rhs = nf_coords(Polynomial::constant(ring(), 1));
    Vec x;
    if (!solve_linear(std::move(a), std::move(rhs), x, kind))
        raise(ErrorCode::InternalInvariant, "unit not invertible modulo the ideal");
    return coords_to_poly(x);
}

Vec LocalAlgebra::fraction_coords(const Polynomial& num, const Polynomial& den) const {
    if (den.is_constant())
        return nf_coords(num.scaled(den.constant_coeff().inverse()));
    Polynomial w = unit_inverse(den);
    return nf_coords(num * w);
}

std::vector<Polynomial> LocalAlgebra::multiplication_kernel(const Polynomial& g) const {
    FieldKind kind = ring()->kind();
    size_t dim = static_cast<size_t>(dimension());
    std::vector<Polynomial> out;
    if (dim == 0)
        return out;
    Mat a(dim, zero_vec(dim, kind));
    for (size_t j = 0; j < dim; ++j) {
        Polynomial gm = g.times_term(FieldElement::one(kind), quotient_.monomials[j]);
        Vec col = nf_coords(gm);
        for (size_t i = 0; i < dim; ++i)
            a[i][j] = col[i];
    }
    for (const auto& v : kernel_basis(std::move(a), dim, kind))
        out.push_back(coords_to_poly(v));
    return out;
}

} // namespace logres
