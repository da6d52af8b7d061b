#include "logres/invariants.hpp"

namespace logres {

std::vector<Polynomial> jacobi_gens(const Polynomial& f) {
    std::vector<Polynomial> out;
    for (int i = 0; i < f.ring()->nvars(); ++i)
        out.push_back(f.partial_derivative(i));
    return out;
}

std::vector<Polynomial> gamma_gens(const Polynomial& f) {
    std::vector<Polynomial> out{f};
    int d = f.ring()->vars().distinguished;
    for (int i = 0; i < f.ring()->nvars(); ++i)
        if (i != d)
            out.push_back(f.partial_derivative(i));
    return out;
}

std::vector<Polynomial> tjurina_gens(const Polynomial& f) {
    std::vector<Polynomial> out{f};
    for (int i = 0; i < f.ring()->nvars(); ++i)
        out.push_back(f.partial_derivative(i));
    return out;
}

void check_singular_input(const Polynomial& f) {
    if (f.is_zero())
        raise(ErrorCode::NonIsolated, "f is identically zero");
    if (!f.constant_coeff().is_zero())
        raise(ErrorCode::NonSingularInput, "f does not vanish at the origin");
    for (int i = 0; i < f.ring()->nvars(); ++i)
        if (!f.partial_derivative(i).constant_coeff().is_zero())
            raise(ErrorCode::NonSingularInput,
                  "the origin is a smooth point of {f = 0} (d f/d" + f.ring()->name(i) +
                      " does not vanish there)");
}

namespace {
int quotient_dimension(const std::vector<Polynomial>& gens) {
    StandardBasis sb = standard_basis(gens);
    return quotient_monomial_basis(sb).dimension();
}
} // namespace

int milnor_number(const Polynomial& f) {
    check_singular_input(f);
    try {
        return quotient_dimension(jacobi_gens(f));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NonIsolated)
            raise(ErrorCode::NonIsolated, "non-isolated singularity: " + std::string(e.what()));
        throw;
    }
}

int tjurina_number(const Polynomial& f) {
    check_singular_input(f);
    return quotient_dimension(tjurina_gens(f));
}

int hyperplane_milnor(const Polynomial& f) {
    Polynomial g = f.restrict_hyperplane();
    if (g.is_zero())
        raise(ErrorCode::NonGenericCoord,
              "f vanishes on the hyperplane section; pick another first variable");
    try {
        return quotient_dimension(jacobi_gens(g));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NonIsolated)
            raise(ErrorCode::NonGenericCoord,
                  "restriction to the hyperplane has a non-isolated singularity");
        throw;
    }
}

bool check_zero_dimensional(const std::vector<Polynomial>& gens) {
    bool all_zero = true;
    for (const auto& g : gens)
        if (!g.is_zero())
            all_zero = false;
    if (all_zero)
        return false;
    return standard_basis(gens).zero_dimensional();
}

bool MembershipCertificate::verify(const Polynomial& p,
                                   const std::vector<Polynomial>& gens) const {
    if (!member)
        return !normal_form.is_zero();
    Polynomial acc = unit * p;
    for (size_t i = 0; i < gens.size(); ++i)
        acc -= quotients[i] * gens[i];
    return acc.is_zero() && !unit.constant_coeff().is_zero();
}

MembershipCertificate ideal_membership(const Polynomial& p, const std::vector<Polynomial>& gens) {
    MembershipCertificate cert;
    RingPtr ring = p.ring();
    if (p.is_zero()) {
        cert.member = true;
        cert.unit = Polynomial::constant(ring, 1);
        cert.quotients.assign(gens.size(), Polynomial(ring));
        cert.normal_form = Polynomial(ring);
        return cert;
    }
    std::vector<TrackedElement> sb = standard_basis_tracked(gens);
    std::vector<Polynomial> sb_polys;
    for (const auto& e : sb)
        sb_polys.push_back(e.poly);
    DivisionResult d = mora_weak_divide(p, sb_polys);
    if (!d.remainder.is_zero()) {
        cert.member = false;
        cert.normal_form = normal_form(p, StandardBasis{ring, sb_polys});
        return cert;
    }
    cert.member = true;
    cert.unit = d.unit;
    cert.quotients.assign(gens.size(), Polynomial(ring));
    for (size_t k = 0; k < sb.size(); ++k)
        for (size_t g = 0; g < gens.size(); ++g)
            cert.quotients[g] += d.quotients[k] * sb[k].rep[g];
    cert.normal_form = Polynomial(ring);
    if (division_self_check_enabled() && !cert.verify(p, gens))
        raise(ErrorCode::InternalInvariant, "membership certificate failed to expand");
    return cert;
}

Polynomial normal_form(const Polynomial& p, const StandardBasis& sb) {
    if (p.is_zero())
        return p;
    if (sb.zero_dimensional())
        return LocalAlgebra::build(sb).nf_poly(p);
    return mora_divide(p, sb.gens).remainder;
}

StandardBasis ideal_quotient(const std::vector<Polynomial>& gens_I, const Polynomial& g) {
    if (g.is_zero())
        raise(ErrorCode::InternalInvariant, "ideal quotient by zero");
    StandardBasis sb = standard_basis(gens_I);
    if (g.is_constant())
        return sb;
    if (!sb.zero_dimensional())
        raise(ErrorCode::NonIsolated,
              "ideal quotient requires a finite-dimensional quotient here");
    LocalAlgebra algebra = LocalAlgebra::build(sb);
    std::vector<Polynomial> gens = sb.gens;
    for (auto& k : algebra.multiplication_kernel(g))
        gens.push_back(std::move(k));
    return standard_basis(gens);
}

bool is_quasi_homogeneous(const Polynomial& f) {
    return ideal_membership(f, jacobi_gens(f)).member;
}

} // namespace logres
