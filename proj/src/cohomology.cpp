#include "logres/cohomology.hpp"

#include <algorithm>
#include <map>

namespace logres {

int symbol_compare(const Ring& ring, const Monomial& a, const Monomial& b) {
    return -ring.compare(a, b);
}

CohomologyClass CohomologyClass::from_terms(RingPtr ring, std::vector<SymbolTerm> terms) {
    CohomologyClass c(ring);
    std::map<Monomial, FieldElement> acc;
    for (auto& t : terms) {
        for (int e : t.index)
            if (e < 1)
                raise(ErrorCode::InternalInvariant, "symbol exponent below one");
        auto it = acc.find(t.index);
        if (it == acc.end())
            acc.emplace(std::move(t.index), std::move(t.coeff));
        else
            it->second += t.coeff;
    }
    for (auto& [m, coeff] : acc)
        if (!coeff.is_zero())
            c.terms_.push_back({m, coeff});
    std::sort(c.terms_.begin(), c.terms_.end(), [&](const SymbolTerm& x, const SymbolTerm& y) {
        return symbol_compare(*c.ring_, x.index, y.index) > 0;
    });
    return c;
}

CohomologyClass CohomologyClass::symbol(RingPtr ring, const Monomial& lambda,
                                        const FieldElement& c) {
    std::vector<SymbolTerm> ts;
    if (!c.is_zero())
        ts.push_back({lambda, c});
    return from_terms(std::move(ring), std::move(ts));
}

const SymbolTerm& CohomologyClass::head() const {
    if (is_zero())
        raise(ErrorCode::InternalInvariant, "head of the zero cohomology class");
    return terms_.front();
}

CohomologyClass CohomologyClass::operator-() const {
    CohomologyClass r = *this;
    for (auto& t : r.terms_)
        t.coeff = -t.coeff;
    return r;
}

CohomologyClass operator+(const CohomologyClass& a, const CohomologyClass& b) {
    std::vector<SymbolTerm> ts = a.terms_;
    ts.insert(ts.end(), b.terms_.begin(), b.terms_.end());
    return CohomologyClass::from_terms(a.ring_ ? a.ring_ : b.ring_, std::move(ts));
}

CohomologyClass operator-(const CohomologyClass& a, const CohomologyClass& b) {
    return a + (-b);
}

bool operator==(const CohomologyClass& a, const CohomologyClass& b) {
    if (a.terms_.size() != b.terms_.size())
        return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].index != b.terms_[i].index || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

CohomologyClass CohomologyClass::scaled(const FieldElement& c) const {
    if (c.is_zero())
        return CohomologyClass(ring_);
    CohomologyClass r = *this;
    for (auto& t : r.terms_)
        t.coeff *= c;
    return r;
}

FieldElement CohomologyClass::coeff_of(const Monomial& lambda) const {
    for (const auto& t : terms_)
        if (t.index == lambda)
            return t.coeff;
    return FieldElement::zero(ring_->kind());
}

std::string CohomologyClass::str() const {
    if (is_zero())
        return "0";
    std::string out;
    for (const auto& t : terms_) {
        // reuse polynomial printing for the scalar * [symbol] shape
        Polynomial part = Polynomial::constant(ring_, t.coeff);
        std::string cs = part.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg)
            cs = cs.substr(1);
        out += out.empty() ? (neg ? "-" : "") : (neg ? "-" : "+");
        std::string mono;
        for (int i = 0; i < ring_->nvars(); ++i) {
            int e = t.index[static_cast<size_t>(i)];
            if (!mono.empty())
                mono += "*";
            mono += ring_->name(i);
            if (e > 1)
                mono += "^" + std::to_string(e);
        }
        if (cs != "1")
            out += cs + "*";
        out += "[" + mono + "]";
    }
    return out;
}

CohomologyClass act(const Polynomial& p, const CohomologyClass& c) {
    std::vector<SymbolTerm> out;
    for (const auto& pt : p.terms()) {
        for (const auto& st : c.terms()) {
            Monomial shifted = st.index;
            bool alive = true;
            for (size_t i = 0; i < shifted.size(); ++i) {
                shifted[i] -= pt.mono[i];
                if (shifted[i] < 1) {
                    alive = false;
                    break;
                }
            }
            if (alive)
                out.push_back({std::move(shifted), pt.coeff * st.coeff});
        }
    }
    return CohomologyClass::from_terms(c.ring(), std::move(out));
}

FieldElement residue_pairing(const Polynomial& p, const CohomologyClass& c) {
    Monomial socle(static_cast<size_t>(p.ring()->nvars()), 1);
    return act(p, c).coeff_of(socle);
}

namespace {

// symbols lambda >= (1,..,1) with weighted degree <= bound, greatest symbol
// first (the canonical coordinate order)
std::vector<Monomial> candidate_symbols(const Ring& ring, long bound) {
    std::vector<Monomial> out;
    int n = ring.nvars();
    Monomial m(static_cast<size_t>(n), 1);
    while (true) {
        if (ring.weighted_degree(m) <= bound)
            out.push_back(m);
        // odometer over exponents >= 1 bounded by weighted degree
        int i = 0;
        while (i < n) {
            ++m[static_cast<size_t>(i)];
            if (ring.weighted_degree(m) <= bound)
                break;
            m[static_cast<size_t>(i)] = 1;
            ++i;
        }
        if (i == n)
            break;
    }
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return symbol_compare(ring, a, b) > 0;
    });
    return out;
}

std::vector<CohomologyClass> echelon_classes(const RingPtr& ring, const Mat& rows,
                                             const std::vector<Monomial>& symbols) {
    SpanBasis span = row_space_basis(rows, symbols.size(), ring->kind());
    std::vector<CohomologyClass> out;
    for (const auto& row : span.rows) {
        std::vector<SymbolTerm> ts;
        for (size_t j = 0; j < row.size(); ++j)
            if (!row[j].is_zero())
                ts.push_back({symbols[j], row[j]});
        out.push_back(CohomologyClass::from_terms(ring, std::move(ts)));
    }
    // smallest head first, which is the order the examples print
    std::sort(out.begin(), out.end(), [&](const CohomologyClass& a, const CohomologyClass& b) {
        return symbol_compare(*ring, a.head().index, b.head().index) < 0;
    });
    return out;
}

// kernel of the annihilation conditions on the span of `symbols`
std::vector<CohomologyClass> solve_level(const RingPtr& ring,
                                         const std::vector<Polynomial>& annihilators,
                                         const std::vector<Monomial>& symbols) {
    FieldKind kind = ring->kind();
    std::map<Monomial, size_t> symbol_index;
    for (size_t j = 0; j < symbols.size(); ++j)
        symbol_index[symbols[j]] = j;

    Mat equations;
    for (const auto& p : annihilators) {
        // rows keyed by output symbol mu: sum over lambda with lambda-m = mu
        std::map<Monomial, Vec> rows;
        for (const auto& pt : p.terms()) {
            for (size_t j = 0; j < symbols.size(); ++j) {
                Monomial mu = symbols[j];
                bool alive = true;
                for (size_t i = 0; i < mu.size(); ++i) {
                    mu[i] -= pt.mono[i];
                    if (mu[i] < 1) {
                        alive = false;
                        break;
                    }
                }
                if (!alive)
                    continue;
                auto [it, inserted] = rows.try_emplace(mu, Vec());
                if (inserted)
                    it->second = zero_vec(symbols.size(), kind);
                it->second[j] += pt.coeff;
            }
        }
        for (auto& [mu, row] : rows)
            equations.push_back(std::move(row));
    }
    Mat kernel = kernel_basis(std::move(equations), symbols.size(), kind);
    std::vector<CohomologyClass> out;
    for (const auto& v : kernel) {
        std::vector<SymbolTerm> ts;
        for (size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero())
                ts.push_back({symbols[j], v[j]});
        out.push_back(CohomologyClass::from_terms(ring, std::move(ts)));
    }
    return out;
}

Mat classes_to_rows(const std::vector<CohomologyClass>& classes,
                    const std::vector<Monomial>& symbols, FieldKind kind) {
    std::map<Monomial, size_t> symbol_index;
    for (size_t j = 0; j < symbols.size(); ++j)
        symbol_index[symbols[j]] = j;
    Mat rows;
    for (const auto& c : classes) {
        Vec row = zero_vec(symbols.size(), kind);
        for (const auto& t : c.terms())
            row[symbol_index.at(t.index)] = t.coeff;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<Monomial> collect_symbols(const std::vector<CohomologyClass>& classes,
                                      const RingPtr& ring) {
    std::vector<Monomial> symbols;
    for (const auto& c : classes)
        for (const auto& t : c.terms())
            symbols.push_back(t.index);
    std::sort(symbols.begin(), symbols.end(), [&](const Monomial& a, const Monomial& b) {
        return symbol_compare(*ring, a, b) > 0;
    });
    symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
    return symbols;
}

} // namespace

CohomologySpace annihilated_space(const std::vector<Polynomial>& annihilators,
                                  int stop_dimension, long max_weighted_degree,
                                  SpaceRole role) {
    if (annihilators.empty())
        raise(ErrorCode::InternalInvariant, "annihilated_space without annihilators");
    RingPtr ring = annihilators.front().ring();
    long socle_degree = 0;
    for (int i = 0; i < ring->nvars(); ++i)
        socle_degree += ring->weight(i);

    int previous_dim = -1;
    for (long d = socle_degree; d <= max_weighted_degree; ++d) {
        std::vector<Monomial> symbols = candidate_symbols(*ring, d);
        std::vector<CohomologyClass> classes = solve_level(ring, annihilators, symbols);
        int dim = static_cast<int>(classes.size());
        if (dim > stop_dimension)
            raise(ErrorCode::InconsistentInvariants,
                  "annihilated space dimension " + std::to_string(dim) +
                      " exceeds the expected " + std::to_string(stop_dimension));
        if (dim == stop_dimension && dim == previous_dim) {
            CohomologySpace space{ring, role, {}};
            space.basis = echelon_classes(ring, classes_to_rows(classes, symbols, ring->kind()),
                                          symbols);
            return space;
        }
        previous_dim = dim;
    }
    raise(ErrorCode::BoundExceeded,
          "annihilated space did not stabilize below weighted degree " +
              std::to_string(max_weighted_degree));
}

CohomologySpace image_space(const Polynomial& g, const CohomologySpace& gamma) {
    if (gamma.role != SpaceRole::Gamma)
        raise(ErrorCode::InternalInvariant, "image_space expects a Gamma space");
    RingPtr ring = gamma.ring;
    std::vector<CohomologyClass> images;
    for (const auto& phi : gamma.basis) {
        CohomologyClass img = act(g, phi);
        if (!img.is_zero())
            images.push_back(std::move(img));
    }
    CohomologySpace out{ring, SpaceRole::Delta, {}};
    if (!images.empty()) {
        std::vector<Monomial> symbols = collect_symbols(images, ring);
        out.basis = echelon_classes(ring, classes_to_rows(images, symbols, ring->kind()), symbols);
    }
    return out;
}

CohomologySpace kernel_space(const Polynomial& g, const CohomologySpace& gamma,
                             int expected_dimension) {
    if (gamma.role != SpaceRole::Gamma)
        raise(ErrorCode::InternalInvariant, "kernel_space expects a Gamma space");
    RingPtr ring = gamma.ring;
    FieldKind kind = ring->kind();
    std::vector<CohomologyClass> images;
    images.reserve(gamma.basis.size());
    for (const auto& phi : gamma.basis)
        images.push_back(act(g, phi));
    std::vector<Monomial> symbols = collect_symbols(images, ring);
    // columns: one per basis class of gamma
    Mat a;
    {
        std::map<Monomial, size_t> idx;
        for (size_t j = 0; j < symbols.size(); ++j)
            idx[symbols[j]] = j;
        a.assign(symbols.size(), zero_vec(images.size(), kind));
        for (size_t c = 0; c < images.size(); ++c)
            for (const auto& t : images[c].terms())
                a[idx.at(t.index)][c] = t.coeff;
    }
    Mat combos = kernel_basis(std::move(a), images.size(), kind);
    std::vector<CohomologyClass> members;
    for (const auto& v : combos) {
        CohomologyClass acc(ring);
        for (size_t c = 0; c < v.size(); ++c)
            if (!v[c].is_zero())
                acc = acc + gamma.basis[c].scaled(v[c]);
        if (!acc.is_zero())
            members.push_back(std::move(acc));
    }
    CohomologySpace out{ring, SpaceRole::T, {}};
    if (!members.empty()) {
        std::vector<Monomial> all = collect_symbols(members, ring);
        out.basis = echelon_classes(ring, classes_to_rows(members, all, kind), all);
    }
    if (expected_dimension >= 0 && out.dimension() != expected_dimension)
        raise(ErrorCode::InconsistentInvariants,
              "kernel dimension " + std::to_string(out.dimension()) +
                  " does not match the Tjurina number " + std::to_string(expected_dimension));
    return out;
}

StandardBasis annihilator_standard_basis(const CohomologySpace& space) {
    RingPtr ring = space.ring;
    FieldKind kind = ring->kind();
    int n = ring->nvars();
    Monomial ones(static_cast<size_t>(n), 1);

    // staircase complement from the heads (Grothendieck duality)
    std::vector<Monomial> complement;
    for (const auto& phi : space.basis)
        complement.push_back(mono_div(phi.head().index, ones));
    std::sort(complement.begin(), complement.end(),
              [&](const Monomial& a, const Monomial& b) { return ring->compare(a, b) > 0; });
    auto in_complement = [&](const Monomial& m) {
        return std::find(complement.begin(), complement.end(), m) != complement.end();
    };
    for (const auto& m : complement) {
        for (int i = 0; i < n; ++i) {
            if (m[static_cast<size_t>(i)] == 0)
                continue;
            Monomial div = m;
            --div[static_cast<size_t>(i)];
            if (!in_complement(div))
                raise(ErrorCode::InternalInvariant,
                      "cohomology heads do not form a staircase complement");
        }
    }

    // corners: monomials outside the complement all of whose proper divisors
    // are inside
    std::vector<Monomial> corners;
    auto consider = [&](const Monomial& c) {
        if (in_complement(c))
            return;
        if (std::find(corners.begin(), corners.end(), c) != corners.end())
            return;
        for (int i = 0; i < n; ++i) {
            if (c[static_cast<size_t>(i)] == 0)
                continue;
            Monomial div = c;
            --div[static_cast<size_t>(i)];
            if (!in_complement(div))
                return;
        }
        corners.push_back(c);
    };
    if (space.basis.empty()) {
        consider(Monomial(static_cast<size_t>(n), 0));
    } else {
        for (const auto& m : complement) {
            for (int i = 0; i < n; ++i) {
                Monomial c = m;
                ++c[static_cast<size_t>(i)];
                consider(c);
            }
        }
    }

    // each corner extends to the unique annihilator element
    // corner - sum c_mu mu with tails in the complement
    std::vector<Polynomial> gens;
    for (const auto& corner : corners) {
        std::vector<CohomologyClass> images; // act(corner, phi) and act(mu, phi)
        for (const auto& phi : space.basis)
            images.push_back(act(Polynomial::monomial_term(ring, corner, FieldElement::one(kind)), phi));
        Mat cols; // one column per complement monomial
        std::vector<CohomologyClass> mu_images;
        for (const auto& mu : complement)
            for (const auto& phi : space.basis)
                mu_images.push_back(act(Polynomial::monomial_term(ring, mu, FieldElement::one(kind)), phi));
        std::vector<CohomologyClass> all = images;
        all.insert(all.end(), mu_images.begin(), mu_images.end());
        std::vector<Monomial> symbols = collect_symbols(all, ring);
        std::map<Monomial, size_t> idx;
        for (size_t j = 0; j < symbols.size(); ++j)
            idx[symbols[j]] = j;
        size_t rows = symbols.size() * space.basis.size();
        Mat a(rows, zero_vec(complement.size(), kind));
        Vec b = zero_vec(rows, kind);
        for (size_t p = 0; p < space.basis.size(); ++p) {
            for (const auto& t : images[p].terms())
                b[p * symbols.size() + idx.at(t.index)] = t.coeff;
            for (size_t c = 0; c < complement.size(); ++c)
                for (const auto& t : mu_images[c * space.basis.size() + p].terms())
                    a[p * symbols.size() + idx.at(t.index)][c] = t.coeff;
        }
        Vec x;
        if (!solve_linear(std::move(a), std::move(b), x, kind))
            raise(ErrorCode::InternalInvariant,
                  "annihilator corner has no tail over the staircase complement");
        std::vector<Term> terms{{corner, FieldElement::one(kind)}};
        for (size_t c = 0; c < complement.size(); ++c)
            if (!x[c].is_zero())
                terms.push_back({complement[c], -x[c]});
        gens.push_back(Polynomial::from_terms(ring, std::move(terms)));
    }
    std::sort(gens.begin(), gens.end(), poly_less);
    return StandardBasis{ring, std::move(gens)};
}

} // namespace logres
