#include "logres/polynomial.hpp"

#include <algorithm>

namespace logres {

void check_same_ring(const Polynomial& a, const Polynomial& b) {
    if (a.ring() == b.ring())
        return;
    if (!a.ring() || !b.ring() || !a.ring()->same_as(*b.ring()))
        raise(ErrorCode::InternalInvariant, "polynomials from different rings");
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    p.sort_and_combine();
    return p;
}

Polynomial Polynomial::constant(RingPtr ring, const FieldElement& c) {
    Polynomial p(ring);
    if (!c.is_zero())
        p.terms_.push_back({ring->one(), c});
    return p;
}

Polynomial Polynomial::constant(RingPtr ring, long n) {
    FieldKind k = ring->kind();
    return constant(std::move(ring), FieldElement::integer(k, n));
}

Polynomial Polynomial::monomial_term(RingPtr ring, const Monomial& m, const FieldElement& c) {
    Polynomial p(std::move(ring));
    if (!c.is_zero())
        p.terms_.push_back({m, c});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, int i) {
    Monomial m = ring->unit_exponent(i);
    FieldKind k = ring->kind();
    return monomial_term(std::move(ring), m, FieldElement::one(k));
}

void Polynomial::sort_and_combine() {
    std::map<Monomial, FieldElement> acc;
    for (auto& t : terms_) {
        auto it = acc.find(t.mono);
        if (it == acc.end())
            acc.emplace(std::move(t.mono), std::move(t.coeff));
        else
            it->second += t.coeff;
    }
    terms_.clear();
    for (auto& [m, c] : acc)
        if (!c.is_zero())
            terms_.push_back({m, c});
    std::sort(terms_.begin(), terms_.end(), [this](const Term& a, const Term& b) {
        return ring_->compare(a.mono, b.mono) > 0;
    });
}

const Term& Polynomial::leading_term() const {
    if (is_zero())
        raise(ErrorCode::InternalInvariant, "leading term of zero polynomial");
    return terms_.front();
}

long Polynomial::ecart() const {
    return max_weighted_degree() - order_degree();
}

long Polynomial::order_degree() const {
    return ring_->weighted_degree(leading_monomial());
}

long Polynomial::max_weighted_degree() const {
    long d = 0;
    for (const auto& t : terms_)
        d = std::max(d, ring_->weighted_degree(t.mono));
    return d;
}

FieldElement Polynomial::constant_coeff() const {
    if (!terms_.empty() && mono_is_one(terms_.front().mono))
        return terms_.front().coeff;
    return FieldElement::zero(ring_->kind());
}

bool Polynomial::is_constant() const {
    return is_zero() || (terms_.size() == 1 && mono_is_one(terms_.front().mono));
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_)
        t.coeff = -t.coeff;
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a, b);
    // merge of two sorted term lists
    Polynomial r(a.ring());
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        int cmp = a.ring()->compare(a.terms_[i].mono, b.terms_[j].mono);
        if (cmp > 0) {
            r.terms_.push_back(a.terms_[i++]);
        } else if (cmp < 0) {
            r.terms_.push_back(b.terms_[j++]);
        } else {
            FieldElement c = a.terms_[i].coeff + b.terms_[j].coeff;
            if (!c.is_zero())
                r.terms_.push_back({a.terms_[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a, b);
    Polynomial r(a.ring());
    std::map<Monomial, FieldElement> acc;
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            Monomial m = mono_mul(ta.mono, tb.mono);
            FieldElement c = ta.coeff * tb.coeff;
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(std::move(m), std::move(c));
            else
                it->second += c;
        }
    }
    for (auto& [m, c] : acc)
        if (!c.is_zero())
            r.terms_.push_back({m, c});
    std::sort(r.terms_.begin(), r.terms_.end(), [&](const Term& x, const Term& y) {
        return r.ring_->compare(x.mono, y.mono) > 0;
    });
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size())
        return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
    if (c.is_zero())
        return Polynomial(ring_);
    Polynomial r = *this;
    for (auto& t : r.terms_)
        t.coeff *= c;
    return r;
}

Polynomial Polynomial::times_term(const FieldElement& c, const Monomial& m) const {
    if (c.is_zero())
        return Polynomial(ring_);
    Polynomial r = *this;
    for (auto& t : r.terms_) {
        t.coeff *= c;
        t.mono = mono_mul(t.mono, m);
    }
    return r; // multiplying by a fixed monomial preserves the order
}

Polynomial Polynomial::monic() const {
    if (is_zero())
        return *this;
    return scaled(leading_coeff().inverse());
}

Polynomial Polynomial::partial_derivative(int var) const {
    Polynomial r(ring_);
    for (const auto& t : terms_) {
        int e = t.mono[static_cast<size_t>(var)];
        if (e == 0)
            continue;
        Monomial m = t.mono;
        m[static_cast<size_t>(var)] = e - 1;
        r.terms_.push_back({m, t.coeff * FieldElement::integer(ring_->kind(), e)});
    }
    std::sort(r.terms_.begin(), r.terms_.end(), [&](const Term& x, const Term& y) {
        return r.ring_->compare(x.mono, y.mono) > 0;
    });
    return r;
}

Polynomial Polynomial::restrict_hyperplane() const {
    RingPtr sub = ring_->restricted();
    int d = ring_->vars().distinguished;
    std::vector<Term> kept;
    for (const auto& t : terms_) {
        if (t.mono[static_cast<size_t>(d)] != 0)
            continue;
        Monomial m;
        for (int i = 0; i < ring_->nvars(); ++i)
            if (i != d)
                m.push_back(t.mono[static_cast<size_t>(i)]);
        kept.push_back({std::move(m), t.coeff});
    }
    return Polynomial::from_terms(sub, std::move(kept));
}

Polynomial Polynomial::substitute_parameter(const Rational& value) const {
    RingPtr q = ring_->rational_ring();
    std::vector<Term> out;
    for (const auto& t : terms_) {
        Rational c = t.coeff.substitute_parameter(value);
        if (!c.is_zero())
            out.push_back({t.mono, FieldElement(c)});
    }
    return Polynomial::from_terms(q, std::move(out));
}

namespace {

// Sign and magnitude of a coefficient for printing. For Q(t) the sign is the
// sign of the numerator's leading coefficient.
int print_sign(const FieldElement& c) {
    if (c.kind() == FieldKind::Q)
        return c.rational().sign();
    return c.ratfun().numerator().leading_coeff().sign();
}

std::string coeff_magnitude_str(const FieldElement& c, const std::string& param) {
    FieldElement mag = print_sign(c) < 0 ? -c : c;
    std::string s = mag.str(param);
    // A coefficient that is a genuine sum (top-level + or -) must be wrapped
    // when used as a factor; quotients "(..)/(..)" are already unambiguous.
    int depth = 0;
    bool top_sum = false;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')') --depth;
        else if ((s[i] == '+' || s[i] == '-') && depth == 0 && i > 0) top_sum = true;
    }
    if (top_sum)
        return "(" + s + ")";
    return s;
}

} // namespace

std::string Polynomial::str() const {
    if (is_zero())
        return "0";
    std::string out;
    for (const auto& t : terms_) {
        int sgn = print_sign(t.coeff);
        if (out.empty()) {
            if (sgn < 0)
                out += "-";
        } else {
            out += sgn < 0 ? "-" : "+";
        }
        FieldElement mag = sgn < 0 ? -t.coeff : t.coeff;
        std::string mono;
        for (int i = 0; i < ring_->nvars(); ++i) {
            int e = t.mono[static_cast<size_t>(i)];
            if (e == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += ring_->name(i);
            if (e > 1)
                mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            out += coeff_magnitude_str(t.coeff, ring_->param_name());
        } else if (mag.is_one()) {
            out += mono;
        } else {
            out += coeff_magnitude_str(t.coeff, ring_->param_name()) + "*" + mono;
        }
    }
    return out;
}

bool poly_less(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero())
        return !b.is_zero();
    int cmp = a.ring()->compare(a.leading_monomial(), b.leading_monomial());
    if (cmp != 0)
        return cmp > 0; // greater leading monomial sorts first
    return a.str() < b.str();
}

} // namespace logres
