#include "logres/division.hpp"

#include <optional>

namespace logres {

namespace {

bool g_self_check = false;

constexpr long kStepBudget = 2000000;

struct SideReducer {
    Polynomial poly;              // intermediate dividend h
    Polynomial unit_rep;          // with  unit_rep * p = sum q_rep * divisors + poly
    std::vector<Polynomial> q_rep;
};

struct Divider {
    const std::vector<Polynomial>& divisors;
    std::vector<SideReducer> side;
    bool allow_new_side = true;

    // index < divisors.size(): divisor; otherwise side[index - divisors.size()]
    std::optional<size_t> select(const Polynomial& h) const {
        std::optional<size_t> best;
        long best_ecart = 0;
        const Monomial& lm = h.leading_monomial();
        for (size_t i = 0; i < divisors.size(); ++i) {
            const Polynomial& g = divisors[i];
            if (g.is_zero() || !mono_divides(g.leading_monomial(), lm))
                continue;
            long e = g.ecart();
            if (!best || e < best_ecart) {
                best = i;
                best_ecart = e;
            }
        }
        for (size_t i = 0; i < side.size(); ++i) {
            const Polynomial& g = side[i].poly;
            if (!mono_divides(g.leading_monomial(), lm))
                continue;
            long e = g.ecart();
            if (!best || e < best_ecart) {
                best = divisors.size() + i;
                best_ecart = e;
            }
        }
        return best;
    }
};

} // namespace

void set_division_self_check(bool enabled) { g_self_check = enabled; }
bool division_self_check_enabled() { return g_self_check; }

bool DivisionResult::verify(const Polynomial& dividend,
                            const std::vector<Polynomial>& divisors) const {
    Polynomial acc = unit * dividend - remainder;
    for (size_t i = 0; i < divisors.size(); ++i)
        acc -= quotients[i] * divisors[i];
    return acc.is_zero();
}

namespace {

DivisionResult run_division(const Polynomial& p, const std::vector<Polynomial>& divisors,
                            bool full) {
    RingPtr ring = p.ring();
    DivisionResult res;
    res.unit = Polynomial::constant(ring, 1);
    res.quotients.assign(divisors.size(), Polynomial(ring));
    res.remainder = Polynomial(ring);

    Divider ctx{divisors, {}, true};
    Polynomial h = p;
    long steps = 0;

    while (!h.is_zero()) {
        if (++steps > kStepBudget)
            raise(ErrorCode::InternalInvariant, "division step budget exceeded");
        auto choice = ctx.select(h);
        if (!choice) {
            if (!full)
                break;
            // leading term joins the remainder; from now on recording new
            // side reducers would fold remainder terms into the unit updates
            ctx.allow_new_side = false;
            Polynomial lt = Polynomial::monomial_term(ring, h.leading_monomial(), h.leading_coeff());
            res.remainder += lt;
            h -= lt;
            continue;
        }
        size_t idx = *choice;
        const Polynomial& g = idx < divisors.size() ? divisors[idx] : ctx.side[idx - divisors.size()].poly;
        if (ctx.allow_new_side && g.ecart() > h.ecart())
            ctx.side.push_back({h, res.unit, res.quotients});
        FieldElement c = h.leading_coeff() / g.leading_coeff();
        Monomial m = mono_div(h.leading_monomial(), g.leading_monomial());
        if (idx < divisors.size()) {
            h -= g.times_term(c, m);
            res.quotients[idx] += Polynomial::monomial_term(ring, m, c);
        } else {
            const SideReducer& e = ctx.side[idx - divisors.size()];
            h -= e.poly.times_term(c, m);
            res.unit -= e.unit_rep.times_term(c, m);
            for (size_t j = 0; j < divisors.size(); ++j)
                res.quotients[j] -= e.q_rep[j].times_term(c, m);
        }
    }

    if (!full)
        res.remainder = h;
    if (res.unit.is_zero() || res.unit.constant_coeff().is_zero())
        raise(ErrorCode::InternalInvariant, "division produced a non-unit");
    if (g_self_check && !res.verify(p, divisors))
        raise(ErrorCode::InternalInvariant, "division identity failed");
    return res;
}

} // namespace

DivisionResult mora_weak_divide(const Polynomial& p, const std::vector<Polynomial>& divisors) {
    return run_division(p, divisors, false);
}

DivisionResult mora_divide(const Polynomial& p, const std::vector<Polynomial>& divisors) {
    return run_division(p, divisors, true);
}

} // namespace logres
