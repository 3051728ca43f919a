#include "gnf/pushforward.hpp"

#include <algorithm>

#include "gnf/error.hpp"

namespace gnf {

Polynomial substitute(const Polynomial& p, const Field& map, const Weight& w, int max_gdeg) {
    int max1 = 0, max2 = 0;
    for (const auto& [m, c] : p.terms()) {
        max1 = std::max(max1, m.p1);
        max2 = std::max(max2, m.p2);
    }
    std::vector<Polynomial> pow1{Polynomial(Rational(1))}, pow2{Polynomial(Rational(1))};
    for (int a = 1; a <= max1; ++a) {
        pow1.push_back(Polynomial::multiply_truncated(pow1.back(), map.f1, w, max_gdeg));
    }
    for (int b = 1; b <= max2; ++b) {
        pow2.push_back(Polynomial::multiply_truncated(pow2.back(), map.f2, w, max_gdeg));
    }
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        out += Polynomial::multiply_truncated(pow1[m.p1], pow2[m.p2], w, max_gdeg) * c;
    }
    return out;
}

Field push_forward_field(const Field& v, const Field& q, const Weight& w, int truncation) {
    const Field x{Polynomial::monomial(1, 0) + q.f1, Polynomial::monomial(0, 1) + q.f2};
    Field term;
    for (int i = 1; i <= 2; ++i) {
        term.component(i) = substitute(v.component(i), x, w, truncation + w.gamma(i));
    }
    // (I + Dq)^{-1} = sum_j (-Dq)^j; Dq raises the g.d., so the series ends.
    const Polynomial dq[2][2] = {{q.f1.derivative(1), q.f1.derivative(2)},
                                 {q.f2.derivative(1), q.f2.derivative(2)}};
    Field result = term;
    while (!term.is_zero()) {
        Field next;
        for (int i = 1; i <= 2; ++i) {
            const int cap = truncation + w.gamma(i);
            Polynomial s = Polynomial::multiply_truncated(dq[i - 1][0], term.f1, w, cap) +
                           Polynomial::multiply_truncated(dq[i - 1][1], term.f2, w, cap);
            next.component(i) = -s;
        }
        result += next;
        term = std::move(next);
    }
    return result;
}

HamiltonianSystem push_forward(const HamiltonianSystem& sys, const Vqhp& q) {
    const Weight& w = sys.weight();
    if (q.gdeg() < 1) throw Error(ErrorKind::OrderTooLow, "generator g.d. must be >= 1");
    if (q.is_zero()) return sys;
    const Field out = push_forward_field(sys.full_field(), q.field(), w, sys.truncation());
    const VectorSeries all = VectorSeries::from_field(w, sys.truncation(), out, sys.chi());
    if (!(all.term(sys.chi()) == sys.unperturbed())) {
        throw Error(ErrorKind::Validation, "pushforward changed the unperturbed field");
    }
    VectorSeries pert(w, sys.truncation());
    for (const auto& [k, t] : all.terms()) {
        if (k > sys.chi()) pert.set_term(t);
    }
    return HamiltonianSystem(sys.hamiltonian(), std::move(pert));
}

}  // namespace gnf
