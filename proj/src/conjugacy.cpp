#include "gnf/error.hpp"
#include "gnf/normalizer.hpp"

namespace gnf {

ConjugacyReport verify_conjugacy(const HamiltonianSystem& original, const Transformation& t,
                                 const HamiltonianSystem& result) {
    const Weight& w = original.weight();
    if (!(result.weight() == w) || result.truncation() != original.truncation()) {
        throw Error(ErrorKind::DegreeMismatch, "systems differ in weight or truncation");
    }
    const int n = original.truncation();
    const Field q = t.composed(w, n);
    const Field x{Polynomial::monomial(1, 0) + q.f1, Polynomial::monomial(0, 1) + q.f2};
    const Field v = original.full_field();
    const Field y = result.full_field();

    ConjugacyReport report;
    for (int i = 1; i <= 2; ++i) {
        const int cap = n + w.gamma(i);
        const Polynomial lhs = y.component(i).truncated(w, cap) +
                               Polynomial::multiply_truncated(q.component(i).derivative(1), y.f1, w, cap) +
                               Polynomial::multiply_truncated(q.component(i).derivative(2), y.f2, w, cap);
        const Polynomial diff = lhs - substitute(v.component(i), x, w, cap);
        for (const auto& [m, c] : diff.terms()) {
            report.residuals[gdeg(m, w) - w.gamma(i)].emplace(Slot{i, m}, c);
        }
    }
    return report;
}

}  // namespace gnf
