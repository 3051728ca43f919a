#include "gnf/euler_split.hpp"

#include "gnf/error.hpp"

namespace gnf {

Vqhp ham_field(const Qhp& h) {
    const Weight& w = h.weight();
    const int k = h.gdeg() - w.delta();
    if (h.is_zero()) return Vqhp::zero(w, k);
    if (k < 0) {
        throw Error(ErrorKind::DegreeTooSmall, "Hamiltonian of g.d. " + std::to_string(h.gdeg()) +
                                                   " is below delta = " + std::to_string(w.delta()));
    }
    return Vqhp(w, k, -h.poly().derivative(2), h.poly().derivative(1));
}

EulerSplit decompose(const Vqhp& f) {
    const Weight& w = f.weight();
    const int k = f.gdeg();
    Qhp j(w, k, divergence(f).poly() * Rational(1, k + w.delta()));
    const Vqhp residual = f - times_euler(j);

    // d1 I = residual_2 fixes every monomial of I with p1 >= 1; the pure x2 powers of I
    // come from d2 I = -residual_1.
    Polynomial stream;
    for (const auto& [m, c] : residual.component(2).terms()) {
        stream.add_term({m.p1 + 1, m.p2}, c / (m.p1 + 1));
    }
    for (const auto& [m, c] : residual.component(1).terms()) {
        if (m.p1 == 0) stream.add_term({0, m.p2 + 1}, -c / (m.p2 + 1));
    }
    EulerSplit s{Qhp(w, k + w.delta(), std::move(stream)), std::move(j), k};
    if (!(recompose(s) == f)) {
        throw Error(ErrorKind::InconsistentSolve, "Euler splitting failed to reassemble the field");
    }
    return s;
}

Vqhp recompose(const EulerSplit& s) {
    const Weight& w = s.scalar_part.weight();
    Vqhp ham = s.ham_part.is_zero() ? Vqhp::zero(w, s.gdeg) : ham_field(s.ham_part);
    return ham + times_euler(s.scalar_part);
}

}  // namespace gnf
