#pragma once

#include <random>

#include "gnf/graded.hpp"
#include "gnf/system.hpp"

namespace gnf::testing {

inline Rational random_rational(std::mt19937& rng, bool nonzero = false) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    for (;;) {
        Rational r(num(rng), den(rng));
        r.canonicalize();
        if (!nonzero || r != 0) return r;
    }
}

/// Random Qhp of g.d. k; each monomial is present with probability density.
inline Qhp random_qhp(const Weight& w, int k, std::mt19937& rng, double density = 0.7) {
    std::bernoulli_distribution keep(density);
    Polynomial p;
    for (const auto& m : monomials_of_degree(k, w)) {
        if (keep(rng)) p.add_term(m, random_rational(rng, true));
    }
    return Qhp(w, k, p);
}

inline Vqhp random_vqhp(const Weight& w, int k, std::mt19937& rng, double density = 0.7) {
    return Vqhp(w, k, random_qhp(w, k + w.gamma1(), rng, density).poly(),
                random_qhp(w, k + w.gamma2(), rng, density).poly());
}

inline Polynomial x1() { return Polynomial::monomial(1, 0); }
inline Polynomial x2() { return Polynomial::monomial(0, 1); }
inline Polynomial mono(int a, int b, const Rational& c = 1) { return Polynomial::monomial(a, b, c); }

/// System with H and a perturbation in every g.d. chi+1..N (density 1 gives every monomial).
inline HamiltonianSystem random_system(const Qhp& h, int truncation, std::mt19937& rng, double density = 1.0) {
    const Weight& w = h.weight();
    VectorSeries s(w, truncation);
    for (int g = h.gdeg() - w.delta() + 1; g <= truncation; ++g) s.set_term(random_vqhp(w, g, rng, density));
    return HamiltonianSystem(h, s);
}

}  // namespace gnf::testing
