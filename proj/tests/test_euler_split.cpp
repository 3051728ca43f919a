#include <doctest.h>

#include "gnf/error.hpp"
#include "gnf/euler_split.hpp"
#include "support.hpp"

using namespace gnf;
using namespace gnf::testing;

TEST_CASE("ham_field") {
    const Weight w11(1, 1);
    SUBCASE("H = -x2^2/2 gives (x2, 0)") {
        const Vqhp f = ham_field(Qhp(w11, 2, mono(0, 2, Rational(-1, 2))));
        CHECK(f.gdeg() == 0);
        CHECK(f.component(1) == x2());
        CHECK(f.component(2).is_zero());
    }
    SUBCASE("H = x1^l/l - x2^m/m gives (x2^(m-1), x1^(l-1))") {
        for (auto [l, m] : {std::pair{3, 2}, {4, 2}, {5, 3}, {3, 3}}) {
            const int d = std::gcd(l, m);
            const Weight w(m / d, l / d);
            const Qhp h(w, l * m / d, mono(l, 0, Rational(1, l)) + mono(0, m, Rational(-1, m)));
            const Vqhp f = ham_field(h);
            CHECK(f.gdeg() == (l * m - l - m) / d);
            CHECK(f.component(1) == mono(0, m - 1));
            CHECK(f.component(2) == mono(l - 1, 0));
            CHECK(divergence(f).is_zero());
        }
    }
    SUBCASE("zero Hamiltonian") { CHECK(ham_field(Qhp(w11, 5)).is_zero()); }
    SUBCASE("degree below delta") { CHECK_THROWS_AS(ham_field(Qhp(w11, 1, x1())), Error); }
}

TEST_CASE("decompose and recompose") {
    const Weight w11(1, 1);
    SUBCASE("Euler field") {
        const EulerSplit s = decompose(euler_field(w11));
        CHECK(s.ham_part.is_zero());
        CHECK(s.scalar_part.poly() == Polynomial(Rational(1)));
        CHECK(recompose(EulerSplit{Qhp(w11, 2), Qhp(w11, 0, Polynomial(Rational(1))), 0}) ==
              euler_field(w11));
    }
    SUBCASE("(x1^2, 0)") {
        const Vqhp f(w11, 1, mono(2, 0), Polynomial());
        const EulerSplit s = decompose(f);
        CHECK(s.scalar_part.poly() == mono(1, 0, Rational(2, 3)));
        CHECK(s.ham_part.poly() == mono(2, 1, Rational(-1, 3)));
        CHECK(recompose(EulerSplit{Qhp(w11, 3, mono(2, 1, Rational(-1, 3))),
                                   Qhp(w11, 1, mono(1, 0, Rational(2, 3))), 1}) == f);
    }
    SUBCASE("Hamiltonian input recovers its stream function") {
        std::mt19937 rng(11);
        for (const Weight w : {Weight(1, 1), Weight(1, 2), Weight(2, 3)}) {
            for (int k = 1; k <= 9; ++k) {
                const Qhp h = random_qhp(w, k + w.delta(), rng);
                const EulerSplit s = decompose(ham_field(h));
                CHECK(s.scalar_part.is_zero());
                CHECK(s.ham_part == h);
            }
        }
    }
    SUBCASE("round trip and integrability") {
        std::mt19937 rng(12);
        for (const Weight w : {Weight(1, 1), Weight(1, 2), Weight(2, 3)}) {
            for (int k = 0; k <= 12; ++k) {
                const Vqhp f = random_vqhp(w, k, rng);
                const EulerSplit s = decompose(f);
                CHECK(recompose(s) == f);
                CHECK(s.scalar_part.poly() == divergence(f).poly() * Rational(1, k + w.delta()));
                const Polynomial& i = s.ham_part.poly();
                CHECK(i.derivative(1).derivative(2) == i.derivative(2).derivative(1));
            }
        }
    }
}
