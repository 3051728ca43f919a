#include <doctest.h>

#include "gnf/error.hpp"
#include "gnf/graded.hpp"
#include "support.hpp"

using namespace gnf;
using namespace gnf::testing;

TEST_CASE("weight validation") {
    CHECK_NOTHROW(Weight(2, 3));
    CHECK_THROWS_AS(Weight(2, 4), Error);
    CHECK_THROWS_AS(Weight(0, 1), Error);
    Weight w(2, 3);
    CHECK(w.delta() == 5);
}

TEST_CASE("generalized degree") {
    CHECK(gdeg({2, 3}, Weight(1, 1)) == 5);
    CHECK(gdeg({3, 0}, Weight(2, 3)) == 6);
    CHECK(gdeg({0, 0}, Weight(5, 7)) == 0);
    const auto mons = monomials_of_degree(6, Weight(2, 3));
    REQUIRE(mons.size() == 2);
    CHECK(mons[0] == Monomial{0, 2});
    CHECK(mons[1] == Monomial{3, 0});
}

TEST_CASE("field action") {
    SUBCASE("Euler field scales by the degree") {
        std::mt19937 rng(1);
        for (const Weight w : {Weight(1, 1), Weight(1, 2), Weight(2, 3)}) {
            for (int k = 0; k <= 9; ++k) {
                const Qhp q = random_qhp(w, k, rng);
                CHECK(apply_field(euler_field(w), q).poly() == q.poly() * Rational(k));
            }
        }
    }
    SUBCASE("constants are annihilated") {
        const Weight w(1, 1);
        CHECK(apply_field(Vqhp(w, 0, x2(), Polynomial()), Polynomial(Rational(7))).is_zero());
    }
    SUBCASE("(x2, 0) acting on x1 x2") {
        const Weight w(1, 1);
        CHECK(apply_field(Vqhp(w, 0, x2(), Polynomial()), x1() * x2()) == x2() * x2());
    }
}

TEST_CASE("Lie bracket") {
    const Weight w(1, 1);
    SUBCASE("Euler bracket scales by the degree") {
        std::mt19937 rng(2);
        for (const Weight wt : {Weight(1, 1), Weight(1, 3), Weight(3, 2)}) {
            for (int k = 0; k <= 7; ++k) {
                const Vqhp q = random_vqhp(wt, k, rng);
                CHECK(lie_bracket(euler_field(wt), q) == q * Rational(k));
            }
        }
    }
    SUBCASE("antisymmetry") {
        std::mt19937 rng(3);
        const Vqhp f = random_vqhp(w, 3, rng);
        CHECK(lie_bracket(f, f).is_zero());
    }
    SUBCASE("[(x2, 0), (0, x1^2)]") {
        const Vqhp f(w, 0, x2(), Polynomial());
        const Vqhp g(w, 1, Polynomial(), x1() * x1());
        const Vqhp b = lie_bracket(f, g);
        CHECK(b.gdeg() == 1);
        CHECK(b.component(1) == mono(2, 0, -1));
        CHECK(b.component(2) == mono(1, 1, 2));
    }
}

TEST_CASE("divergence") {
    std::mt19937 rng(4);
    for (const Weight w : {Weight(1, 1), Weight(2, 3)}) {
        CHECK(divergence(euler_field(w)).poly() == Polynomial(Rational(w.delta())));
        for (int k = 0; k <= 8; ++k) {
            const Qhp q = random_qhp(w, k, rng);
            CHECK(divergence(times_euler(q)).poly() == q.poly() * Rational(k + w.delta()));
            const Qhp h = random_qhp(w, k + w.delta(), rng);
            const Vqhp ham(w, k, -h.poly().derivative(2), h.poly().derivative(1));
            CHECK(divergence(ham).is_zero());
        }
    }
}

TEST_CASE("apolar inner product") {
    CHECK(inner(mono(2, 1), mono(2, 1)) == 2);
    CHECK(inner(x1(), x2()) == 0);
    CHECK(inner(mono(1, 0, 2) + mono(0, 2, 3), mono(1, 0, 5)) == 10);
    std::mt19937 rng(5);
    const Weight w(1, 2);
    for (int t = 0; t < 20; ++t) {
        const Polynomial p = random_qhp(w, t % 7, rng).poly() + random_qhp(w, 3, rng).poly();
        const Polynomial q = random_qhp(w, t % 7, rng).poly();
        CHECK(inner(p, q) == inner(q, p));
        if (!p.is_zero()) CHECK(inner(p, p) > 0);
    }
}

TEST_CASE("grading closure, bilinearity and Jacobi identity") {
    std::mt19937 rng(6);
    for (const Weight w : {Weight(1, 1), Weight(1, 2), Weight(2, 3)}) {
        for (int t = 0; t < 10; ++t) {
            const int a = t % 4, b = (t + 1) % 5, c = (t + 2) % 3;
            const Vqhp f = random_vqhp(w, a, rng), g = random_vqhp(w, b, rng), h = random_vqhp(w, c, rng);
            // The Vqhp constructor rejects any monomial of the wrong degree.
            const Vqhp fg = lie_bracket(f, g);
            CHECK(fg.gdeg() == a + b);
            const Qhp q = random_qhp(w, b + 2, rng);
            CHECK(apply_field(f, q).gdeg() == a + b + 2);

            const Vqhp jacobi = lie_bracket(f, lie_bracket(g, h)) + lie_bracket(g, lie_bracket(h, f)) +
                                lie_bracket(h, lie_bracket(f, g));
            CHECK(jacobi.is_zero());

            const Rational s = random_rational(rng);
            const Vqhp g2 = random_vqhp(w, b, rng);
            CHECK(lie_bracket(f, g * s + g2) == lie_bracket(f, g) * s + lie_bracket(f, g2));
        }
    }
}

TEST_CASE("no zero coefficients are stored") {
    Polynomial p = mono(1, 2, 3);
    p += mono(1, 2, -3);
    CHECK(p.is_zero());
    Polynomial q = (x1() + x2()) * (x1() - x2());
    for (const auto& [m, c] : q.terms()) CHECK(c != 0);
    CHECK(q.size() == 2);
    CHECK((q * Rational(0)).is_zero());
}

TEST_CASE("graded containers reject wrong degrees") {
    const Weight w(1, 2);
    CHECK_THROWS_AS(Qhp(w, 3, x1()), Error);
    CHECK_NOTHROW(Qhp(w, 17, Polynomial()));
    VectorSeries s(w, 4);
    s.set_term(Vqhp(w, 5, mono(6, 0), Polynomial()));
    CHECK(s.terms().empty());
    CHECK_FALSE(s.order().has_value());
    s.set_term(Vqhp(w, 2, mono(3, 0), Polynomial()));
    CHECK(s.order() == 2);
}
