#include <doctest.h>

#include "gnf/coords.hpp"
#include "gnf/error.hpp"
#include "gnf/euler_split.hpp"
#include "gnf/resonance.hpp"
#include "support.hpp"

using namespace gnf;
using namespace gnf::testing;

namespace {

const Weight w11(1, 1);

Qhp takens_h(int m) { return Qhp(w11, m, mono(0, m, Rational(-1, m))); }
Qhp diag_h(int m) { return Qhp(w11, 2 * m, mono(m, m, Rational(1, m))); }
Qhp binom_h(int l, int m) {
    const int d = std::gcd(l, m);
    return Qhp(Weight(m / d, l / d), l * m / d, mono(l, 0, Rational(1, l)) + mono(0, m, Rational(-1, m)));
}

bool in_span(const Polynomial& p, const std::vector<Qhp>& basis, const Weight& w, int k) {
    const auto mons = monomials_of_degree(k, w);
    std::vector<Vector> rows;
    for (const auto& b : basis) rows.push_back(coordinates(b.poly(), mons));
    const std::size_t r = rows.size();
    rows.push_back(coordinates(p, mons));
    return rank(Matrix::from_rows(rows, mons.size())) == r;
}

}  // namespace

TEST_CASE("conj_apply") {
    SUBCASE("Takens m=2 acts as x1 d2") { CHECK(conj_apply(takens_h(2), x1() * x2()) == x1() * x1()); }
    SUBCASE("binomial operator is x2 d1^(l-1) + x1 d2^(m-1)") {
        std::mt19937 rng(21);
        for (auto [l, m] : {std::pair{3, 2}, {4, 2}, {3, 3}}) {
            const Qhp h = binom_h(l, m);
            for (int k = 0; k < 10; ++k) {
                const Polynomial p = random_qhp(h.weight(), k + 3, rng).poly();
                const Polynomial expected =
                    x2() * p.derivative(Monomial{l - 1, 0}) + x1() * p.derivative(Monomial{0, m - 1});
                CHECK(conj_apply(h, p) == expected);
            }
        }
    }
    SUBCASE("constants are annihilated") {
        CHECK(conj_apply(binom_h(3, 2), Polynomial(Rational(5))).is_zero());
        CHECK(conj_apply(diag_h(1), Polynomial(Rational(5))).is_zero());
    }
}

TEST_CASE("resonant_basis") {
    SUBCASE("Takens m=3, k=4") {
        const ResonantBasis b = resonant_basis(takens_h(3), 4);
        CHECK(b.dim() == 2);
        CHECK(in_span(mono(4, 0), b.basis, w11, 4));
        CHECK(in_span(mono(3, 1), b.basis, w11, 4));
    }
    SUBCASE("saddle H = x1 x2") {
        const ResonantBasis b2 = resonant_basis(diag_h(1), 2);
        REQUIRE(b2.dim() == 1);
        CHECK(b2.basis[0].poly() == mono(1, 1));
        CHECK(resonant_basis(diag_h(1), 3).dim() == 0);
    }
    SUBCASE("degree zero") {
        for (const Qhp& h : {takens_h(2), diag_h(2), binom_h(3, 2)}) {
            const ResonantBasis b = resonant_basis(h, 0);
            REQUIRE(b.dim() == 1);
            CHECK(b.basis[0].poly() == Polynomial(Rational(1)));
        }
    }
}

TEST_CASE("reduced_resonant_basis") {
    SUBCASE("Takens: reduced equals resonant above degree m") {
        for (int m = 2; m <= 4; ++m) {
            for (int k = m + 1; k <= 10; ++k) {
                CHECK(reduced_resonant_basis(takens_h(m), k).basis == resonant_basis(takens_h(m), k).basis);
            }
        }
    }
    SUBCASE("diagonal: powers of x1 x2 drop out") {
        for (int m = 1; m <= 2; ++m) {
            for (int j = m + 1; j <= 5; ++j) {
                const ResonantBasis full = resonant_basis(diag_h(m), 2 * j);
                const ResonantBasis red = reduced_resonant_basis(diag_h(m), 2 * j);
                CHECK(in_span(mono(j, j), full.basis, w11, 2 * j));
                CHECK_FALSE(in_span(mono(j, j), red.basis, w11, 2 * j));
                CHECK(red.dim() + 1 == full.dim());
            }
        }
    }
    SUBCASE("trivial kernel") { CHECK(reduced_resonant_basis(diag_h(1), 5).dim() == 0); }
}

TEST_CASE("check_resonant_set") {
    const ResonantBasis b = resonant_basis(takens_h(2), 3);
    const ResonantSetChoice c = check_resonant_set(b, {Monomial{3, 0}});
    CHECK(c.certificate != 0);
    CHECK_THROWS_AS(check_resonant_set(b, {Monomial{2, 0}}), Error);
    CHECK_THROWS_AS(check_resonant_set(b, {Monomial{2, 1}}), Error);
    const ResonantBasis b2 = resonant_basis(takens_h(3), 4);
    try {
        check_resonant_set(b2, {Monomial{4, 0}, Monomial{4, 0}});
        FAIL("expected singular pairing");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SingularPairing);
    }
    try {
        check_resonant_set(b2, {Monomial{4, 0}});
        FAIL("expected size mismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SizeMismatch);
    }
}

TEST_CASE("minimal_resonant_set") {
    SUBCASE("Takens m=2 picks x1^k") {
        for (int k = 1; k <= 10; ++k) {
            const auto s = minimal_resonant_set(resonant_basis(takens_h(2), k), w11);
            REQUIRE(s.monomials.size() == 1);
            CHECK(s.monomials[0] == Monomial{k, 0});
        }
    }
    SUBCASE("binomial (3,2) reproduces the r_p = 0 family") {
        const Qhp h = binom_h(3, 2);
        const Weight& w = h.weight();
        for (int k = 7; k <= 14; ++k) {
            std::vector<Monomial> expect, expect_red;
            for (const auto& m : monomials_of_degree(k, w)) {
                if (m.p2 == 0 && m.p1 % 3 != 2) expect.push_back(m);
                if (m.p2 == 0 && m.p1 % 3 != 2 && m.p1 % 3 != 0) expect_red.push_back(m);
            }
            CHECK(minimal_resonant_set(resonant_basis(h, k), w).monomials == expect);
            CHECK(minimal_resonant_set(reduced_resonant_basis(h, k), w).monomials == expect_red);
        }
    }
    SUBCASE("empty basis") {
        const auto s = minimal_resonant_set(resonant_basis(diag_h(1), 3), w11);
        CHECK(s.monomials.empty());
    }
}

TEST_CASE("resonance properties") {
    std::mt19937 rng(22);
    for (const Qhp& h : {takens_h(2), takens_h(3), diag_h(2), binom_h(3, 2), binom_h(4, 2), binom_h(3, 3)}) {
        const Weight& w = h.weight();
        const int chi = h.gdeg() - w.delta();
        const Vqhp field = ham_field(h);
        for (int k = 0; k <= 10; ++k) {
            // Adjointness of the conjugate operator and the derivation.
            const Polynomial p = random_qhp(w, k + chi, rng).poly();
            const Polynomial q = random_qhp(w, k, rng).poly();
            CHECK(inner(conj_apply(h, p), q) == inner(p, apply_field(field, q)));

            // dim P^[k] = dim Ker + rank.
            const auto src = monomials_of_degree(k, w);
            const auto dst = monomials_of_degree(k - chi, w);
            std::vector<Vector> cols;
            for (const auto& m : src) cols.push_back(coordinates(conj_apply(h, Polynomial(m, 1)), dst));
            const std::size_t r = dst.empty() ? 0 : rank(Matrix::from_columns(cols, dst.size()));
            const ResonantBasis full = resonant_basis(h, k);
            CHECK(src.size() == full.dim() + r);

            // Reduced space sits inside the resonant space.
            const ResonantBasis red = reduced_resonant_basis(h, k);
            for (const auto& v : red.basis) CHECK(in_span(v.poly(), full.basis, w, k));

            // Certificates survive a change of basis.
            if (full.dim() > 0) {
                const ResonantSetChoice s = minimal_resonant_set(full, w);
                ResonantBasis mixed = full;
                for (std::size_t i = 0; i < mixed.basis.size(); ++i) {
                    Polynomial v = full.basis[i].poly() * Rational(i + 2);
                    for (std::size_t j = i + 1; j < full.basis.size(); ++j) {
                        v += full.basis[j].poly() * random_rational(rng);
                    }
                    mixed.basis[i] = Qhp(w, k, v);
                }
                CHECK_NOTHROW(check_resonant_set(mixed, s.monomials));
            }
        }
    }
}
