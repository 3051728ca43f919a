#include <doctest.h>

#include <numeric>

#include "gnf/catalog.hpp"
#include "gnf/coords.hpp"
#include "gnf/error.hpp"
#include "spaces.hpp"
#include "support.hpp"

using namespace gnf;
using namespace gnf::catalog;
using namespace gnf::testing;

namespace {

int mod(int a, int l) { return ((a % l) + l) % l; }

// Binomial support families by classifying every slot of the truncated range with the displayed
// conditions, instead of running the index loops.
SupportPrediction binomial_by_scan(int l, int m, int n) {
    const int d = std::gcd(l, m);
    const Weight w(m / d, l / d);
    const int chi = (l * m - l - m) / d;
    SupportPrediction out;
    for (int c = 1; c <= 2; ++c) {
        for (int g = chi + 1; g <= n; ++g) {
            for (const auto& mon : monomials_of_degree(g + w.gamma(c), w)) {
                const int a = mon.p1, b = mon.p2;
                const Slot s{c, mon};
                if (c == 1) {
                    if (b <= m - 3) {
                        const int j = b + 1;
                        if (mod(a, l) != 0 && mod(a, l) != l - 1 && a * m > l * (m - j)) out.singles.insert(s);
                        const int theta = m - j * l >= 0 ? 1 : 0;
                        if (mod(a, l) == l - 1 && (a + 1) / l >= 1 + theta) out.pairs.emplace_back(s, Slot{2, {a - 1, j}});
                        if (a > 0 && mod(a, l) == 0) {
                            if (l == m && j == m - 2) {
                                out.forced_zero.insert(s);
                            } else {
                                out.pairs.emplace_back(s, Slot{2, {a - 1, j}});
                            }
                        }
                    }
                    if (b == m - 2 && mod(a, l) != 0 && a * m > l) out.pairs.emplace_back(s, Slot{2, {a - 1, m - 1}});
                } else {
                    const int i = a + 1;
                    if (b >= 1 && b <= m - 2) {
                        const int j = b;
                        if (mod(i, l) != 0 && mod(i, l) != l - 1 && i * m > l * (m - j)) out.singles.insert(s);
                        if (l == m && j == m - 2 && mod(i, l) == 0) out.singles.insert(s);
                    }
                    if (b == 0 && mod(i, l) != 0 && mod(i, l) != l - 1 && i > l) out.singles.insert(s);
                }
            }
        }
    }
    return out;
}

std::set<std::pair<Slot, Slot>> as_set(const std::vector<std::pair<Slot, Slot>>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("unperturbed parts") {
    SUBCASE("takens m=2") {
        const Unperturbed u = unperturbed(CaseId::takens(2));
        CHECK(u.hamiltonian.poly() == mono(0, 2, Rational(-1, 2)));
        CHECK(u.weight == Weight(1, 1));
        CHECK(u.chi == 0);
    }
    SUBCASE("binomial (3,2,+)") {
        const Unperturbed u = unperturbed(CaseId::binomial(3, 2, 1));
        CHECK(u.hamiltonian.poly() == mono(3, 0, Rational(1, 3)) + mono(0, 2, Rational(-1, 2)));
        CHECK(u.weight == Weight(2, 3));
        CHECK(u.chi == 1);
        CHECK(ham_field(u.hamiltonian).component(1) == x2());
        CHECK(ham_field(u.hamiltonian).component(2) == mono(2, 0));
    }
    SUBCASE("binomial sign flips the first component") {
        const Unperturbed u = unperturbed(CaseId::binomial(4, 2, -1));
        CHECK(ham_field(u.hamiltonian).component(1) == -x2());
        CHECK(u.weight == Weight(1, 2));
        CHECK(u.chi == 1);
    }
    SUBCASE("diagonal m=1") {
        const Unperturbed u = unperturbed(CaseId::diagonal(1));
        CHECK(u.hamiltonian.poly() == mono(1, 1));
        CHECK(u.chi == 0);
    }
    SUBCASE("lm-monomial field") {
        const Unperturbed u = unperturbed(CaseId::lm(3, 2));
        CHECK(u.chi == 3);
        CHECK(ham_field(u.hamiltonian).component(1) == mono(3, 1, -2));
        CHECK(ham_field(u.hamiltonian).component(2) == mono(2, 2, 3));
    }
    SUBCASE("invalid parameters") {
        for (const CaseId c : {CaseId::takens(1), CaseId::lm(2, 2), CaseId::lm(3, 0), CaseId::diagonal(0),
                               CaseId::binomial(2, 3), CaseId::binomial(3, 1), CaseId::binomial(3, 2, 0)}) {
            CHECK_THROWS_AS(unperturbed(c), Error);
        }
    }
}

TEST_CASE("parse_case") {
    for (const char* s : {"takens:3", "lm:3,1", "diag:2", "binom:3,2,+", "binom:4,2,-"}) {
        CHECK(to_string(parse_case(s)) == s);
    }
    CHECK(to_string(parse_case("binom:3,3")) == "binom:3,3,+");
    for (const char* s : {"takens", "takens:x", "lm:1,2", "binom:3,2,*", "foo:1", "diag:1,2"}) {
        CHECK_THROWS_AS(parse_case(s), Error);
    }
}

TEST_CASE("predict_resonant examples") {
    CHECK(predict_resonant(CaseId::takens(3), 5) == std::set<Monomial>{{5, 0}, {4, 1}});
    // p1 = 0, or p = (2r-1, r-1) with r >= 1: (0,4) and (3,1) at total degree 4.
    CHECK(predict_resonant(CaseId::lm(2, 1), 4) == std::set<Monomial>{{0, 4}, {3, 1}});
    CHECK(predict_resonant(CaseId::diagonal(2), 3) == std::set<Monomial>{{0, 3}, {3, 0}});
    CHECK(predict_resonant(CaseId::diagonal(1), 6) == std::set<Monomial>{{3, 3}});
    CHECK_THROWS_AS(predict_resonant(CaseId::binomial(3, 2), 6), Error);
}

TEST_CASE("predicted spaces equal the computed ones") {
    const std::vector<CaseId> cases{CaseId::takens(2),     CaseId::takens(3),        CaseId::takens(4),
                                    CaseId::lm(2, 1),      CaseId::lm(3, 1),         CaseId::lm(3, 2),
                                    CaseId::diagonal(1),   CaseId::diagonal(2),      CaseId::binomial(3, 2),
                                    CaseId::binomial(4, 2), CaseId::binomial(2, 2, -1), CaseId::binomial(3, 3)};
    for (const auto& c : cases) {
        CAPTURE(to_string(c));
        const Unperturbed u = unperturbed(c);
        for (int k = 0; k <= 12; ++k) {
            bool applicable = true;
            std::set<Monomial> r;
            try {
                r = predict_resonant(c, k);
            } catch (const Error&) {
                applicable = false;
            }
            if (applicable) CHECK(matches(c, resonant_basis(u.hamiltonian, k), r, u.weight));
            try {
                const auto red = predict_reduced(c, k);
                CHECK(matches(c, reduced_resonant_basis(u.hamiltonian, k), red, u.weight));
            } catch (const Error&) {
            }
        }
    }
}

TEST_CASE("predict_support") {
    SUBCASE("takens m=2, N=5") {
        const SupportPrediction s = predict_support(CaseId::takens(2), 5);
        std::set<Slot> singles;
        for (int i = 2; i <= 6; ++i) singles.insert(Slot{2, {i, 0}});
        CHECK(s.singles == singles);
        std::set<std::pair<Slot, Slot>> pairs;
        for (int i = 0; i <= 4; ++i) pairs.insert({Slot{1, {i + 2, 0}}, Slot{2, {i + 1, 1}}});
        CHECK(as_set(s.pairs) == pairs);
        CHECK(s.forced_zero.empty());
    }
    SUBCASE("diagonal m=1 keeps only the diagonal pairs") {
        const SupportPrediction s = predict_support(CaseId::diagonal(1), 6);
        CHECK(s.singles.empty());
        std::set<std::pair<Slot, Slot>> pairs;
        for (int r = 0; r <= 2; ++r) pairs.insert({Slot{1, {r + 2, r + 1}}, Slot{2, {r + 1, r + 2}}});
        CHECK(as_set(s.pairs) == pairs);
    }
    SUBCASE("lm with m = 1 forces the component-2 zero") {
        const SupportPrediction s = predict_support(CaseId::lm(2, 1), 10);
        // s >= 1 + 1 + floor(2/3) = 2: Y2^(2s-2, s-1) is eliminated, Y1^(2s-1, s-2) stays.
        CHECK(s.forced_zero.contains(Slot{2, {2, 1}}));
        CHECK(s.singles.contains(Slot{1, {3, 0}}));
        CHECK_FALSE(s.allows(Slot{2, {2, 1}}));
    }
    SUBCASE("binomial families match a slot-by-slot scan") {
        for (auto [l, m] : {std::pair{3, 2}, {4, 2}, {2, 2}, {3, 3}, {5, 3}, {4, 4}}) {
            CAPTURE(l);
            CAPTURE(m);
            const int n = 12;
            const SupportPrediction a = predict_support(CaseId::binomial(l, m), n);
            const SupportPrediction b = binomial_by_scan(l, m, n);
            CHECK(a.singles == b.singles);
            CHECK(as_set(a.pairs) == as_set(b.pairs));
            CHECK(a.forced_zero == b.forced_zero);
        }
    }
    SUBCASE("binomial l = m: theta bound and forced zeros") {
        const SupportPrediction s = predict_support(CaseId::binomial(3, 3), 9);
        // j = 1 = m - 2: Y1^(3s, 0) forced to zero, partner Y2^(3s-1, 1) kept.
        CHECK(s.forced_zero.contains(Slot{1, {3, 0}}));
        CHECK(s.singles.contains(Slot{2, {2, 1}}));
        // theta[m - jl] = 1 for j = 1, so the r-family starts at r = 2: Y1^(2,0) is absent.
        CHECK_FALSE(s.allows(Slot{1, {2, 0}}));
        CHECK(s.allows(Slot{1, {5, 0}}));
    }
    SUBCASE("policy resolution keeps one member per pair") {
        const SupportPrediction s = predict_support(CaseId::takens(3), 6);
        PairPolicy first;
        const auto kept = s.resolve(first);
        for (const auto& [a, b] : s.pairs) {
            CHECK(kept.contains(b));
            CHECK_FALSE(kept.contains(a));
        }
        PairPolicy second;
        second.base = PairPolicy::Default::ZeroSecond;
        second.zero_overrides.insert(s.pairs.front().first);
        const auto kept2 = s.resolve(second);
        CHECK(kept2.contains(s.pairs.front().second));
        CHECK(kept2.contains(s.pairs.back().first));
    }
}

TEST_CASE("binomial minimal sets allow any shift r_p") {
    // x1^(p1 - r l) x2^(p2 + r m) with 0 <= r <= floor(p1 / l) for each p of the r = 0 set.
    std::mt19937 rng(41);
    for (auto [l, m] : {std::pair{3, 2}, {3, 3}, {4, 3}, {5, 3}}) {
        const CaseId c = CaseId::binomial(l, m);
        const Unperturbed u = unperturbed(c);
        const int d = std::gcd(l, m);
        for (int k = l * m / d + 1; k <= 16; ++k) {
            for (int trial = 0; trial < 3; ++trial) {
                std::vector<Monomial> shifted;
                for (const auto& p : predict_resonant(c, k)) {
                    const int r = std::uniform_int_distribution<int>(0, p.p1 / l)(rng);
                    shifted.push_back({p.p1 - r * l, p.p2 + r * m});
                }
                CHECK_NOTHROW(check_resonant_set(resonant_basis(u.hamiltonian, k), shifted));
            }
        }
    }
}
