#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gnf {

using Rational = mpq_class;
using Integer = mpz_class;

/// Coprime positive weights of x1 and x2; delta = gamma1 + gamma2.
class Weight {
public:
    Weight(int gamma1, int gamma2);

    int gamma1() const noexcept { return g1_; }
    int gamma2() const noexcept { return g2_; }
    int delta() const noexcept { return g1_ + g2_; }
    int gamma(int component) const noexcept { return component == 1 ? g1_ : g2_; }

    friend bool operator==(const Weight&, const Weight&) = default;

private:
    int g1_;
    int g2_;
};

/// Exponent pair of x1^p1 x2^p2.
struct Monomial {
    int p1 = 0;
    int p2 = 0;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

int gdeg(Monomial m, const Weight& w);

/// All monomials of generalized degree k, lexicographically ascending.
std::vector<Monomial> monomials_of_degree(int k, const Weight& w);

Integer factorial(int n);

/// Sparse polynomial in x1, x2 with exact rational coefficients.
/// Terms are kept in lexicographic (p1, p2) order and no stored coefficient is zero.
class Polynomial {
public:
    using Terms = std::map<Monomial, Rational>;

    Polynomial() = default;
    explicit Polynomial(const Rational& constant);
    Polynomial(Monomial m, const Rational& c);

    static Polynomial monomial(int p1, int p2, const Rational& c = 1) {
        return Polynomial(Monomial{p1, p2}, c);
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    Rational coefficient(Monomial m) const;

    /// Adds c to the coefficient of m, dropping the term if it cancels.
    void add_term(Monomial m, const Rational& c);

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Partial derivative with respect to x1 (var == 1) or x2 (var == 2).
    Polynomial derivative(int var) const;

    /// d1^a1 d2^a2 applied to this polynomial.
    Polynomial derivative(Monomial order) const;

    /// Applies p(D) to q, where D = (d1, d2).
    static Polynomial apply_as_operator(const Polynomial& p, const Polynomial& q);

    /// Product truncated to generalized degree <= max_gdeg.
    static Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, const Weight& w,
                                         int max_gdeg);

    Polynomial truncated(const Weight& w, int max_gdeg) const;

    /// Terms of exactly generalized degree k.
    Polynomial homogeneous_part(const Weight& w, int k) const;

    /// Minimum / maximum generalized degree; -1 for the zero polynomial.
    int min_gdeg(const Weight& w) const;
    int max_gdeg(const Weight& w) const;

    bool is_quasi_homogeneous(const Weight& w, int k) const;

    Polynomial map_monomials(const std::function<Monomial(Monomial)>& f) const;

    /// Renders as e.g. "-1/2*x2^2 + 3*x1*x2".
    std::string to_string() const;

private:
    Terms terms_;
};

/// Apolar inner product <<p, q>> = p(D) q(x) at x = 0 (conjugation is the identity over Q).
Rational inner(const Polynomial& p, const Polynomial& q);

}  // namespace gnf
