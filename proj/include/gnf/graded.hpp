#pragma once

#include <map>
#include <optional>

#include "gnf/polynomial.hpp"

namespace gnf {

/// Quasi-homogeneous polynomial: every monomial has generalized degree gdeg.
/// The zero polynomial is a valid Qhp at any declared degree.
class Qhp {
public:
    Qhp(const Weight& w, int gdeg, Polynomial poly = {});

    const Polynomial& poly() const noexcept { return poly_; }
    int gdeg() const noexcept { return gdeg_; }
    const Weight& weight() const noexcept { return weight_; }
    bool is_zero() const noexcept { return poly_.is_zero(); }

    friend bool operator==(const Qhp&, const Qhp&) = default;

private:
    Polynomial poly_;
    int gdeg_;
    Weight weight_;
};

/// Plain vector polynomial (P1, P2), not necessarily graded.
struct Field {
    Polynomial f1;
    Polynomial f2;

    const Polynomial& component(int i) const { return i == 1 ? f1 : f2; }
    Polynomial& component(int i) { return i == 1 ? f1 : f2; }
    bool is_zero() const { return f1.is_zero() && f2.is_zero(); }

    Field& operator+=(const Field& o) {
        f1 += o.f1;
        f2 += o.f2;
        return *this;
    }
    Field& operator-=(const Field& o) {
        f1 -= o.f1;
        f2 -= o.f2;
        return *this;
    }
    friend Field operator+(Field a, const Field& b) { return a += b; }
    friend Field operator-(Field a, const Field& b) { return a -= b; }
    friend Field operator*(const Polynomial& s, const Field& f) { return {s * f.f1, s * f.f2}; }
    friend bool operator==(const Field&, const Field&) = default;
};

/// f1 * d1 g + f2 * d2 g.
Polynomial apply_field(const Field& f, const Polynomial& g);

/// (f(g1) - g(f1), f(g2) - g(f2)).
Field lie_bracket(const Field& f, const Field& g);

/// Vector quasi-homogeneous polynomial of g.d. k: components of g.d. k + gamma1 and k + gamma2.
class Vqhp {
public:
    Vqhp(const Weight& w, int gdeg, Polynomial c1 = {}, Polynomial c2 = {});
    Vqhp(const Weight& w, int gdeg, const Field& f) : Vqhp(w, gdeg, f.f1, f.f2) {}

    static Vqhp zero(const Weight& w, int gdeg) { return Vqhp(w, gdeg); }

    const Qhp& comp1() const noexcept { return c1_; }
    const Qhp& comp2() const noexcept { return c2_; }
    const Polynomial& component(int i) const noexcept { return i == 1 ? c1_.poly() : c2_.poly(); }
    int gdeg() const noexcept { return gdeg_; }
    const Weight& weight() const noexcept { return c1_.weight(); }
    bool is_zero() const noexcept { return c1_.is_zero() && c2_.is_zero(); }
    Field field() const { return {c1_.poly(), c2_.poly()}; }

    Vqhp operator+(const Vqhp& o) const;
    Vqhp operator-(const Vqhp& o) const;
    Vqhp operator*(const Rational& c) const;

    friend bool operator==(const Vqhp&, const Vqhp&) = default;

private:
    Qhp c1_;
    Qhp c2_;
    int gdeg_;
};

/// Euler field (gamma1 x1, gamma2 x2), g.d. 0.
Vqhp euler_field(const Weight& w);

/// Q * E_gamma for a Qhp Q of g.d. k; the result has g.d. k.
Vqhp times_euler(const Qhp& q);

/// Action of a Vqhp on a polynomial; a Qhp of g.d. l maps to g.d. l + k.
Polynomial apply_field(const Vqhp& f, const Polynomial& g);
Qhp apply_field(const Vqhp& f, const Qhp& g);

Vqhp lie_bracket(const Vqhp& f, const Vqhp& g);

Qhp divergence(const Vqhp& f);

/// Truncated graded vector series sum_{k} P^[k]; terms are kept for 0 <= k <= truncation.
class VectorSeries {
public:
    VectorSeries(const Weight& w, int truncation);

    const Weight& weight() const noexcept { return weight_; }
    int truncation() const noexcept { return truncation_; }
    const std::map<int, Vqhp>& terms() const noexcept { return terms_; }

    /// Term of g.d. k, zero if absent.
    Vqhp term(int k) const;
    /// Stores a term (dropping zeros); terms with k > truncation are discarded.
    void set_term(const Vqhp& v);
    void add_term(const Vqhp& v);

    /// Least k with a nonzero term; nullopt stands for +infinity.
    std::optional<int> order() const;

    Field to_field() const;

    /// Splits a plain field into graded terms; throws if a component term has g.d. below
    /// min_gdeg + gamma_i. Terms above the truncation are dropped.
    static VectorSeries from_field(const Weight& w, int truncation, const Field& f, int min_gdeg);

    friend bool operator==(const VectorSeries&, const VectorSeries&) = default;

private:
    Weight weight_;
    int truncation_;
    std::map<int, Vqhp> terms_;
};

}  // namespace gnf
