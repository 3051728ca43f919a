#include "gnf/resonance.hpp"

#include <algorithm>

#include "gnf/coords.hpp"
#include "gnf/error.hpp"
#include "gnf/euler_split.hpp"
#include "gnf/linalg.hpp"

namespace gnf {

Polynomial conj_apply(const Qhp& h, const Polynomial& p) {
    const Polynomial x1 = Polynomial::monomial(1, 0);
    const Polynomial x2 = Polynomial::monomial(0, 1);
    return x2 * Polynomial::apply_as_operator(h.poly().derivative(1), p) -
           x1 * Polynomial::apply_as_operator(h.poly().derivative(2), p);
}

namespace {

int chi_of(const Qhp& h) { return h.gdeg() - h.weight().delta(); }

// Columns: conj_apply of each monomial of P^[from], in coordinates of P^[from - chi].
Matrix conj_matrix(const Qhp& h, int from) {
    const Weight& w = h.weight();
    const auto src = monomials_of_degree(from, w);
    const auto dst = monomials_of_degree(from - chi_of(h), w);
    std::vector<Vector> cols;
    for (const auto& m : src) cols.push_back(coordinates(conj_apply(h, Polynomial(m, 1)), dst));
    return Matrix::from_columns(cols, dst.size());
}

std::vector<Qhp> to_qhps(const std::vector<Vector>& rows, const Weight& w, int k) {
    const auto mons = monomials_of_degree(k, w);
    std::vector<Qhp> out;
    for (const auto& r : row_basis(rows, mons.size())) out.emplace_back(w, k, from_coordinates(r, mons));
    return out;
}

}  // namespace

ResonantBasis resonant_basis(const Qhp& h, int k) {
    if (k < 0) throw Error(ErrorKind::OutOfRange, "negative degree");
    const Weight& w = h.weight();
    return {k, to_qhps(nullspace(conj_matrix(h, k)), w, k), false};
}

ResonantBasis reduced_resonant_basis(const Qhp& h, int k) {
    if (k < 0) throw Error(ErrorKind::OutOfRange, "negative degree");
    const Weight& w = h.weight();
    const auto mons = monomials_of_degree(k, w);
    const auto kernel = nullspace(conj_matrix(h, k));
    if (kernel.empty()) return {k, {}, true};
    const Matrix image = conj_matrix(h, k + chi_of(h));
    // Solve K a = Im b on the stacked matrix [K | -Im].
    const std::size_t n = mons.size();
    Matrix stacked(n, kernel.size() + image.cols());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < kernel.size(); ++j) stacked(i, j) = kernel[j][i];
        for (std::size_t j = 0; j < image.cols(); ++j) stacked(i, kernel.size() + j) = -image(i, j);
    }
    std::vector<Vector> common;
    for (const auto& sol : nullspace(stacked)) {
        Vector v(n, Rational(0));
        for (std::size_t j = 0; j < kernel.size(); ++j) {
            if (sol[j] == 0) continue;
            for (std::size_t i = 0; i < n; ++i) v[i] += sol[j] * kernel[j][i];
        }
        common.push_back(std::move(v));
    }
    return {k, to_qhps(common, w, k), true};
}

std::vector<Qhp> integrals(const Qhp& h, int k) {
    const Weight& w = h.weight();
    const Vqhp field = ham_field(h);
    const auto src = monomials_of_degree(k, w);
    const auto dst = monomials_of_degree(k + field.gdeg(), w);
    std::vector<Vector> cols;
    for (const auto& m : src) cols.push_back(coordinates(apply_field(field, Polynomial(m, 1)), dst));
    return to_qhps(nullspace(Matrix::from_columns(cols, dst.size())), w, k);
}

bool ResonantSetChoice::contains(Monomial m) const {
    return std::find(monomials.begin(), monomials.end(), m) != monomials.end();
}

Matrix pairing_matrix(const std::vector<Qhp>& basis, const std::vector<Polynomial>& set) {
    Matrix a(basis.size(), set.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < set.size(); ++j) a(i, j) = inner(basis[i].poly(), set[j]);
    }
    return a;
}

ResonantSetChoice check_resonant_set(const ResonantBasis& basis, const std::vector<Monomial>& mons) {
    if (mons.size() != basis.dim()) {
        throw Error(ErrorKind::SizeMismatch, "resonant set has " + std::to_string(mons.size()) +
                                                 " monomials, basis has " + std::to_string(basis.dim()));
    }
    std::vector<Polynomial> set;
    for (const auto& m : mons) {
        if (!basis.basis.empty() && gdeg(m, basis.basis.front().weight()) != basis.gdeg) {
            throw Error(ErrorKind::DegreeMismatch, "monomial of wrong g.d. in resonant set");
        }
        set.emplace_back(m, 1);
    }
    Rational det = determinant(pairing_matrix(basis.basis, set));
    if (det == 0) throw Error(ErrorKind::SingularPairing, "pairing determinant vanishes");
    return {basis.gdeg, mons, basis.reduced, det};
}

ResonantSetChoice minimal_resonant_set(const ResonantBasis& basis, const Weight& w, PivotOrder order) {
    auto mons = monomials_of_degree(basis.gdeg, w);
    if (order == PivotOrder::LexDescending) std::reverse(mons.begin(), mons.end());
    if (basis.basis.empty()) return {basis.gdeg, {}, basis.reduced, 1};
    std::vector<Vector> rows;
    for (const auto& r : basis.basis) {
        Vector v(mons.size());
        for (std::size_t j = 0; j < mons.size(); ++j) {
            v[j] = r.poly().coefficient(mons[j]) * factorial(mons[j].p1) * factorial(mons[j].p2);
        }
        rows.push_back(std::move(v));
    }
    const Echelon e = echelon(Matrix::from_rows(rows, mons.size()));
    std::vector<Monomial> chosen;
    for (auto p : e.pivots) chosen.push_back(mons[p]);
    return check_resonant_set(basis, chosen);
}

}  // namespace gnf
