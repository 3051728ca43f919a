#pragma once

#include <vector>

#include "gnf/graded.hpp"
#include "gnf/linalg.hpp"

namespace gnf {

/// The operator conjugate to the Hamiltonian field of h under the apolar inner product:
/// p -> x2 * (d1 h)(D) p - x1 * (d2 h)(D) p. Lowers g.d. by chi = h.gdeg() - delta.
Polynomial conj_apply(const Qhp& h, const Polynomial& p);

/// Basis of the resonant space R^[k] (reduced == false) or of the reduced space
/// R^[k] ∩ conj(P^[k+chi]) (reduced == true). Basis vectors are in reduced row echelon
/// form over the lexicographic monomial coordinates of P^[k].
struct ResonantBasis {
    int gdeg = 0;
    std::vector<Qhp> basis;
    bool reduced = false;

    std::size_t dim() const noexcept { return basis.size(); }
};

ResonantBasis resonant_basis(const Qhp& h, int k);
ResonantBasis reduced_resonant_basis(const Qhp& h, int k);

/// Basis of the quasi-homogeneous integrals of g.d. k of the Hamiltonian field of h.
std::vector<Qhp> integrals(const Qhp& h, int k);

/// Monomials paired nonsingularly with a resonant basis; certificate is the pairing
/// determinant det(<<R_i, S_j>>).
struct ResonantSetChoice {
    int gdeg = 0;
    std::vector<Monomial> monomials;
    bool reduced = false;
    Rational certificate = 1;

    bool contains(Monomial m) const;
};

/// Order in which minimal_resonant_set tries monomials. LexDescending prefers large p1,
/// which reproduces the r_p = 0 family of minimal sets for binomial Hamiltonians.
enum class PivotOrder { LexDescending, LexAscending };

/// Validates a candidate monomial set against a basis. Throws SizeMismatch,
/// DegreeMismatch or SingularPairing.
ResonantSetChoice check_resonant_set(const ResonantBasis& basis, const std::vector<Monomial>& mons);

/// Greedy pivot selection of a minimal (monomial) resonant set.
ResonantSetChoice minimal_resonant_set(const ResonantBasis& basis, const Weight& w,
                                       PivotOrder order = PivotOrder::LexDescending);

/// Pairing matrix {<<R_i, S_j>>}.
Matrix pairing_matrix(const std::vector<Qhp>& basis, const std::vector<Polynomial>& set);

}  // namespace gnf
