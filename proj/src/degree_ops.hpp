#pragma once

#include <optional>
#include <vector>

#include "gnf/normalizer.hpp"

namespace gnf::detail {

/// Linear maps of the homological equation at one perturbation index m.
class DegreeOps {
public:
    DegreeOps(const Qhp& h, int m);

    /// J of g.d. m with the Euler-direction part of [H-field, J E] equal to target.
    /// Throws InconsistentSolve when no such J exists.
    Qhp solve_euler(const Qhp& target) const;

    struct StreamSolution {
        Qhp i;          // g.d. m + delta
        Qhp j;          // integral of g.d. m
        Polynomial residual;
    };
    /// I and an integral J with the stream part of [H-field, ham_field(I) + J E] equal to
    /// target minus residual; residual is zero whenever target is reachable.
    StreamSolution solve_stream(const Qhp& target) const;

    Vqhp bracket(const Vqhp& v) const { return lie_bracket(field_, v); }

private:
    Weight w_;
    int m_;
    int chi_;
    Vqhp field_;
    std::vector<Monomial> j_mons_;
    std::vector<Polynomial> euler_cols_;
    std::vector<Monomial> i_mons_;
    std::vector<Qhp> integrals_;
    std::vector<Polynomial> stream_cols_;
};

/// sum_j b_j S_j with b = A^{-1} <<R, p>>; p - result is orthogonal to every R_i.
Qhp resonant_part(const ResonantBasis& basis, const ResonantSetChoice& set, const Qhp& p);

}  // namespace gnf::detail
