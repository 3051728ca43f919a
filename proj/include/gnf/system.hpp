#pragma once

#include <vector>

#include "gnf/graded.hpp"

namespace gnf {

/// dx/dt = H-field(x) + X(x): the unperturbed part is the Hamiltonian field of a Qhp H of
/// g.d. chi + delta; the perturbation has generalized order >= chi + 1 and is truncated at N.
class HamiltonianSystem {
public:
    HamiltonianSystem(Qhp hamiltonian, VectorSeries perturbation);

    const Weight& weight() const noexcept { return hamiltonian_.weight(); }
    const Qhp& hamiltonian() const noexcept { return hamiltonian_; }
    int chi() const noexcept { return hamiltonian_.gdeg() - weight().delta(); }
    int truncation() const noexcept { return perturbation_.truncation(); }
    const VectorSeries& perturbation() const noexcept { return perturbation_; }

    Vqhp unperturbed() const;
    /// Unperturbed plus perturbation as one plain field.
    Field full_field() const;

    friend bool operator==(const HamiltonianSystem&, const HamiltonianSystem&) = default;

private:
    Qhp hamiltonian_;
    VectorSeries perturbation_;
};

/// One near-identity step x = y + Q(y) with Q a Vqhp of g.d. >= 1.
struct Generator {
    int gdeg;
    Vqhp q;
};

/// Generators in application order: the first one is applied to the original system.
class Transformation {
public:
    void append(const Vqhp& q);
    void append(const Transformation& other);

    const std::vector<Generator>& generators() const noexcept { return generators_; }
    bool is_identity() const noexcept { return generators_.empty(); }

    /// The composed map x = y + Q(y), truncated at g.d. max_gdeg (per component
    /// g.d. max_gdeg + gamma_i). Returned as Q.
    Field composed(const Weight& w, int max_gdeg) const;

private:
    std::vector<Generator> generators_;
};

}  // namespace gnf
