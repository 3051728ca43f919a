#pragma once

#include "gnf/graded.hpp"

namespace gnf {

/// Hamiltonian field (-d2 h, d1 h) of a Qhp h of g.d. k + delta; the field has g.d. k.
/// Throws DegreeTooSmall when h is nonzero and h.gdeg() < delta.
Vqhp ham_field(const Qhp& h);

/// f = (-d2 I, d1 I) + J * E_gamma, with I of g.d. k + delta and J of g.d. k.
struct EulerSplit {
    Qhp ham_part;     // I
    Qhp scalar_part;  // J
    int gdeg;         // k
};

EulerSplit decompose(const Vqhp& f);

Vqhp recompose(const EulerSplit& s);

}  // namespace gnf
