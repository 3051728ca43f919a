#pragma once

#include "gnf/system.hpp"

namespace gnf {

/// P(map1(y), map2(y)) truncated at generalized degree max_gdeg.
Polynomial substitute(const Polynomial& p, const Field& map, const Weight& w, int max_gdeg);

/// The field seen in y after x = y + q(y), for q of generalized order >= 1:
/// (I + Dq)^{-1} v(y + q(y)), truncated at field g.d. N (component i at N + gamma_i).
Field push_forward_field(const Field& v, const Field& q, const Weight& w, int truncation);

/// Transforms the system by x = y + q(y) with q of g.d. >= 1. Terms of g.d. below
/// q.gdeg() + chi are unchanged and the term of g.d. q.gdeg() + chi changes by
/// -[H-field, q].
HamiltonianSystem push_forward(const HamiltonianSystem& sys, const Vqhp& q);

}  // namespace gnf
