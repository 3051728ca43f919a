#pragma once

#include <vector>

#include "gnf/linalg.hpp"

namespace gnf {

/// Coefficients of p over the given monomial list. Throws DegreeMismatch if p has a
/// monomial outside the list.
Vector coordinates(const Polynomial& p, const std::vector<Monomial>& basis);

Polynomial from_coordinates(const Vector& v, const std::vector<Monomial>& basis);

}  // namespace gnf
