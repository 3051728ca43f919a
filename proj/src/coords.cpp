#include "gnf/coords.hpp"

#include <algorithm>

#include "gnf/error.hpp"

namespace gnf {

Vector coordinates(const Polynomial& p, const std::vector<Monomial>& basis) {
    Vector v(basis.size(), Rational(0));
    for (const auto& [m, c] : p.terms()) {
        auto it = std::find(basis.begin(), basis.end(), m);
        if (it == basis.end()) {
            throw Error(ErrorKind::DegreeMismatch, "monomial outside the coordinate basis");
        }
        v[static_cast<std::size_t>(it - basis.begin())] = c;
    }
    return v;
}

Polynomial from_coordinates(const Vector& v, const std::vector<Monomial>& basis) {
    Polynomial p;
    for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], v[i]);
    return p;
}

}  // namespace gnf
