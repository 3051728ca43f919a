#include "gnf/system.hpp"

#include "gnf/error.hpp"
#include "gnf/euler_split.hpp"
#include "gnf/pushforward.hpp"

namespace gnf {

HamiltonianSystem::HamiltonianSystem(Qhp hamiltonian, VectorSeries perturbation)
    : hamiltonian_(std::move(hamiltonian)), perturbation_(std::move(perturbation)) {
    const Weight& w = hamiltonian_.weight();
    if (!(perturbation_.weight() == w)) throw Error(ErrorKind::DegreeMismatch, "weights differ");
    if (hamiltonian_.gdeg() < w.delta()) {
        throw Error(ErrorKind::DegreeTooSmall, "Hamiltonian g.d. is below delta");
    }
    if (ham_field(hamiltonian_).is_zero()) {
        throw Error(ErrorKind::NotQuasiHomogeneous, "the Hamiltonian field vanishes");
    }
    if (perturbation_.truncation() <= chi()) {
        throw Error(ErrorKind::InvalidParams, "truncation " + std::to_string(truncation()) +
                                                  " must exceed chi = " + std::to_string(chi()));
    }
    if (auto ord = perturbation_.order(); ord && *ord <= chi()) {
        throw Error(ErrorKind::OrderTooLow, "perturbation term of g.d. " + std::to_string(*ord) +
                                                " is not above chi = " + std::to_string(chi()));
    }
}

Vqhp HamiltonianSystem::unperturbed() const { return ham_field(hamiltonian_); }

Field HamiltonianSystem::full_field() const { return unperturbed().field() + perturbation_.to_field(); }

void Transformation::append(const Vqhp& q) {
    if (q.gdeg() < 1) throw Error(ErrorKind::OrderTooLow, "generators must have g.d. >= 1");
    generators_.push_back({q.gdeg(), q});
}

void Transformation::append(const Transformation& other) {
    for (const auto& g : other.generators_) append(g.q);
}

Field Transformation::composed(const Weight& w, int max_gdeg) const {
    Field total;
    for (auto it = generators_.rbegin(); it != generators_.rend(); ++it) {
        const Field inner{Polynomial::monomial(1, 0) + total.f1, Polynomial::monomial(0, 1) + total.f2};
        for (int i = 1; i <= 2; ++i) {
            total.component(i) +=
                substitute(it->q.component(i), inner, w, max_gdeg + w.gamma(i));
        }
    }
    return total;
}

}  // namespace gnf
