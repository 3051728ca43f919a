#include "gnf/normalizer.hpp"

#include "degree_ops.hpp"
#include "gnf/coords.hpp"
#include "gnf/error.hpp"
#include "gnf/linalg.hpp"

namespace gnf {

namespace detail {

namespace {

struct SpanSolution {
    Vector coeffs;
    Polynomial residual;
};

// Writes target in the span of cols. With allow_residual, identity columns are appended
// after the real ones, so any part outside the span comes back as residual.
std::optional<SpanSolution> solve_in_span(const std::vector<Polynomial>& cols,
                                          const std::vector<Monomial>& basis,
                                          const Polynomial& target, bool allow_residual) {
    std::vector<Vector> columns;
    for (const auto& c : cols) columns.push_back(coordinates(c, basis));
    if (allow_residual) {
        for (const auto& m : basis) columns.push_back(coordinates(Polynomial(m, 1), basis));
    }
    SpanSolution out;
    if (basis.empty()) {
        out.coeffs.assign(cols.size(), Rational(0));
        return out;
    }
    const auto x = solve(Matrix::from_columns(columns, basis.size()), coordinates(target, basis));
    if (!x) return std::nullopt;
    out.coeffs.assign(x->begin(), x->begin() + cols.size());
    for (std::size_t i = cols.size(); i < x->size(); ++i) {
        out.residual.add_term(basis[i - cols.size()], (*x)[i]);
    }
    return out;
}

}  // namespace

DegreeOps::DegreeOps(const Qhp& h, int m)
    : w_(h.weight()),
      m_(m),
      chi_(h.gdeg() - h.weight().delta()),
      field_(ham_field(h)),
      j_mons_(monomials_of_degree(m, w_)),
      i_mons_(monomials_of_degree(m + w_.delta(), w_)),
      integrals_(integrals(h, m)) {
    for (const auto& a : j_mons_) {
        euler_cols_.push_back(
            decompose(bracket(times_euler(Qhp(w_, m, Polynomial(a, 1))))).scalar_part.poly());
    }
    for (const auto& a : i_mons_) {
        stream_cols_.push_back(
            decompose(bracket(ham_field(Qhp(w_, m + w_.delta(), Polynomial(a, 1))))).ham_part.poly());
    }
    for (const auto& j : integrals_) {
        stream_cols_.push_back(decompose(bracket(times_euler(j))).ham_part.poly());
    }
}

Qhp DegreeOps::solve_euler(const Qhp& target) const {
    const auto sol = solve_in_span(euler_cols_, monomials_of_degree(m_ + chi_, w_), target.poly(), false);
    if (!sol) {
        throw Error(ErrorKind::InconsistentSolve,
                    "Euler-direction equation has no solution at g.d. " + std::to_string(m_ + chi_));
    }
    Polynomial j;
    for (std::size_t i = 0; i < j_mons_.size(); ++i) j.add_term(j_mons_[i], sol->coeffs[i]);
    return Qhp(w_, m_, j);
}

DegreeOps::StreamSolution DegreeOps::solve_stream(const Qhp& target) const {
    const auto sol = solve_in_span(stream_cols_, monomials_of_degree(m_ + chi_ + w_.delta(), w_),
                                   target.poly(), true);
    Polynomial i, j;
    for (std::size_t t = 0; t < i_mons_.size(); ++t) i.add_term(i_mons_[t], sol->coeffs[t]);
    for (std::size_t t = 0; t < integrals_.size(); ++t) {
        j += integrals_[t].poly() * sol->coeffs[i_mons_.size() + t];
    }
    return {Qhp(w_, m_ + w_.delta(), i), Qhp(w_, m_, j), sol->residual};
}

Qhp resonant_part(const ResonantBasis& basis, const ResonantSetChoice& set, const Qhp& p) {
    if (basis.gdeg != p.gdeg() || set.gdeg != p.gdeg()) {
        throw Error(ErrorKind::DegreeMismatch, "resonant data has the wrong g.d.");
    }
    if (basis.basis.empty()) return Qhp(p.weight(), p.gdeg());
    std::vector<Polynomial> s;
    for (const auto& m : set.monomials) s.emplace_back(m, 1);
    Vector c;
    for (const auto& r : basis.basis) c.push_back(inner(r.poly(), p.poly()));
    const auto b = solve(pairing_matrix(basis.basis, s), c);
    if (!b) throw Error(ErrorKind::SingularPairing, "pairing matrix is singular");
    Polynomial out;
    for (std::size_t j = 0; j < s.size(); ++j) out.add_term(set.monomials[j], (*b)[j]);
    return Qhp(p.weight(), p.gdeg(), out);
}

}  // namespace detail

FgSplit split_perturbation(const HamiltonianSystem& sys) {
    FgSplit out;
    for (const auto& [g, term] : sys.perturbation().terms()) {
        out.terms.emplace(g - sys.chi(), decompose(term));
    }
    return out;
}

std::string to_string(const Slot& s) {
    return "Y" + std::to_string(s.component) + "^(" + std::to_string(s.mon.p1) + "," +
           std::to_string(s.mon.p2) + ")";
}

std::map<Slot, Rational> coeffs_from_fg(const Qhp& f, const Qhp& g, const Weight& w) {
    if (f.gdeg() != g.gdeg() + w.delta()) {
        throw Error(ErrorKind::DegreeMismatch, "F must have the g.d. of G plus delta");
    }
    std::map<Slot, Rational> out;
    for (const auto& s : monomials_of_degree(f.gdeg(), w)) {
        const Monomial p{s.p1 - 1, s.p2 - 1};
        const Rational fs = f.poly().coefficient(s);
        const Rational gp = (p.p1 >= 0 && p.p2 >= 0) ? g.poly().coefficient(p) : Rational(0);
        if (s.p2 >= 1) {
            const Rational y1 = -s.p2 * fs + w.gamma1() * gp;
            if (y1 != 0) out.emplace(Slot{1, {s.p1, s.p2 - 1}}, y1);
        }
        if (s.p1 >= 1) {
            const Rational y2 = s.p1 * fs + w.gamma2() * gp;
            if (y2 != 0) out.emplace(Slot{2, {s.p1 - 1, s.p2}}, y2);
        }
    }
    return out;
}

std::map<Slot, Rational> coefficients(const Vqhp& v) {
    std::map<Slot, Rational> out;
    for (int i = 1; i <= 2; ++i) {
        for (const auto& [m, c] : v.component(i).terms()) out.emplace(Slot{i, m}, c);
    }
    return out;
}

DegreeSets minimal_sets(const Qhp& h, int k, PivotOrder order) {
    const Weight& w = h.weight();
    const int chi = h.gdeg() - w.delta();
    DegreeSets s;
    s.basis = resonant_basis(h, k + chi);
    s.set = minimal_resonant_set(s.basis, w, order);
    s.reduced_basis = reduced_resonant_basis(h, k + chi + w.delta());
    s.reduced_set = minimal_resonant_set(s.reduced_basis, w, order);
    return s;
}

SetsProvider user_sets(std::map<int, std::vector<Monomial>> resonant,
                       std::map<int, std::vector<Monomial>> reduced) {
    return [resonant = std::move(resonant), reduced = std::move(reduced)](const Qhp& h, int k) {
        DegreeSets s = minimal_sets(h, k);
        if (auto it = resonant.find(s.basis.gdeg); it != resonant.end()) {
            s.set = check_resonant_set(s.basis, it->second);
        }
        if (auto it = reduced.find(s.reduced_basis.gdeg); it != reduced.end()) {
            s.reduced_set = check_resonant_set(s.reduced_basis, it->second);
            s.reduced_set.reduced = true;
        }
        return s;
    };
}

StepResult gphnf_step(const HamiltonianSystem& sys, int m, const DegreeSets& sets) {
    const Weight& w = sys.weight();
    const Qhp& h = sys.hamiltonian();
    const int chi = sys.chi();
    if (m < 1) throw Error(ErrorKind::OutOfRange, "normalization starts at m = 1");
    const detail::DegreeOps ops(h, m);

    const Vqhp x = sys.perturbation().term(m + chi);
    const EulerSplit split = decompose(x);

    const Qhp g_tilde = detail::resonant_part(sets.basis, sets.set, split.scalar_part);
    const Qhp j = ops.solve_euler(Qhp(w, m + chi, split.scalar_part.poly() - g_tilde.poly()));
    const EulerSplit spill = decompose(ops.bracket(times_euler(j)));
    const Qhp f1(w, m + chi + w.delta(), split.ham_part.poly() - spill.ham_part.poly());

    Qhp f_tilde = detail::resonant_part(sets.reduced_basis, sets.reduced_set, f1);
    const auto stream = ops.solve_stream(Qhp(w, f1.gdeg(), f1.poly() - f_tilde.poly()));

    StepResult out{ham_field(stream.i) + times_euler(Qhp(w, m, j.poly() + stream.j.poly())),
                   f_tilde, g_tilde, std::nullopt};
    if (!stream.residual.is_zero()) {
        out.f_tilde = Qhp(w, f_tilde.gdeg(), f_tilde.poly() + stream.residual);
        out.obstruction = Obstruction{m, stream.residual};
    }
    const Vqhp expected = ham_field(out.f_tilde) + times_euler(out.g_tilde);
    if (!(x - ops.bracket(out.generator) == expected)) {
        throw Error(ErrorKind::InconsistentSolve,
                    "homological equation not satisfied at g.d. " + std::to_string(m + chi));
    }
    return out;
}

NormalizationResult compute_gphnf(const HamiltonianSystem& sys, const SetsProvider& provider) {
    NormalizationResult out{sys, {}, {}, {}};
    for (int m = 1; m <= sys.truncation() - sys.chi(); ++m) {
        const DegreeSets& sets = out.sets.emplace(m, provider(sys.hamiltonian(), m)).first->second;
        const StepResult step = gphnf_step(out.system, m, sets);
        if (step.obstruction) out.obstructions.push_back(*step.obstruction);
        if (step.generator.is_zero()) continue;
        out.system = push_forward(out.system, step.generator);
        out.transformation.append(step.generator);
    }
    return out;
}

std::size_t cokernel_dimension(const Qhp& h, int k) {
    const Weight& w = h.weight();
    const int chi = h.gdeg() - w.delta();
    const Vqhp field = ham_field(h);
    auto basis = [&](int g) {
        std::vector<Slot> slots;
        for (int i = 1; i <= 2; ++i) {
            for (const auto& m : monomials_of_degree(g + w.gamma(i), w)) slots.push_back({i, m});
        }
        return slots;
    };
    const auto src = basis(k);
    const auto dst = basis(k + chi);
    if (dst.empty()) return 0;
    std::vector<Vector> cols;
    for (const auto& s : src) {
        Polynomial c1, c2;
        (s.component == 1 ? c1 : c2) = Polynomial(s.mon, 1);
        const auto coeffs = coefficients(lie_bracket(field, Vqhp(w, k, c1, c2)));
        Vector col;
        for (const auto& d : dst) {
            auto it = coeffs.find(d);
            col.push_back(it == coeffs.end() ? Rational(0) : it->second);
        }
        cols.push_back(std::move(col));
    }
    return dst.size() - (src.empty() ? 0 : rank(Matrix::from_columns(cols, dst.size())));
}

}  // namespace gnf
