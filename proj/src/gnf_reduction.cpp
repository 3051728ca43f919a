#include <algorithm>

#include "degree_ops.hpp"
#include "gnf/error.hpp"
#include "gnf/linalg.hpp"
#include "gnf/normalizer.hpp"

namespace gnf {

const char* to_string(RuleTag r) {
    switch (r) {
        case RuleTag::i: return "i";
        case RuleTag::ii: return "ii";
        case RuleTag::iii: return "iii";
    }
    return "?";
}

bool YDegree::allows(const Slot& s) const {
    return std::any_of(slots.begin(), slots.end(), [&](const YSlot& y) { return y.slot == s; });
}

namespace {

// Slot of component i fed by the F monomial s = p + 1.
Slot slot_of(int i, Monomial s) { return i == 1 ? Slot{1, {s.p1, s.p2 - 1}} : Slot{2, {s.p1 - 1, s.p2}}; }

// p for the slot: inverse of slot_of.
Monomial index_of(const Slot& s) {
    return s.component == 1 ? Monomial{s.mon.p1 - 1, s.mon.p2} : Monomial{s.mon.p1, s.mon.p2 - 1};
}

int preferred_zero(const PairPolicy& policy, Monomial s) {
    if (policy.zero_overrides.contains(slot_of(1, s))) return 1;
    if (policy.zero_overrides.contains(slot_of(2, s))) return 2;
    return policy.base == PairPolicy::Default::ZeroFirst ? 1 : 2;
}

}  // namespace

YSet build_y_set(const Qhp& h, const std::map<int, DegreeSets>& sets, int truncation,
                 const PairPolicy& policy) {
    const Weight& w = h.weight();
    const int chi = h.gdeg() - w.delta();
    const Vqhp field = ham_field(h);
    YSet out;
    for (int k = 1; k <= truncation - chi; ++k) {
        auto it = sets.find(k);
        if (it == sets.end()) {
            throw Error(ErrorKind::OutOfRange, "no resonant sets for k = " + std::to_string(k));
        }
        YDegree deg;
        deg.k = k;
        deg.sets = it->second;
        deg.r = deg.sets.set.monomials.size();
        deg.r_reduced = deg.sets.reduced_set.monomials.size();
        for (const auto& s : monomials_of_degree(k + chi + w.delta(), w)) {
            const Monomial p{s.p1 - 1, s.p2 - 1};
            const bool boundary = p.p1 < 0 || p.p2 < 0;
            const bool in_f = deg.sets.reduced_set.contains(s);
            const bool in_g = !boundary && deg.sets.set.contains(p);
            if (boundary) {
                if (in_f) deg.slots.push_back({slot_of(s.p1 >= 1 ? 2 : 1, s), RuleTag::i, {}, {}});
            } else if (in_f && in_g) {
                deg.slots.push_back({slot_of(1, s), RuleTag::i, {}, {}});
                deg.slots.push_back({slot_of(2, s), RuleTag::i, {}, {}});
            } else if (in_g) {
                const int z = preferred_zero(policy, s);
                deg.slots.push_back({slot_of(3 - z, s), RuleTag::ii, slot_of(z, s), {}});
            } else if (in_f) {
                const int first = preferred_zero(policy, s);
                bool found = false;
                for (int z : {first, 3 - first}) {
                    const Slot zero = slot_of(z, s);
                    for (const auto& q : monomials_of_degree(k, w)) {
                        const Vqhp b = lie_bracket(field, times_euler(Qhp(w, k, Polynomial(q, 1))));
                        if (b.component(z).coefficient(zero.mon) != 0) {
                            deg.slots.push_back({slot_of(3 - z, s), RuleTag::iii, zero, q});
                            found = true;
                            break;
                        }
                    }
                    if (found) break;
                }
                if (!found) {
                    throw Error(ErrorKind::WitnessNotFound,
                                "no witness exponent for the pair at p = (" + std::to_string(p.p1) +
                                    "," + std::to_string(p.p2) + ")");
                }
            }
        }
        out.degrees.emplace(k, std::move(deg));
    }
    return out;
}

namespace {

struct Reduction {
    Vqhp generator;
    Qhp f;
    Qhp g;
    std::optional<Obstruction> obstruction;
};

struct Pair {
    Monomial p;
    int zero;  // component whose slot is eliminated
};

// Moves the coefficients of ham_field(f) + g E onto the YSet slots of degree k. The free
// parameters are the G values u at the rule iii monomials; everything else is affine in u,
// and the eliminated rule iii slots give a square system for u.
Reduction reduce_degree(const Qhp& h, int k, const YDegree& yd, const Qhp& f, const Qhp& g) {
    const Weight& w = h.weight();
    const detail::DegreeOps ops(h, k);
    std::vector<Pair> second, third;
    for (const auto& y : yd.slots) {
        if (!y.eliminated) continue;
        (y.rule == RuleTag::ii ? second : third).push_back({index_of(*y.eliminated), y.eliminated->component});
    }

    struct Eval {
        Qhp g_final, j, f_base, f_final;
        Vector constraint;
    };
    auto eval = [&](const Vector& u) {
        Polynomial fixed_g;
        for (std::size_t i = 0; i < third.size(); ++i) fixed_g.add_term(third[i].p, u[i]);
        const Qhp rest_g(w, g.gdeg(), g.poly() - fixed_g);
        const Qhp g_final(w, g.gdeg(), fixed_g + detail::resonant_part(yd.sets.basis, yd.sets.set, rest_g).poly());
        const Qhp j = ops.solve_euler(Qhp(w, g.gdeg(), g.poly() - g_final.poly()));
        const Qhp f_base(w, f.gdeg(), f.poly() - decompose(ops.bracket(times_euler(j))).ham_part.poly());

        Polynomial fixed_f;
        for (const auto& [p, z] : second) {
            const Rational gp = g_final.poly().coefficient(p);
            const Rational t = z == 2 ? -w.gamma2() * gp / (p.p1 + 1) : w.gamma1() * gp / (p.p2 + 1);
            fixed_f.add_term({p.p1 + 1, p.p2 + 1}, t);
        }
        const Qhp rest_f(w, f.gdeg(), f_base.poly() - fixed_f);
        const Qhp f_final(w, f.gdeg(),
                          fixed_f + detail::resonant_part(yd.sets.reduced_basis, yd.sets.reduced_set, rest_f).poly());

        Vector constraint;
        for (std::size_t i = 0; i < third.size(); ++i) {
            const Monomial p = third[i].p;
            const Rational fs = f_final.poly().coefficient({p.p1 + 1, p.p2 + 1});
            constraint.push_back(third[i].zero == 1 ? -(p.p2 + 1) * fs + w.gamma1() * u[i]
                                                    : (p.p1 + 1) * fs + w.gamma2() * u[i]);
        }
        return Eval{g_final, j, f_base, f_final, constraint};
    };

    const std::size_t n = third.size();
    Vector u(n, Rational(0));
    if (n > 0) {
        const Eval base = eval(u);
        std::vector<Vector> cols;
        for (std::size_t i = 0; i < n; ++i) {
            Vector e(n, Rational(0));
            e[i] = 1;
            Vector col = eval(e).constraint;
            for (std::size_t r = 0; r < n; ++r) col[r] -= base.constraint[r];
            cols.push_back(std::move(col));
        }
        const Matrix m = Matrix::from_columns(cols, n);
        if (determinant(m) == 0) {
            throw Error(ErrorKind::SingularJointSystem,
                        "eliminations at k = " + std::to_string(k) + " give a singular system");
        }
        Vector rhs;
        for (const auto& c : base.constraint) rhs.push_back(-c);
        u = *solve(m, rhs);
    }
    const Eval fin = eval(u);
    const auto stream = ops.solve_stream(Qhp(w, f.gdeg(), fin.f_base.poly() - fin.f_final.poly()));

    Reduction out{ham_field(stream.i) + times_euler(Qhp(w, k, fin.j.poly() + stream.j.poly())),
                  fin.f_final, fin.g_final, std::nullopt};
    if (!stream.residual.is_zero()) {
        out.f = Qhp(w, f.gdeg(), out.f.poly() + stream.residual);
        out.obstruction = Obstruction{k, stream.residual};
    }
    const Vqhp before = ham_field(f) + times_euler(g);
    if (!(before - ops.bracket(out.generator) == ham_field(out.f) + times_euler(out.g))) {
        throw Error(ErrorKind::InconsistentSolve,
                    "reduction equation not satisfied at k = " + std::to_string(k));
    }
    return out;
}

}  // namespace

NormalizationResult reduce_to_gnf(const HamiltonianSystem& gphnf, const YSet& y) {
    const int chi = gphnf.chi();
    NormalizationResult out{gphnf, {}, {}, {}};
    for (int k = 1; k <= gphnf.truncation() - chi; ++k) {
        auto it = y.degrees.find(k);
        if (it == y.degrees.end()) {
            throw Error(ErrorKind::OutOfRange, "YSet has no entry for k = " + std::to_string(k));
        }
        const YDegree& yd = it->second;
        out.sets.emplace(k, yd.sets);
        const StepResult step = gphnf_step(out.system, k, yd.sets);
        const Reduction red = reduce_degree(gphnf.hamiltonian(), k, yd, step.f_tilde, step.g_tilde);
        if (red.obstruction) out.obstructions.push_back(*red.obstruction);
        const Vqhp q = step.generator + red.generator;
        if (q.is_zero()) continue;
        out.system = push_forward(out.system, q);
        out.transformation.append(q);
    }
    return out;
}

GnfResult compute_gnf(const HamiltonianSystem& sys, const SetsProvider& provider, const PairPolicy& policy) {
    NormalizationResult first = compute_gphnf(sys, provider);
    YSet y = build_y_set(sys.hamiltonian(), first.sets, sys.truncation(), policy);
    NormalizationResult second = reduce_to_gnf(first.system, y);
    Transformation t = first.transformation;
    t.append(second.transformation);
    return {std::move(first), std::move(y), std::move(second), std::move(t)};
}

std::vector<std::pair<int, Slot>> support_violations(const HamiltonianSystem& sys, const YSet& y) {
    std::vector<std::pair<int, Slot>> out;
    for (const auto& [g, term] : sys.perturbation().terms()) {
        const int k = g - sys.chi();
        auto it = y.degrees.find(k);
        for (const auto& [slot, c] : coefficients(term)) {
            if (it == y.degrees.end() || !it->second.allows(slot)) out.emplace_back(k, slot);
        }
    }
    return out;
}

}  // namespace gnf
