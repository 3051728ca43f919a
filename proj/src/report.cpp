#include "gnf/report.hpp"

#include <random>
#include <sstream>

namespace gnf {

namespace {

struct ResonanceEntry {
    ResonantBasis basis;
    ResonantSetChoice set;
    ResonantBasis reduced_basis;
    ResonantSetChoice reduced_set;
};

struct SupportCheck {
    std::vector<Slot> outside;
    std::vector<std::pair<Slot, Slot>> conflicts;
    bool ok() const { return outside.empty() && conflicts.empty(); }
};

struct Report {
    const JobConfig& cfg;
    const HamiltonianSystem& input;
    std::map<int, ResonanceEntry> resonance;
    std::optional<HamiltonianSystem> output;
    std::vector<Generator> generators;
    std::optional<Field> composed;
    std::optional<YSet> y;
    std::vector<Obstruction> obstructions;
    std::optional<ConjugacyReport> verification;
    std::optional<SupportCheck> support_check;
};

const char* mode_name(Mode m) {
    switch (m) {
        case Mode::Resonance: return "resonance";
        case Mode::Gphnf: return "gphnf";
        case Mode::Gnf: return "gnf";
    }
    return "?";
}

const char* policy_name(const PairPolicy& p) {
    return p.base == PairPolicy::Default::ZeroFirst ? "zero-first" : "zero-second";
}

std::string frac(const Rational& r) { return r.get_num().get_str() + " " + r.get_den().get_str(); }

std::string field_text(const Field& f) { return "(" + f.f1.to_string() + ", " + f.f2.to_string() + ")"; }

std::string mono_text(Monomial m) { return Polynomial(m, 1).to_string(); }

// The composed map lives in the new coordinates.
std::string in_y(const Polynomial& p) {
    std::string s = p.to_string();
    for (char& c : s) {
        if (c == 'x') c = 'y';
    }
    return s[0] == '-' ? "- " + s.substr(1) : "+ " + s;
}

Report build(const JobConfig& cfg, const HamiltonianSystem& sys) {
    Report r{cfg, sys, {}, {}, {}, {}, {}, {}, {}, {}};
    const Qhp& h = sys.hamiltonian();
    if (cfg.mode == Mode::Resonance) {
        for (int g = 0; g <= sys.truncation(); ++g) {
            ResonanceEntry e;
            e.basis = resonant_basis(h, g);
            e.set = cfg.resonant_sets.contains(g) ? check_resonant_set(e.basis, cfg.resonant_sets.at(g))
                                                  : minimal_resonant_set(e.basis, sys.weight());
            e.reduced_basis = reduced_resonant_basis(h, g);
            e.reduced_set = cfg.reduced_sets.contains(g) ? check_resonant_set(e.reduced_basis, cfg.reduced_sets.at(g))
                                                         : minimal_resonant_set(e.reduced_basis, sys.weight());
            r.resonance.emplace(g, std::move(e));
        }
        return r;
    }
    const SetsProvider provider = user_sets(cfg.resonant_sets, cfg.reduced_sets);
    Transformation t;
    if (cfg.mode == Mode::Gphnf) {
        NormalizationResult n = compute_gphnf(sys, provider);
        r.output = n.system;
        t = n.transformation;
        r.obstructions = n.obstructions;
    } else {
        GnfResult g = compute_gnf(sys, provider, cfg.policy);
        r.output = g.gnf.system;
        t = g.transformation;
        r.y = g.y;
        r.obstructions = g.gphnf.obstructions;
        r.obstructions.insert(r.obstructions.end(), g.gnf.obstructions.begin(), g.gnf.obstructions.end());
        r.composed = t.composed(sys.weight(), sys.truncation());
        if (cfg.preset) {
            const catalog::SupportPrediction pred = catalog::predict_support(*cfg.preset, sys.truncation());
            SupportCheck c;
            std::set<Slot> nonzero;
            for (const auto& [k, term] : r.output->perturbation().terms()) {
                for (const auto& [s, v] : coefficients(term)) {
                    nonzero.insert(s);
                    if (!pred.allows(s)) c.outside.push_back(s);
                }
            }
            for (const auto& pr : pred.pairs) {
                if (nonzero.contains(pr.first) && nonzero.contains(pr.second)) c.conflicts.push_back(pr);
            }
            r.support_check = c;
        }
    }
    r.generators = t.generators();
    if (cfg.verify) r.verification = verify_conjugacy(sys, t, *r.output);
    return r;
}

void text_system(std::ostream& os, const HamiltonianSystem& s) {
    for (const auto& [g, term] : s.perturbation().terms()) {
        os << "  g.d. " << g << ": " << field_text(term.field()) << "\n";
    }
    if (s.perturbation().terms().empty()) os << "  (no perturbation terms)\n";
}

std::string render_text(const Report& r) {
    std::ostringstream os;
    const HamiltonianSystem& in = r.input;
    os << "input\n"
       << "  weight (" << in.weight().gamma1() << ", " << in.weight().gamma2() << "), chi " << in.chi()
       << ", truncation " << in.truncation() << "\n"
       << "  H = " << in.hamiltonian().poly().to_string() << "\n"
       << "  unperturbed field " << field_text(in.unperturbed().field()) << "\n";
    if (r.cfg.preset) os << "  preset " << catalog::to_string(*r.cfg.preset) << "\n";
    text_system(os, in);

    if (r.cfg.mode == Mode::Resonance) {
        for (const auto& [g, e] : r.resonance) {
            os << "resonance at g.d. " << g << "\n";
            os << "  basis:";
            if (e.basis.basis.empty()) os << " (empty)";
            for (const auto& b : e.basis.basis) os << " [" << b.poly().to_string() << "]";
            os << "\n  minimal set:";
            if (e.set.monomials.empty()) os << " (none)";
            for (const auto& m : e.set.monomials) os << " " << mono_text(m);
            os << "\n  reduced basis:";
            if (e.reduced_basis.basis.empty()) os << " (empty)";
            for (const auto& b : e.reduced_basis.basis) os << " [" << b.poly().to_string() << "]";
            os << "\n  reduced minimal set:";
            if (e.reduced_set.monomials.empty()) os << " (none)";
            for (const auto& m : e.reduced_set.monomials) os << " " << mono_text(m);
            os << "\n";
        }
        return os.str();
    }

    os << "normal form (" << mode_name(r.cfg.mode);
    if (r.cfg.mode == Mode::Gnf) os << ", policy " << policy_name(r.cfg.policy);
    os << ")\n";
    text_system(os, *r.output);
    os << "support\n";
    for (const auto& [g, term] : r.output->perturbation().terms()) {
        os << "  g.d. " << g << ":";
        for (const auto& [s, v] : coefficients(term)) os << " " << to_string(s) << " = " << v.get_str();
        os << "\n";
    }
    os << "generators\n";
    if (r.generators.empty()) os << "  (identity)\n";
    for (std::size_t i = 0; i < r.generators.size(); ++i) {
        const Generator& g = r.generators[i];
        os << "  step " << i + 1 << ", g.d. " << g.gdeg << ": Q = " << field_text(g.q.field()) << "\n";
    }
    if (r.composed) {
        os << "composed transformation\n"
           << "  x1 = y1 " << in_y(r.composed->f1) << "\n"
           << "  x2 = y2 " << in_y(r.composed->f2) << "\n";
    }
    if (r.y) {
        os << "y-set\n";
        for (const auto& [k, d] : r.y->degrees) {
            os << "  k = " << k << " (r = " << d.r << ", reduced r = " << d.r_reduced << "):";
            if (d.slots.empty()) os << " (none)";
            for (const auto& s : d.slots) {
                os << " " << to_string(s.slot) << " [" << to_string(s.rule);
                if (s.eliminated) os << ", zeroes " << to_string(*s.eliminated);
                if (s.witness) os << ", witness q = (" << s.witness->p1 << "," << s.witness->p2 << ")";
                os << "]";
            }
            os << "\n";
        }
    }
    os << "obstructions\n";
    if (r.obstructions.empty()) os << "  none\n";
    for (const auto& o : r.obstructions) os << "  k = " << o.k << ": " << o.residual.to_string() << "\n";
    if (r.support_check) {
        os << "support check against " << catalog::to_string(*r.cfg.preset) << "\n";
        for (const auto& s : r.support_check->outside) os << "  outside prediction: " << to_string(s) << "\n";
        for (const auto& [a, b] : r.support_check->conflicts) {
            os << "  both pair members nonzero: " << to_string(a) << ", " << to_string(b) << "\n";
        }
        if (r.support_check->ok()) os << "  support matches the prediction\n";
    }
    if (r.verification) {
        os << "verification\n";
        if (r.verification->ok()) os << "  all residuals zero\n";
        for (const auto& [g, slots] : r.verification->residuals) {
            os << "  g.d. " << g << ":";
            for (const auto& [s, v] : slots) os << " " << to_string(s) << " = " << v.get_str();
            os << "\n";
        }
    }
    return os.str();
}

void records_field(std::ostream& os, const Field& f) {
    for (int i = 1; i <= 2; ++i) {
        for (const auto& [m, c] : f.component(i).terms()) {
            os << "coef " << i << " " << m.p1 << " " << m.p2 << " " << frac(c) << "\n";
        }
    }
}

void records_poly(std::ostream& os, const char* tag, const Polynomial& p) {
    for (const auto& [m, c] : p.terms()) os << tag << " " << m.p1 << " " << m.p2 << " " << frac(c) << "\n";
}

std::string render_records(const Report& r) {
    std::ostringstream os;
    const HamiltonianSystem& in = r.input;
    os << "format gnf-records 1\n"
       << "mode " << mode_name(r.cfg.mode) << "\n"
       << "weight " << in.weight().gamma1() << " " << in.weight().gamma2() << "\n"
       << "chi " << in.chi() << "\n"
       << "truncation " << in.truncation() << "\n";
    if (r.cfg.mode == Mode::Gnf) os << "policy " << policy_name(r.cfg.policy) << "\n";
    if (r.cfg.preset) os << "case " << catalog::to_string(*r.cfg.preset) << "\n";
    os << "begin hamiltonian\n";
    records_poly(os, "mono", in.hamiltonian().poly());
    os << "end hamiltonian\nbegin input\n";
    records_field(os, in.perturbation().to_field());
    os << "end input\n";

    for (const auto& [g, e] : r.resonance) {
        os << "begin resonance " << g << "\n";
        for (std::size_t i = 0; i < e.basis.basis.size(); ++i) {
            for (const auto& [m, c] : e.basis.basis[i].poly().terms()) {
                os << "basis " << i << " " << m.p1 << " " << m.p2 << " " << frac(c) << "\n";
            }
        }
        for (const auto& m : e.set.monomials) os << "set " << m.p1 << " " << m.p2 << "\n";
        os << "certificate " << frac(e.set.certificate) << "\n";
        for (std::size_t i = 0; i < e.reduced_basis.basis.size(); ++i) {
            for (const auto& [m, c] : e.reduced_basis.basis[i].poly().terms()) {
                os << "reduced-basis " << i << " " << m.p1 << " " << m.p2 << " " << frac(c) << "\n";
            }
        }
        for (const auto& m : e.reduced_set.monomials) os << "reduced-set " << m.p1 << " " << m.p2 << "\n";
        os << "reduced-certificate " << frac(e.reduced_set.certificate) << "\n";
        os << "end resonance\n";
    }
    if (r.output) {
        os << "begin output\n";
        records_field(os, r.output->perturbation().to_field());
        os << "end output\n";
        for (const auto& g : r.generators) {
            os << "begin generator " << g.gdeg << "\n";
            records_field(os, g.q.field());
            os << "end generator\n";
        }
    }
    if (r.composed) {
        os << "begin composed\n";
        records_field(os, *r.composed);
        os << "end composed\n";
    }
    if (r.y) {
        os << "begin yset\n";
        for (const auto& [k, d] : r.y->degrees) {
            os << "degree " << k << " " << d.r << " " << d.r_reduced << "\n";
            for (const auto& s : d.slots) {
                os << "slot " << k << " " << s.slot.component << " " << s.slot.mon.p1 << " " << s.slot.mon.p2 << " "
                   << to_string(s.rule);
                if (s.eliminated) {
                    os << " zero " << s.eliminated->component << " " << s.eliminated->mon.p1 << " "
                       << s.eliminated->mon.p2;
                }
                if (s.witness) os << " witness " << s.witness->p1 << " " << s.witness->p2;
                os << "\n";
            }
        }
        os << "end yset\n";
    }
    if (r.output) {
        os << "begin obstructions\n";
        for (const auto& o : r.obstructions) {
            for (const auto& [m, c] : o.residual.terms()) {
                os << "obstruction " << o.k << " " << m.p1 << " " << m.p2 << " " << frac(c) << "\n";
            }
        }
        os << "end obstructions\n";
    }
    if (r.support_check) {
        os << "begin support-check\n";
        for (const auto& s : r.support_check->outside) {
            os << "outside " << s.component << " " << s.mon.p1 << " " << s.mon.p2 << "\n";
        }
        for (const auto& [a, b] : r.support_check->conflicts) {
            os << "conflict " << a.component << " " << a.mon.p1 << " " << a.mon.p2 << " " << b.component << " "
               << b.mon.p1 << " " << b.mon.p2 << "\n";
        }
        os << "status " << (r.support_check->ok() ? "ok" : "mismatch") << "\n";
        os << "end support-check\n";
    }
    if (r.verification) {
        os << "begin verification\n";
        for (const auto& [g, slots] : r.verification->residuals) {
            for (const auto& [s, v] : slots) {
                os << "residual " << g << " " << s.component << " " << s.mon.p1 << " " << s.mon.p2 << " " << frac(v)
                   << "\n";
            }
        }
        os << "status " << (r.verification->ok() ? "ok" : "mismatch") << "\n";
        os << "end verification\n";
    }
    return os.str();
}

}  // namespace

HamiltonianSystem preset_system(const catalog::CaseId& c, int truncation, std::optional<std::uint32_t> seed) {
    const catalog::Unperturbed u = catalog::unperturbed(c);
    VectorSeries pert(u.weight, truncation);
    if (seed) {
        // Raw engine output only, so the numbers do not depend on the standard library.
        std::mt19937 rng(*seed);
        auto coefficient = [&] {
            for (;;) {
                const int num = static_cast<int>(rng() % 19) - 9;
                const int den = static_cast<int>(rng() % 5) + 1;
                if (num != 0) {
                    Rational r(num, den);
                    r.canonicalize();
                    return r;
                }
            }
        };
        for (int g = u.chi + 1; g <= truncation; ++g) {
            Polynomial a, b;
            for (const auto& m : monomials_of_degree(g + u.weight.gamma1(), u.weight)) a.add_term(m, coefficient());
            for (const auto& m : monomials_of_degree(g + u.weight.gamma2(), u.weight)) b.add_term(m, coefficient());
            pert.set_term(Vqhp(u.weight, g, a, b));
        }
    }
    return HamiltonianSystem(u.hamiltonian, pert);
}

std::string run_job(const JobConfig& cfg, const HamiltonianSystem& sys) {
    const Report r = build(cfg, sys);
    return cfg.format == Format::Text ? render_text(r) : render_records(r);
}

}  // namespace gnf
