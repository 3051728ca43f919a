#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gnf/euler_split.hpp"
#include "gnf/pushforward.hpp"
#include "gnf/resonance.hpp"
#include "gnf/system.hpp"

namespace gnf {

/// Per k >= 1: the term of g.d. k + chi split as ham_field(F_k) + G_k * E.
/// ham_part is F_k (g.d. k + chi + delta), scalar_part is G_k (g.d. k + chi).
struct FgSplit {
    std::map<int, EulerSplit> terms;
};

FgSplit split_perturbation(const HamiltonianSystem& sys);

/// A coefficient of a vector polynomial: component 1|2 and exponent.
struct Slot {
    int component = 1;
    Monomial mon;
    friend auto operator<=>(const Slot&, const Slot&) = default;
};
std::string to_string(const Slot& s);

/// Nonzero coefficients of ham_field(F) + G * E built monomial by monomial:
/// Y1^(p1+1,p2) = -(p2+1) F^(p+1) + gamma1 G^p and Y2^(p1,p2+1) = (p1+1) F^(p+1) + gamma2 G^p.
std::map<Slot, Rational> coeffs_from_fg(const Qhp& f, const Qhp& g, const Weight& w);
/// Nonzero coefficients of a vector polynomial.
std::map<Slot, Rational> coefficients(const Vqhp& v);

/// Resonant data used at perturbation index k (field g.d. k + chi): a basis of the resonant
/// space at g.d. k + chi with its chosen set, and the reduced ones at g.d. k + chi + delta.
struct DegreeSets {
    ResonantBasis basis;
    ResonantSetChoice set;
    ResonantBasis reduced_basis;
    ResonantSetChoice reduced_set;
};

using SetsProvider = std::function<DegreeSets(const Qhp& h, int k)>;

/// Minimal monomial sets chosen by lexicographic pivoting.
DegreeSets minimal_sets(const Qhp& h, int k, PivotOrder order = PivotOrder::LexDescending);
/// Uses the given monomial lists (keyed by polynomial g.d.) where present and minimal sets
/// elsewhere. Lists are validated when the provider is called.
SetsProvider user_sets(std::map<int, std::vector<Monomial>> resonant,
                       std::map<int, std::vector<Monomial>> reduced);

/// Part of a stream function that no generator could remove at a degree.
struct Obstruction {
    int k;
    Polynomial residual;
};

struct StepResult {
    Vqhp generator;
    Qhp f_tilde;
    Qhp g_tilde;
    std::optional<Obstruction> obstruction;
};

/// Normalizes the term of g.d. m + chi, assuming lower degrees are done.
StepResult gphnf_step(const HamiltonianSystem& sys, int m, const DegreeSets& sets);

struct NormalizationResult {
    HamiltonianSystem system;
    Transformation transformation;
    std::map<int, DegreeSets> sets;
    std::vector<Obstruction> obstructions;
};

NormalizationResult compute_gphnf(const HamiltonianSystem& sys, const SetsProvider& provider);

enum class RuleTag { i, ii, iii };
const char* to_string(RuleTag r);

/// Which member of an either/or pair is eliminated. zero_overrides lists slots that must be
/// zeroed whenever they are one member of a pair.
struct PairPolicy {
    enum class Default { ZeroFirst, ZeroSecond };
    Default base = Default::ZeroFirst;
    std::set<Slot> zero_overrides;
};

struct YSlot {
    Slot slot;
    RuleTag rule;
    std::optional<Slot> eliminated;   // the other member of a pair
    std::optional<Monomial> witness;  // q for rule iii
};

struct YDegree {
    int k = 0;
    std::vector<YSlot> slots;
    std::size_t r = 0;          // |S| at g.d. k + chi
    std::size_t r_reduced = 0;  // |reduced S| at g.d. k + chi + delta
    DegreeSets sets;
    bool allows(const Slot& s) const;
};

struct YSet {
    std::map<int, YDegree> degrees;
};

/// Builds the slots allowed to stay nonzero for k = 1..N - chi.
YSet build_y_set(const Qhp& h, const std::map<int, DegreeSets>& sets, int truncation,
                 const PairPolicy& policy = {});

/// Takes a GPHNF system to GNF: the nonzero coefficients of every degree end up in the
/// YSet slots unless an obstruction is reported for that degree.
NormalizationResult reduce_to_gnf(const HamiltonianSystem& gphnf, const YSet& y);

struct GnfResult {
    NormalizationResult gphnf;
    YSet y;
    NormalizationResult gnf;
    Transformation transformation;  // gphnf generators followed by the reduction generators
};

GnfResult compute_gnf(const HamiltonianSystem& sys, const SetsProvider& provider,
                      const PairPolicy& policy = {});

/// Nonzero coefficients of the perturbation outside the YSet slots.
std::vector<std::pair<int, Slot>> support_violations(const HamiltonianSystem& sys, const YSet& y);

/// Residual of the conjugacy identity (I + DQ) W = V(y + Q(y)) for the composed map Q,
/// grouped by field g.d. up to N. Only nonzero residual degrees are listed.
struct ConjugacyReport {
    std::map<int, std::map<Slot, Rational>> residuals;
    bool ok() const { return residuals.empty(); }
};

ConjugacyReport verify_conjugacy(const HamiltonianSystem& original, const Transformation& t,
                                 const HamiltonianSystem& result);

/// dim of the VQHP space of g.d. k + chi minus the rank of v -> [H-field, v] on g.d. k,
/// by brute force over the monomial basis.
std::size_t cokernel_dimension(const Qhp& h, int k);

}  // namespace gnf
