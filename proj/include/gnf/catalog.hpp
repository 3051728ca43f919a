#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gnf/normalizer.hpp"

namespace gnf::catalog {

/// The four monomial-component families of unperturbed parts.
///   Takens:     (x2^(m-1), 0), m >= 2
///   LmMonomial: H = x1^l x2^m, l > m >= 1
///   Diagonal:   H = x1^m x2^m / m, m >= 1
///   Binomial:   (sign * x2^(m-1), x1^(l-1)), l >= m >= 2, sign = +1 | -1
struct CaseId {
    enum class Family { Takens, LmMonomial, Diagonal, Binomial };
    Family family = Family::Takens;
    int l = 0;
    int m = 2;
    int sign = 1;

    static CaseId takens(int m) { return {Family::Takens, 0, m, 1}; }
    static CaseId lm(int l, int m) { return {Family::LmMonomial, l, m, 1}; }
    static CaseId diagonal(int m) { return {Family::Diagonal, 0, m, 1}; }
    static CaseId binomial(int l, int m, int sign = 1) { return {Family::Binomial, l, m, sign}; }
};

/// Parses "takens:m", "lm:l,m", "diag:m" or "binom:l,m[,+|-]". Throws InvalidParams.
CaseId parse_case(const std::string& text);
std::string to_string(const CaseId& c);

struct Unperturbed {
    Qhp hamiltonian;
    Weight weight;
    int chi;
};

/// Throws InvalidParams when the parameters violate the family's constraints.
Unperturbed unperturbed(const CaseId& c);

/// Exponents of the monomials spanning the resonant space at g.d. k. For the binomial
/// family this is the minimal resonant set with r_p = 0 (it pairs nonsingularly with the
/// space but need not span it), and k must exceed lm/d (OutOfRange).
std::set<Monomial> predict_resonant(const CaseId& c, int k);
/// Same for the reduced space, in the degrees where a closed form is stated
/// (k > m, k > l + m, k > 2m, k > lm/d respectively); OutOfRange below that.
std::set<Monomial> predict_reduced(const CaseId& c, int k);

/// Coefficients allowed to be nonzero in the normal form, for field g.d. chi+1..N.
struct SupportPrediction {
    std::set<Slot> singles;
    std::vector<std::pair<Slot, Slot>> pairs;  // at most one member nonzero
    std::set<Slot> forced_zero;                // pair members the family always eliminates
    bool allows(const Slot& s) const;
    /// Singles plus the member of each pair that the policy keeps.
    std::set<Slot> resolve(const PairPolicy& policy) const;
};

SupportPrediction predict_support(const CaseId& c, int truncation);

}  // namespace gnf::catalog
