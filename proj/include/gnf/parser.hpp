#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gnf/system.hpp"

namespace gnf {

/// Polynomial expression: integers, x1/x2 (aliases x/y), + - * ^, parentheses, and
/// division by an integer literal. Throws ParseError with the byte offset (plus offset).
Polynomial parse_polynomial(const std::string& text, std::size_t offset = 0);

/// Statements separated by ';' or newlines; '#' starts a comment.
///   weight G1 G2 | chi C | N = n | H = expr | P1 = expr | P2 = expr
///   S g = m1, m2, ...    resonant set monomials at polynomial g.d. g
///   St g = m1, m2, ...   reduced resonant set monomials at polynomial g.d. g
struct SystemDocument {
    std::optional<std::pair<int, int>> weight;
    std::optional<int> chi;
    std::optional<int> truncation;
    std::optional<Polynomial> hamiltonian;
    Polynomial p1;
    Polynomial p2;
    std::map<int, std::vector<Monomial>> resonant_sets;
    std::map<int, std::vector<Monomial>> reduced_sets;
};

SystemDocument parse_document(const std::string& text);

/// Validates and assembles the system. Perturbation terms above N are dropped.
/// Errors: InvalidWeight (weight-not-coprime), NotQuasiHomogeneous, OrderTooLow, Validation.
HamiltonianSystem build_system(const SystemDocument& doc);

HamiltonianSystem parse_system(const std::string& text);

/// A document that parse_system maps back to the same system.
std::string render_system(const HamiltonianSystem& sys);

}  // namespace gnf
