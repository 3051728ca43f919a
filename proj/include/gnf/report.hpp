#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gnf/catalog.hpp"
#include "gnf/normalizer.hpp"

namespace gnf {

enum class Mode { Resonance, Gphnf, Gnf };
enum class Format { Text, Records };

struct JobConfig {
    Mode mode = Mode::Gnf;
    PairPolicy policy;
    Format format = Format::Text;
    bool verify = false;
    std::optional<catalog::CaseId> preset;
    std::map<int, std::vector<Monomial>> resonant_sets;  // keyed by polynomial g.d.
    std::map<int, std::vector<Monomial>> reduced_sets;
};

/// The catalog system of a preset: zero perturbation, or with a seed every monomial of
/// g.d. chi+1..N gets a nonzero rational p/q, |p| <= 9, 1 <= q <= 5.
HamiltonianSystem preset_system(const catalog::CaseId& c, int truncation, std::optional<std::uint32_t> seed);

/// Runs the job and renders the output document.
std::string run_job(const JobConfig& cfg, const HamiltonianSystem& sys);

}  // namespace gnf
