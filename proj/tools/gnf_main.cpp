#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "gnf/error.hpp"
#include "gnf/parser.hpp"
#include "gnf/report.hpp"

namespace {

enum Exit { Ok = 0, ValidationFailure = 1, ParseFailure = 2, InternalFailure = 3 };

int exit_code(gnf::ErrorKind k) {
    switch (k) {
        case gnf::ErrorKind::Parse: return ParseFailure;
        case gnf::ErrorKind::InconsistentSolve: return InternalFailure;
        default: return ValidationFailure;
    }
}

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), {}}; }

// "1,a,b" or "Y1^(a,b)".
gnf::Slot parse_slot(const std::string& text) {
    int c = 0, a = 0, b = 0;
    char tail = 0;
    if (std::sscanf(text.c_str(), "%d,%d,%d%c", &c, &a, &b, &tail) == 3 ||
        std::sscanf(text.c_str(), "Y%d^(%d,%d)%c", &c, &a, &b, &tail) == 3) {
        if ((c == 1 || c == 2) && a >= 0 && b >= 0) return {c, gnf::Monomial{a, b}};
    }
    throw gnf::Error(gnf::ErrorKind::Validation, "bad slot '" + text + "', expected C,P1,P2 or YC^(P1,P2)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized normal forms of planar quasi-homogeneous Hamiltonian systems"};
    std::vector<int> weight;
    std::optional<int> chi;
    int truncation = 8;
    std::string mode = "gnf", policy = "zero-first", format = "text", preset, input, output;
    std::vector<std::string> zero;
    std::optional<std::uint32_t> seed;
    bool verify = false;

    app.add_option("--weight", weight, "weight G1 G2")->expected(2);
    app.add_option("--chi", chi, "chi, checked against the Hamiltonian");
    auto* trunc_opt = app.add_option("--truncate", truncation, "truncation order N")->capture_default_str();
    app.add_option("--mode", mode)->check(CLI::IsMember({"resonance", "gphnf", "gnf"}))->capture_default_str();
    app.add_option("--policy", policy)->check(CLI::IsMember({"zero-first", "zero-second"}))->capture_default_str();
    app.add_option("--zero", zero, "pair member to eliminate, C,P1,P2 (repeatable)");
    app.add_option("--preset", preset, "takens:m | lm:l,m | diag:m | binom:l,m[,sign]");
    app.add_option("--seed", seed, "with --preset: dense random perturbation from this seed");
    app.add_flag("--verify", verify, "append the conjugacy check");
    app.add_option("--format", format)->check(CLI::IsMember({"text", "records"}))->capture_default_str();
    app.add_option("--input", input, "system document (default: stdin unless --preset)");
    app.add_option("--output", output, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? Ok : ValidationFailure;
    }

    try {
        gnf::JobConfig cfg;
        cfg.mode = mode == "resonance" ? gnf::Mode::Resonance : mode == "gphnf" ? gnf::Mode::Gphnf : gnf::Mode::Gnf;
        cfg.policy.base = policy == "zero-second" ? gnf::PairPolicy::Default::ZeroSecond
                                                  : gnf::PairPolicy::Default::ZeroFirst;
        for (const auto& z : zero) cfg.policy.zero_overrides.insert(parse_slot(z));
        cfg.format = format == "records" ? gnf::Format::Records : gnf::Format::Text;
        cfg.verify = verify;

        std::optional<gnf::HamiltonianSystem> sys;
        if (!preset.empty()) {
            if (!input.empty()) throw gnf::Error(gnf::ErrorKind::Validation, "--preset and --input are exclusive");
            cfg.preset = gnf::catalog::parse_case(preset);
            sys = gnf::preset_system(*cfg.preset, truncation, seed);
        } else {
            if (seed) throw gnf::Error(gnf::ErrorKind::Validation, "--seed needs --preset");
            std::string text;
            if (input.empty()) {
                text = read_all(std::cin);
            } else {
                std::ifstream in(input);
                if (!in) throw gnf::Error(gnf::ErrorKind::Validation, "cannot read '" + input + "'");
                text = read_all(in);
            }
            gnf::SystemDocument doc = gnf::parse_document(text);
            // Flags fill in what the document leaves out; an explicit --truncate wins.
            if (!doc.weight && weight.size() == 2) doc.weight = std::pair{weight[0], weight[1]};
            if (!doc.chi && chi) doc.chi = chi;
            if (!doc.truncation || trunc_opt->count() > 0) doc.truncation = truncation;
            cfg.resonant_sets = doc.resonant_sets;
            cfg.reduced_sets = doc.reduced_sets;
            sys = gnf::build_system(doc);
        }
        if (weight.size() == 2 &&
            (sys->weight().gamma1() != weight[0] || sys->weight().gamma2() != weight[1])) {
            throw gnf::Error(gnf::ErrorKind::Validation, "--weight does not match the system's weight");
        }
        if (chi && sys->chi() != *chi) {
            throw gnf::Error(gnf::ErrorKind::Validation,
                             "--chi " + std::to_string(*chi) + " but the Hamiltonian gives " + std::to_string(sys->chi()));
        }

        const std::string doc = gnf::run_job(cfg, *sys);
        if (output.empty()) {
            std::cout << doc;
        } else {
            std::ofstream out(output, std::ios::binary);
            out << doc;
            if (!out) throw gnf::Error(gnf::ErrorKind::Validation, "cannot write '" + output + "'");
        }
        return Ok;
    } catch (const gnf::Error& e) {
        std::cerr << "error (" << gnf::to_string(e.kind()) << "): " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return InternalFailure;
    }
}
