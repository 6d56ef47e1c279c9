// platform_constraints.hpp - experimental bounds on |beta| from coherence times
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace lsd {

// Order-of-magnitude band [10^lo, 10^hi] in nearest-decade terms.
struct DecadeBand {
    int lo{0};
    int hi{0};

    [[nodiscard]] bool contains(int decade) const { return decade >= lo && decade <= hi; }
};

// Nearest decade: round(log10(value)).
int decade_of(double value);

struct PlatformSpec {
    std::string name;
    double energy{0};   // typical transition, s^-1
    double delta_e{0};  // level splitting, s^-1
    double t2{0};       // s
    double e_star{0};   // s^-1
    std::optional<double> log_factor_override; // replaces |ln(E/E*) + 1|
    std::optional<DecadeBand> expected_band;   // reference band for comparison
};

void validate(const PlatformSpec& spec);

struct GDifference {
    double value{0};
    double log_factor{0};
    bool degenerate{false}; // log factor vanished
};

// |dE| |ln(E/E*) + 1|, or |dE| * override.
GDifference g_difference_approx(const PlatformSpec& spec);

// |G(E + dE/2) - G(E - dE/2)| with the exact G.
double g_difference_exact(const PlatformSpec& spec);

struct BoundResult {
    std::string name;
    double g_difference{0};
    double log_factor{0};
    double beta_max{0};
    double beta_max_exact{0}; // from g_difference_exact and the natural log factor
    int decade{0};
    std::optional<bool> band_match;
    PlatformSpec spec;
};

// 1 / (T2 |dG|)
BoundResult beta_bound(const PlatformSpec& spec);

// delta_omega / |G(E1) - G(E0)| with the exact G.
double ramsey_bound(double delta_omega_precision, double e0, double e1, double e_star);

struct PlatformError {
    std::string name;
    std::string message;
};

struct TableReport {
    std::vector<BoundResult> results;
    std::vector<PlatformError> errors;
};

TableReport table_report(const std::vector<PlatformSpec>& specs);

// Hz -> angular frequency s^-1.
double hz_to_angular(double hz);

// Representative platform rows: superconducting qubits, trapped ions, NV centers, cold atoms.
std::vector<PlatformSpec> default_platforms();

} // namespace lsd
