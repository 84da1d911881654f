#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lppm/geo.hpp"

namespace lppm::mobility {

// First-order Markov mobility model over M locations: row-stochastic
// transition matrix P and stationary distribution pi.
struct MobilityProfile {
    int M = 0;
    std::vector<double> P;    // row-major M x M
    std::vector<double> pi;   // length M
    std::vector<std::int64_t> visit_counts;
    // Set when the chain was reducible and pi fell back to empirical visit
    // frequencies.
    bool stationary_is_empirical = false;

    double p(int from, int to) const { return P[static_cast<size_t>(from) * M + to]; }
    void validate() const;  // throws ValidationError on broken invariants
};

enum class SmoothingMode {
    full,     // add `smoothing` to every cell of a row
    support,  // add `smoothing` only to observed transitions
};

// Counts transitions between consecutive time indices (gaps contribute
// nothing) and normalizes per row. Rows without any observation become
// uniform. Throws ValidationError when the chain is undefined (M == 0, or no
// transitions and smoothing cannot fill any in).
MobilityProfile estimate_markov(const std::vector<geo::DiscreteTrace>& traces, int M,
                                double smoothing = 0.0,
                                SmoothingMode mode = SmoothingMode::full);

// Solves pi P = pi, sum(pi) = 1 by a direct least-squares solve of (P^T - I)
// stacked with the normalization row. Exact on periodic chains. Throws
// NumericalError when the stationary distribution is not unique (reducible
// chains).
std::vector<double> stationary(const std::vector<double>& P, int M);

// JSON round-trip: {M, P (row-major), pi, visit_counts}.
std::string profile_to_json(const MobilityProfile& profile);
MobilityProfile profile_from_json_text(const std::string& text);
MobilityProfile load_profile(const std::string& path);
void save_profile(const MobilityProfile& profile, const std::string& path);

}  // namespace lppm::mobility
