#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lppm/game.hpp"

namespace lppm::bench {

// ---- synthetic users (no external data needed) ----

mobility::MobilityProfile synth_cycle(int M);            // deterministic i -> i+1 mod M
mobility::MobilityProfile synth_uniform(int M);          // every row uniform
mobility::MobilityProfile synth_iid(int M);              // identical non-uniform rows
mobility::MobilityProfile synth_random_irreducible(int M, std::uint64_t seed);

// ---- 5x5 toy correlation walkthrough ----
//
// A user on a 5x5 grid moves by at most one cell per step and reports a
// pseudolocation drawn uniformly from the 3x3 square around her position
// (clipped at the borders). Exact support arithmetic, integer-exact results.
struct ToyDemoReport {
    // Observing (2,2) then (4,4): the feasible current positions form a 2x2
    // square, so a uniform guess is correct with probability 1/4.
    std::vector<std::pair<int, int>> posterior_support;
    long correct_num = 0, correct_den = 0;  // 1/4
    // What the second observation alone would suggest: 1/9.
    long naive_num = 0, naive_den = 0;
    // Observing (1,1) then (4,4) pins the trajectory (2,2)->(3,3) uniquely.
    std::pair<int, int> compromised_prev, compromised_cur;
    long unique_num = 0, unique_den = 0;  // 1/1
    double correct_guess_probability() const {
        return static_cast<double>(correct_num) / static_cast<double>(correct_den);
    }
    double naive_probability() const {
        return static_cast<double>(naive_num) / static_cast<double>(naive_den);
    }
    double compromised_probability() const {
        return static_cast<double>(unique_num) / static_cast<double>(unique_den);
    }
};
ToyDemoReport toy_correlation_demo();
std::string toy_demo_to_text(const ToyDemoReport& report);

// ---- sporadic vs correlation-aware attack ----

struct AttackComparison {
    std::string user_id;
    struct Point {
        double dq_max = 0.0;
        double privacy_sporadic_attack = 0.0;
        double privacy_correlation_attack = 0.0;
    };
    std::vector<Point> points;
};

// Synthesizes the optimal sporadic mechanism per budget and evaluates it
// against the attack using the unconditional prior pi and against the attack
// using the conditional prior psi(r_t | o_{t-1}) induced by running the same
// mechanism one step earlier.
AttackComparison attack_comparison(const mobility::MobilityProfile& profile,
                                   const std::string& user_id,
                                   const std::vector<double>& dq_grid, int threads = 0);

// ---- privacy/quality tradeoff sweeps ----

struct SweepResult {
    std::string user_id;
    struct Point {
        double dq_max = 0.0;
        double privacy = 0.0;
        double q_loss = 0.0;
        std::string status;  // "optimal", "infeasible", "anomaly"
    };
    std::vector<Point> points;      // sorted by dq_max
    int plateau_index = -1;         // first point within 1e-6 of the final privacy
    bool monotone = true;           // privacy non-decreasing within 1e-7
};

SweepResult tradeoff_sweep(const mobility::MobilityProfile& profile, const std::string& user_id,
                           const metrics::Scenario& scenario, const std::vector<double>& dq_grid,
                           int horizon = 2, int threads = 0);

// Evenly spaced budgets over [0, max quality loss].
std::vector<double> default_dq_grid(const metrics::Scenario& scenario, int M, int points = 11);

// ---- artifact export (deterministic bytes) ----

std::string sweep_to_csv(const std::vector<SweepResult>& results);
std::string comparison_to_csv(const std::vector<AttackComparison>& results);
std::string sweep_to_svg(const std::vector<SweepResult>& results);
std::string comparison_to_svg(const std::vector<AttackComparison>& results);

void write_file(const std::string& path, const std::string& bytes);  // throws IoError

}  // namespace lppm::bench
