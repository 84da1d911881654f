#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lppm/metrics.hpp"
#include "lppm/mobility.hpp"
#include "lppm/types.hpp"

namespace lppm::prior {

// Pr(o_t | r_t): the observation channel induced by the mechanism in use at
// one time step.
struct EmissionTable {
    int t = 1;  // time index the table belongs to
    int M = 0;
    std::vector<double> probs;  // row-major M x M, row = true location

    double at(int r, int o) const { return probs[static_cast<size_t>(r) * M + o]; }
    double& at(int r, int o) { return probs[static_cast<size_t>(r) * M + o]; }
    void validate() const;
};

EmissionTable identity_emission(int M);

// Conditional prior over target assignments, one distribution per observed
// history value with positive marginal probability.
struct PriorTable {
    struct Entry {
        Assignment history;                 // o_pre value (empty when none)
        std::vector<Assignment> targets;    // positive-mass a_trg values, sorted
        std::vector<double> probs;          // same length, sums to 1
        double marginal = 0.0;              // Pr(o_pre = history)
    };
    std::vector<Entry> entries;  // sorted by history

    const Entry* find(const Assignment& history) const;
};

struct PriorOptions {
    // History values whose marginal falls below this are dropped; most
    // theoretically possible histories are nonsensical sequences.
    double drop_threshold = 1e-12;
};

// Target = current location only, no history: psi(r_t) = pi.
PriorTable prior_sporadic(const mobility::MobilityProfile& profile);

// Target = (r_t, r_{t+1}), no history: psi(r_t, r_{t+1}) = pi[r_t] P[r_t][r_{t+1}].
PriorTable prior_present_future(const mobility::MobilityProfile& profile);

// Target = (r_{t-1}, r_t) given history o_{t-1}:
//   psi(r_{t-1}, r_t | o) = Bayes(r_{t-1} | o; emission, pi) * P[r_{t-1}][r_t]
// with marginal Pr(o) = sum_r emission(o|r) pi[r].
PriorTable prior_past_present(const mobility::MobilityProfile& profile,
                              const EmissionTable& emission,
                              const PriorOptions& opts = {});

// Base case of the emission recursion: at t = 1 there is no history, so the
// channel is the optimal sporadic mechanism for the scenario's distances and
// budget. The solver is supplied by the game module to keep this module
// below it in the dependency order.
using SporadicSolver =
    std::function<EmissionTable(const mobility::MobilityProfile&, const metrics::Scenario&)>;

EmissionTable emission_t1(const mobility::MobilityProfile& profile,
                          const metrics::Scenario& scenario, const SporadicSolver& solver);

// Probability that the step-t mechanism reports o_t given the protected pair
// (r_{t-1}, r_t) and the previous report o_{t-1}. Mechanisms that do not
// condition on some of these arguments simply ignore them.
using StepPolicyFn = std::function<double(int o_t, int r_t, int r_prev, int o_prev)>;

// One step of the recursion:
//   Pr(o_t | r_t) = sum_{o', r'} policy(o_t | r_t, r', o') Pr(o' | r') Pr(r' | r_t)
// where Pr(r' | r_t) = pi[r'] P[r'][r_t] / pi[r_t] is the stationary time
// reversal. Rows for locations with pi = 0 are left uniform (unreachable).
EmissionTable emission_recursive(int t, const EmissionTable& prev, const StepPolicyFn& policy,
                                 const mobility::MobilityProfile& profile);

// Collapses target assignments onto a subset of coordinate positions (by
// index into the target time vector), summing probabilities. Used to turn the
// pair prior psi(r_{t-1}, r_t | o) into the single-location psi(r_t | o).
PriorTable marginalize_targets(const PriorTable& table, const std::vector<int>& keep_positions);

// Audit export: {entries: [{o_pre, targets, probs, marginal}]}.
std::string prior_to_json(const PriorTable& table);

}  // namespace lppm::prior
