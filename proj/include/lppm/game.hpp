#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lppm/lp.hpp"
#include "lppm/metrics.hpp"
#include "lppm/prior.hpp"

namespace lppm::game {

// The defender's codebook f(o_post | a_trg, o_pre): one row-stochastic block
// per conditioned history value.
struct ObfuscationPolicy {
    struct Block {
        Assignment history;                // o_pre
        std::vector<Assignment> targets;   // a_trg domain (positive prior mass)
        std::vector<Assignment> outputs;   // o_post domain
        std::vector<double> probs;         // targets x outputs, row-major
        double at(int target_idx, int output_idx) const {
            return probs[static_cast<size_t>(target_idx) * outputs.size() + output_idx];
        }
    };
    std::vector<Block> blocks;  // sorted by history

    const Block* find(const Assignment& history) const;
    // 0 when the (history, target) pair is unknown; such pairs always carry
    // zero probability mass upstream.
    double prob(const Assignment& target, const Assignment& history,
                const Assignment& output) const;
};

// The adversary's estimator h(a_hat | o_pre, o_post): a distribution over
// estimates per (history, output) pair. Best responses are point masses.
struct AttackPolicy {
    struct Block {
        Assignment history;
        std::vector<Assignment> outputs;
        std::vector<Assignment> estimates;
        std::vector<double> probs;  // outputs x estimates, row-major
        double at(int output_idx, int estimate_idx) const {
            return probs[static_cast<size_t>(output_idx) * estimates.size() + estimate_idx];
        }
    };
    std::vector<Block> blocks;

    const Block* find(const Assignment& history) const;
};

struct PerHistoryResult {
    Assignment history;
    double marginal = 0.0;
    lp::Status lp_status = lp::Status::optimal;
    double lp_objective = 0.0;
    double privacy = 0.0;
    double q_loss = 0.0;
    int lp_iterations = 0;
};

struct GameSolution {
    ObfuscationPolicy policy;   // f*
    AttackPolicy attack;        // h* (best response to f*)
    double privacy = 0.0;       // averaged over histories by their marginals
    double q_loss = 0.0;
    bool all_optimal = true;
    std::vector<PerHistoryResult> per_history;
};

// LP instance for one history value, together with its variable layout.
struct BuiltLp {
    lp::LinearProgram lp;
    std::vector<Assignment> targets;
    std::vector<Assignment> outputs;
    std::vector<Assignment> estimates;
    int x_index(int output_idx) const { return output_idx; }
    int f_index(int target_idx, int output_idx) const {
        return static_cast<int>(outputs.size()) +
               target_idx * static_cast<int>(outputs.size()) + output_idx;
    }
};

// Builds the per-history linear program: maximize sum_o x_o subject to
//   x_o <= sum_a psi(a) dp(a_hat, a) f(o | a)      for every (a_hat, o)
//   sum_o f(o | a) = 1                             for every a
//   sum_{a,o} psi(a) dq(q(a), o, history) f(o | a) <= dq_max
// Targets and estimates range over positive-prior assignments; outputs over
// transition-supported sequences (all single locations for length-1 outputs).
BuiltLp build_lp(const prior::PriorTable::Entry& entry, const metrics::Scenario& scenario,
                 const mobility::MobilityProfile& profile);

struct SynthesisOptions {
    int threads = 0;             // 0 = hardware concurrency
    double clamp_threshold = 1e-10;  // primal noise below this is zeroed
};

// Solves one LP per history value and assembles the optimal mechanism, the
// adversary's best response and the achieved privacy / quality loss.
GameSolution synthesize(const mobility::MobilityProfile& profile,
                        const metrics::Scenario& scenario, const prior::PriorTable& prior_table,
                        const SynthesisOptions& opts = {});

// The adversary's exact best response: for each (history, output) pair, put
// all mass on the estimate minimizing the posterior-expected privacy gain,
// breaking ties toward the lexicographically smallest estimate.
AttackPolicy best_response(const ObfuscationPolicy& policy, const prior::PriorTable& prior_table,
                           const metrics::DistanceFn& dp);

// Expected privacy gain and quality loss of (policy, attack) under the prior,
// for one history value: the two defining expectations, summed directly.
struct Evaluation {
    double privacy = 0.0;
    double q_loss = 0.0;
};
Evaluation evaluate(const ObfuscationPolicy& policy, const AttackPolicy& attack,
                    const prior::PriorTable& prior_table, const metrics::Scenario& scenario,
                    const Assignment& history);

// Recovers a (possibly mixed) attack from the duals of the privacy
// constraints; retained as a cross-check of best_response.
AttackPolicy attack_from_duals(const BuiltLp& built, const lp::LpSolution& sol,
                               const Assignment& history);

// Mechanical optimality check: the LP objective must match the evaluation of
// (f*, best_response(f*)), and no sampled feasible alternative policy may
// beat it.
struct SaddleReport {
    bool ok = true;
    double max_objective_mismatch = 0.0;
    double max_excess = 0.0;  // best improvement any sampled policy achieved
    int violations = 0;
    std::string detail;
};
SaddleReport saddle_check(const GameSolution& solution, const prior::PriorTable& prior_table,
                          const metrics::Scenario& scenario,
                          const mobility::MobilityProfile& profile, int samples,
                          std::uint64_t seed = 1);

// ---- sequential pipeline over time ----

struct HorizonStep {
    int t = 1;
    prior::PriorTable prior_table;
    GameSolution solution;
    prior::EmissionTable emission;
};

struct HorizonResult {
    std::vector<HorizonStep> steps;
    bool stationary_mode = false;
    bool converged = true;  // stationary mode only
    double final_delta = 0.0;
    const HorizonStep& final_step() const { return steps.back(); }
};

// Finite-horizon mode: computes f_1 (sporadic), then for t = 2..T rebuilds
// the conditional prior from the previous step's emission and re-solves.
// Scenarios without history collapse to a single step.
HorizonResult synthesize_horizon(const mobility::MobilityProfile& profile,
                                 const metrics::Scenario& scenario, int horizon,
                                 const SynthesisOptions& opts = {});

// Stationary mode: iterates emission -> synthesize -> emission until the
// emission change falls below `tol` in max norm, or max_iter rounds.
// Non-convergence is reported in the result, never hidden.
HorizonResult synthesize_stationary(const mobility::MobilityProfile& profile,
                                    const metrics::Scenario& scenario, int max_iter = 50,
                                    double tol = 1e-6, const SynthesisOptions& opts = {});

// Policy as an emission table Pr(o_t | r_t); valid for single-location
// targets without history (the sporadic shape).
prior::EmissionTable policy_as_emission(const ObfuscationPolicy& policy, int M);

// Adapter for the emission recursion, accepting pair or single targets with
// or without history conditioning.
prior::StepPolicyFn step_policy_fn(const ObfuscationPolicy& policy,
                                   const metrics::Scenario& scenario);

// ---- serialization ----

// CSV columns a_trg,o_pre,o_post,probability; assignments dash-joined;
// zero-probability entries omitted; rows sorted.
std::string policy_to_csv(const ObfuscationPolicy& policy);
ObfuscationPolicy policy_from_csv_text(const std::string& text);
ObfuscationPolicy load_policy_csv(const std::string& path);

// Diagnostics JSON including the per-history breakdown.
std::string solution_to_json(const GameSolution& solution, const metrics::Scenario& scenario);

}  // namespace lppm::game
