#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lppm/geo.hpp"
#include "lppm/types.hpp"

namespace lppm::metrics {

// Locations pinned to a block of relative time offsets, e.g. locs=(5,7) at
// times=(-1,0) for the previous and current step.
struct EventVector {
    Assignment locs;
    std::vector<int> times;  // strictly increasing

    void validate() const;
};

enum class DistanceKind {
    hamming_vector,              // 1 iff the vectors differ anywhere
    hamming_per_coordinate_sum,  // number of differing coordinates
    euclidean_sum,               // sum of cell-center distances, in cell units
    weighted_table,              // user-supplied weights
};

DistanceKind distance_kind_from_string(const std::string& s);
std::string to_string(DistanceKind k);

// Distance between an estimated and a true event vector (privacy gain), or
// between the wanted and the reported events (quality loss).
struct DistanceFn {
    DistanceKind kind = DistanceKind::hamming_vector;
    std::optional<geo::GridSpec> grid;  // required by euclidean kinds

    // weighted_table: either explicit pairs keyed by (estimate, truth)
    // serialized dash-joined, or a per-location weight applied to each
    // differing coordinate of the true vector.
    std::map<std::pair<std::string, std::string>, double> pair_weights;
    std::vector<double> per_location_weights;

    void validate() const;
};

// Privacy gain of estimating `estimate` when the truth is `truth`. Both must
// share the same time offsets.
double dp_eval(const DistanceFn& dp, const EventVector& estimate, const EventVector& truth);

// Quality loss of reporting (o_post, o_pre) when the service wanted q_trg.
// q_trg's times must all be covered by the reported vectors.
double dq_eval(const DistanceFn& dq, const EventVector& q_trg, const EventVector& o_post,
               const EventVector& o_pre);

// Which time offsets are protected (target), already exposed (history),
// reported now (output), and relevant for service quality; plus the two
// distances and the quality budget.
struct Scenario {
    std::string name;
    std::vector<int> target_times;            // a_trg
    std::vector<int> history_times;           // o_pre
    std::vector<int> output_times;            // o_post
    std::optional<std::vector<int>> quality_times;  // q_trg; defaults to
                                                    // target times that get reported
    DistanceFn privacy_distance;  // dp
    DistanceFn quality_distance;  // dq
    double quality_budget = 0.0;  // dq_max

    void validate() const;

    // Effective q_trg times: the explicit override, or target times
    // restricted to reported (history + output) times.
    std::vector<int> effective_quality_times() const;

    // q_trg derived from a target assignment by coordinate restriction.
    EventVector quality_target(const Assignment& target) const;

    EventVector target_event(const Assignment& a) const;
    EventVector history_event(const Assignment& a) const;
    EventVector output_event(const Assignment& a) const;
};

// Built-in scenarios.
Scenario make_sporadic(DistanceFn dp, DistanceFn dq, double dq_max);
Scenario make_past_present(DistanceFn dp, DistanceFn dq, double dq_max);
Scenario make_present_future(DistanceFn dp, DistanceFn dq, double dq_max);

// JSON round-trip. Keys: name, a_trg_times, o_pre_times, o_post_times,
// q_trg_times, dp, dq, dq_max.
std::string scenario_to_json(const Scenario& s);
Scenario scenario_from_json_text(const std::string& text);
Scenario load_scenario(const std::string& path);

// Largest value the quality distance can take on single assignments drawn
// from an M-location alphabet; used to size quality-budget sweeps.
double max_quality_loss(const Scenario& s, int M);

}  // namespace lppm::metrics
