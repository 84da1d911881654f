#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lppm::geo {

struct TracePoint {
    double timestamp = 0.0;  // seconds since epoch
    double lat = 0.0;
    double lon = 0.0;
};

struct RawTrace {
    std::string user_id;
    std::vector<TracePoint> points;  // sorted by timestamp, strictly increasing
};

// Rectangular discretization of space and time. Spatial bins are half-open
// [edge, next_edge); the max-lat/max-lon boundary falls into the last bin.
struct GridSpec {
    double lat_min = 0.0, lat_max = 0.0;
    double lon_min = 0.0, lon_max = 0.0;
    int rows = 0, cols = 0;
    double time_bin_seconds = 0.0;

    int cell_count() const { return rows * cols; }
    void validate() const;  // throws ValidationError
};

struct DiscreteCell {
    long time_index = 0;
    int location_id = 0;  // row-major row*cols + col
};

struct DiscreteTrace {
    std::string user_id;
    std::vector<DiscreteCell> cells;  // strictly increasing time_index
};

// Parses trace CSV (user_id,timestamp,lat,lon; optional header; LF or CRLF).
// Traces come back grouped per user in user_id order, points sorted by
// timestamp. Duplicate (user, timestamp) records are rejected.
std::vector<RawTrace> parse_traces(std::istream& in);
std::vector<RawTrace> parse_traces_file(const std::string& path);

struct DiscretizeStats {
    int dropped_out_of_bounds = 0;
    int collapsed_same_bin = 0;
};

// Bins a trace onto the grid. Out-of-bounds points are dropped (counted in
// stats); several fixes in the same time bin keep the last one. Throws
// ValidationError if no point lands inside the grid.
DiscreteTrace discretize(const RawTrace& trace, const GridSpec& grid,
                         DiscretizeStats* stats = nullptr);

// Sorted, deduplicated list of visited location ids across all traces.
std::vector<int> support_set(const std::vector<DiscreteTrace>& traces);

// Renames location ids to their rank in the support, so downstream modules
// work on a compact 0..M-1 alphabet.
std::vector<DiscreteTrace> reindex_to_support(const std::vector<DiscreteTrace>& traces,
                                              const std::vector<int>& support);

GridSpec load_grid_spec(const std::string& path);
GridSpec grid_spec_from_json_text(const std::string& text);

}  // namespace lppm::geo
