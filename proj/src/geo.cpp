#include "lppm/geo.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "lppm/errors.hpp"

namespace lppm::geo {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_double_field(const std::string& field, int line_no, const char* what) {
    const std::string t = trim(field);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(v))
        throw ValidationError("line " + std::to_string(line_no) + ": bad " + what + " '" +
                              field + "'");
    return v;
}

}  // namespace

void GridSpec::validate() const {
    if (!(lat_min < lat_max)) throw ValidationError("grid: lat_min must be < lat_max");
    if (!(lon_min < lon_max)) throw ValidationError("grid: lon_min must be < lon_max");
    if (rows <= 0 || cols <= 0) throw ValidationError("grid: rows and cols must be positive");
    if (!(time_bin_seconds > 0.0)) throw ValidationError("grid: time_bin_seconds must be positive");
}

std::vector<RawTrace> parse_traces(std::istream& in) {
    std::map<std::string, std::vector<TracePoint>> by_user;
    std::string line;
    int line_no = 0;
    bool first_content_line = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;

        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (!line.empty() && line.back() == ',') fields.push_back("");

        if (first_content_line) {
            first_content_line = false;
            if (fields.size() == 4 && trim(fields[0]) == "user_id") continue;  // header
        }
        if (fields.size() != 4)
            throw ValidationError("line " + std::to_string(line_no) +
                                  ": expected 4 comma-separated fields, got " +
                                  std::to_string(fields.size()));

        const std::string user = trim(fields[0]);
        if (user.empty())
            throw ValidationError("line " + std::to_string(line_no) + ": empty user_id");
        TracePoint p;
        p.timestamp = parse_double_field(fields[1], line_no, "timestamp");
        p.lat = parse_double_field(fields[2], line_no, "latitude");
        p.lon = parse_double_field(fields[3], line_no, "longitude");
        if (p.lat < -90.0 || p.lat > 90.0)
            throw ValidationError("line " + std::to_string(line_no) + ": latitude " +
                                  std::to_string(p.lat) + " out of [-90, 90]");
        if (p.lon < -180.0 || p.lon > 180.0)
            throw ValidationError("line " + std::to_string(line_no) + ": longitude " +
                                  std::to_string(p.lon) + " out of [-180, 180]");
        by_user[user].push_back(p);
    }

    std::vector<RawTrace> traces;
    traces.reserve(by_user.size());
    for (auto& [user, points] : by_user) {
        std::stable_sort(points.begin(), points.end(),
                         [](const TracePoint& a, const TracePoint& b) {
                             return a.timestamp < b.timestamp;
                         });
        for (size_t i = 1; i < points.size(); ++i) {
            if (points[i].timestamp == points[i - 1].timestamp)
                throw ValidationError("duplicate timestamp " +
                                      std::to_string(points[i].timestamp) + " for user '" +
                                      user + "'");
        }
        traces.push_back(RawTrace{user, std::move(points)});
    }
    return traces;
}

std::vector<RawTrace> parse_traces_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open trace file '" + path + "'");
    return parse_traces(in);
}

DiscreteTrace discretize(const RawTrace& trace, const GridSpec& grid, DiscretizeStats* stats) {
    grid.validate();
    const double cell_h = (grid.lat_max - grid.lat_min) / grid.rows;
    const double cell_w = (grid.lon_max - grid.lon_min) / grid.cols;

    // Keep in-bounds points only; the boundary at lat_max/lon_max folds into
    // the last bin.
    std::vector<TracePoint> kept;
    int dropped = 0;
    for (const auto& p : trace.points) {
        if (p.lat < grid.lat_min || p.lat > grid.lat_max || p.lon < grid.lon_min ||
            p.lon > grid.lon_max) {
            ++dropped;
            continue;
        }
        kept.push_back(p);
    }
    if (stats) stats->dropped_out_of_bounds = dropped;
    if (kept.empty())
        throw ValidationError("trace '" + trace.user_id + "': no points inside the grid");

    const double t0 = kept.front().timestamp;
    DiscreteTrace out;
    out.user_id = trace.user_id;
    int collapsed = 0;
    for (const auto& p : kept) {
        long ti = static_cast<long>(std::floor((p.timestamp - t0) / grid.time_bin_seconds));
        int row = static_cast<int>(std::floor((p.lat - grid.lat_min) / cell_h));
        int col = static_cast<int>(std::floor((p.lon - grid.lon_min) / cell_w));
        if (row >= grid.rows) row = grid.rows - 1;
        if (col >= grid.cols) col = grid.cols - 1;
        const int cell = row * grid.cols + col;
        if (!out.cells.empty() && out.cells.back().time_index == ti) {
            out.cells.back().location_id = cell;  // last fix in the bin wins
            ++collapsed;
        } else {
            out.cells.push_back(DiscreteCell{ti, cell});
        }
    }
    if (stats) stats->collapsed_same_bin = collapsed;
    return out;
}

std::vector<int> support_set(const std::vector<DiscreteTrace>& traces) {
    std::set<int> seen;
    for (const auto& t : traces)
        for (const auto& c : t.cells) seen.insert(c.location_id);
    if (seen.empty()) throw ValidationError("support_set: no visited locations");
    return std::vector<int>(seen.begin(), seen.end());
}

std::vector<DiscreteTrace> reindex_to_support(const std::vector<DiscreteTrace>& traces,
                                              const std::vector<int>& support) {
    std::map<int, int> rank;
    for (size_t i = 0; i < support.size(); ++i) rank[support[i]] = static_cast<int>(i);
    std::vector<DiscreteTrace> out = traces;
    for (auto& t : out) {
        for (auto& c : t.cells) {
            auto it = rank.find(c.location_id);
            if (it == rank.end())
                throw ValidationError("reindex: location " + std::to_string(c.location_id) +
                                      " not in support");
            c.location_id = it->second;
        }
    }
    return out;
}

GridSpec grid_spec_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("grid config: ") + e.what());
    }
    GridSpec g;
    try {
        g.lat_min = j.at("lat_min").get<double>();
        g.lat_max = j.at("lat_max").get<double>();
        g.lon_min = j.at("lon_min").get<double>();
        g.lon_max = j.at("lon_max").get<double>();
        g.rows = j.at("rows").get<int>();
        g.cols = j.at("cols").get<int>();
        g.time_bin_seconds = j.at("time_bin_seconds").get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("grid config: ") + e.what());
    }
    g.validate();
    return g;
}

GridSpec load_grid_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open grid config '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return grid_spec_from_json_text(ss.str());
}

}  // namespace lppm::geo
