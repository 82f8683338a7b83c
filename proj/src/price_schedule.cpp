#include "ammsim/price_schedule.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

namespace ammsim {

namespace {
void require_floor(double p_min) {
    if (!std::isfinite(p_min) || p_min <= 0.0) {
        throw ConfigError("price schedule: p_min must be finite and > 0");
    }
}

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw ConfigError(std::string("price schedule: ") + what + " must be finite");
}
} // namespace

const char* to_string(ScheduleKind kind) {
    switch (kind) {
    case ScheduleKind::Constant: return "constant";
    case ScheduleKind::LinearRamp: return "linear";
    case ScheduleKind::Series: return "series";
    }
    return "unknown";
}

PriceSchedule PriceSchedule::constant(double value, double p_min) {
    require_floor(p_min);
    require_finite(value, "constant value");
    PriceSchedule s;
    s.kind = ScheduleKind::Constant;
    s.value = value;
    s.p_min = p_min;
    return s;
}

PriceSchedule PriceSchedule::linear_ramp(double p_start, double p_end, double p_min) {
    require_floor(p_min);
    require_finite(p_start, "ramp start");
    require_finite(p_end, "ramp end");
    PriceSchedule s;
    s.kind = ScheduleKind::LinearRamp;
    s.p_start = p_start;
    s.p_end = p_end;
    s.p_min = p_min;
    return s;
}

PriceSchedule PriceSchedule::series(std::vector<double> points, double p_min) {
    require_floor(p_min);
    if (points.empty()) throw ConfigError("price schedule: series is empty");
    for (double p : points) require_finite(p, "series point");
    PriceSchedule s;
    s.kind = ScheduleKind::Series;
    s.points = std::move(points);
    s.p_min = p_min;
    return s;
}

PriceSchedule PriceSchedule::from_spec(std::string_view spec, double p_min) {
    const auto colon = spec.find(':');
    const std::string head(spec.substr(0, colon));
    const std::string rest(colon == std::string_view::npos ? "" : spec.substr(colon + 1));
    try {
        if (head == "constant") {
            return constant(std::stod(rest), p_min);
        }
        if (head == "linear") {
            const auto sep = rest.find(':');
            if (sep == std::string::npos) throw ConfigError("linear schedule needs two prices");
            return linear_ramp(std::stod(rest.substr(0, sep)), std::stod(rest.substr(sep + 1)), p_min);
        }
        if (head == "file") {
            return series(load_price_series(rest), p_min);
        }
    } catch (const std::invalid_argument&) {
        throw ConfigError("price schedule: bad number in \"" + std::string(spec) + "\"");
    } catch (const std::out_of_range&) {
        throw ConfigError("price schedule: number out of range in \"" + std::string(spec) + "\"");
    }
    throw ConfigError("price schedule: expected constant:<p>, linear:<p0>:<p1> or file:<path>, got \"" +
                      std::string(spec) + "\"");
}

double price_at(const PriceSchedule& schedule, std::int64_t t, std::int64_t total_steps) {
    if (t < 0 || t >= total_steps) {
        throw IndexOutOfRange("price_at: step index outside [0, total_steps)");
    }
    double raw = 0.0;
    switch (schedule.kind) {
    case ScheduleKind::Constant:
        raw = schedule.value;
        break;
    case ScheduleKind::LinearRamp:
        raw = total_steps == 1
                  ? schedule.p_start
                  : schedule.p_start + (schedule.p_end - schedule.p_start) *
                                           (static_cast<double>(t) / static_cast<double>(total_steps - 1));
        break;
    case ScheduleKind::Series:
        if (static_cast<std::size_t>(t) >= schedule.points.size()) {
            throw IndexOutOfRange("price_at: series shorter than requested step");
        }
        raw = schedule.points[static_cast<std::size_t>(t)];
        break;
    }
    return std::max(schedule.p_min, raw);
}

std::vector<double> load_price_series(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open price series file: " + path);
    std::vector<double> points;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        double v = 0.0;
        if (ls >> v) points.push_back(v);
        // anything after the number on the same line is ignored
    }
    if (points.empty()) throw ConfigError("price series file has no prices: " + path);
    return points;
}

} // namespace ammsim
