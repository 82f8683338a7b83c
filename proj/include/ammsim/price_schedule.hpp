#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ammsim/errors.hpp"

namespace ammsim {

enum class ScheduleKind { Constant, LinearRamp, Series };

// Deterministic market-price oracle over discrete steps. Every emitted
// price is floored at p_min > 0 so downstream retuning stays well-defined.
struct PriceSchedule {
    ScheduleKind kind = ScheduleKind::Constant;
    double value = 1.0;               // Constant
    double p_start = 0.0;             // LinearRamp
    double p_end = 0.0;               // LinearRamp
    std::vector<double> points;       // Series, indexed by step
    double p_min = 0.01;

    static PriceSchedule constant(double value, double p_min = 0.01);
    static PriceSchedule linear_ramp(double p_start, double p_end, double p_min = 0.01);
    static PriceSchedule series(std::vector<double> points, double p_min = 0.01);

    // "constant:<p>", "linear:<p0>:<p1>", "file:<path>".
    static PriceSchedule from_spec(std::string_view spec, double p_min = 0.01);
};

const char* to_string(ScheduleKind kind);

// Price at step t of a total_steps run. The linear ramp interpolates over
// t / (total_steps - 1) so the final step lands exactly on p_end.
double price_at(const PriceSchedule& schedule, std::int64_t t, std::int64_t total_steps);

// One price per line; blank lines and '#' comments ignored.
std::vector<double> load_price_series(const std::string& path);

} // namespace ammsim
