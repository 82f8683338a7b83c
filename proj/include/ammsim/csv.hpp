#pragma once

#include <string>
#include <vector>

#include "ammsim/engine.hpp"

namespace ammsim {

// Fixed time-series schema, one row per step, 15 significant digits:
//   t,p_mkt,p_pool,pool_x,pool_y,trader_x,trader_y,arb_x,arb_y,
//   lp_value,trader_value,arb_value,fees_cum,slippage_cum,declined_cum
extern const char* const kCsvHeader;

std::string format_number(double v);
std::string to_csv(const std::vector<SimRecord>& records);
void write_csv(const std::string& path, const std::vector<SimRecord>& records);

// Human-readable run summary block (also used for compare's summary.txt).
std::string summary_text(const RunSummary& summary);

} // namespace ammsim
