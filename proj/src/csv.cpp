#include "ammsim/csv.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>

namespace ammsim {

const char* const kCsvHeader =
    "t,p_mkt,p_pool,pool_x,pool_y,trader_x,trader_y,arb_x,arb_y,"
    "lp_value,trader_value,arb_value,fees_cum,slippage_cum,declined_cum";

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string to_csv(const std::vector<SimRecord>& records) {
    std::string out(kCsvHeader);
    out += '\n';
    char buf[512];
    for (const SimRecord& r : records) {
        std::snprintf(buf, sizeof buf,
                      "%" PRId64 ",%.15g,%.15g,%.15g,%.15g,%.15g,%.15g,%.15g,%.15g,"
                      "%.15g,%.15g,%.15g,%.15g,%.15g,%" PRId64 "\n",
                      r.t, r.p_mkt, r.p_pool, r.pool_x, r.pool_y, r.trader_x, r.trader_y, r.arb_x,
                      r.arb_y, r.lp_value, r.trader_value, r.arb_value, r.fees_cum, r.slippage_cum,
                      r.declined_cum);
        out += buf;
    }
    return out;
}

void write_csv(const std::string& path, const std::vector<SimRecord>& records) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file for writing: " + path);
    out << to_csv(records);
}

std::string summary_text(const RunSummary& s) {
    std::string out;
    const auto line = [&out](const char* key, const std::string& value) {
        out += key;
        out += ": ";
        out += value;
        out += '\n';
    };
    line("amm", to_string(s.amm_kind));
    line("end_price", format_number(s.end_price));
    line("lp_final_value", format_number(s.lp_final_value));
    line("trader_final_value", format_number(s.trader_final_value));
    line("arb_final_value", format_number(s.arb_final_value));
    line("fees_total", format_number(s.fees_total));
    line("slippage_total", format_number(s.slippage_total));
    line("declined_total", std::to_string(s.declined_total));
    line("arb_trades", std::to_string(s.arb_trades));
    line("min_pool_x_fraction", format_number(s.min_pool_x_fraction));
    line("min_pool_y_fraction", format_number(s.min_pool_y_fraction));
    return out;
}

} // namespace ammsim
