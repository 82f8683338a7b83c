#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ammsim/agents.hpp"
#include "ammsim/curve.hpp"
#include "ammsim/price_schedule.hpp"

namespace ammsim {

struct SimConfig {
    CurveKind amm_kind = CurveKind::StaticProduct;
    std::int64_t steps = 1000;
    std::uint64_t seed = 42;
    double fee_rate = 0.02; // fraction of |delta_x| * pre-trade pool price, paid in Y
    PoolState initial_pool{1000.0, 1000.0};
    Wallet initial_trader{1000.0, 1000.0};
    Wallet initial_arbitrageur{1000.0, 1000.0};
    PriceSchedule schedule = PriceSchedule::linear_ramp(0.0, 10.0);
    std::vector<double> trades; // explicit replay; empty -> generated from seed
};

struct Cumulative {
    double fees_y = 0.0;
    double trader_slippage_y = 0.0;
    std::int64_t declined = 0;
    std::int64_t arb_trades = 0;
    double fee_base = 0.0; // sum of |delta_x| * pre-trade pool price over fills
};

struct SimState {
    std::int64_t t = 0;
    CurveSpec curve;
    PoolState pool;
    Wallet trader;
    Wallet arbitrageur;
    Wallet lp_fees; // fee ledger held outside the pool reserves
    Cumulative cum;
    double p_mkt = 0.0;
};

// One emitted time-step row; values use the step's market price.
struct SimRecord {
    std::int64_t t = 0;
    double p_mkt = 0.0;
    double p_pool = 0.0;
    double pool_x = 0.0;
    double pool_y = 0.0;
    double trader_x = 0.0;
    double trader_y = 0.0;
    double arb_x = 0.0;
    double arb_y = 0.0;
    double lp_value = 0.0; // pool reserves plus fee ledger at p_mkt
    double trader_value = 0.0;
    double arb_value = 0.0;
    double fees_cum = 0.0;
    double slippage_cum = 0.0;
    std::int64_t declined_cum = 0;
};

enum class DeclineReason { PoolInfeasible, AgentBudget, DomainViolation };

const char* to_string(DeclineReason reason);

struct TradeOutcome {
    bool filled = false;
    double delta_x = 0.0;
    double delta_y = 0.0;
    double fee = 0.0;
    double slippage = 0.0;
    std::optional<DeclineReason> decline;
};

struct RunSummary {
    CurveKind amm_kind = CurveKind::StaticProduct;
    double end_price = 0.0;
    // Final holdings marked at the end-of-run market price.
    double lp_final_value = 0.0; // includes the fee ledger
    double trader_final_value = 0.0;
    double arb_final_value = 0.0;
    double fees_total = 0.0;
    double slippage_total = 0.0;
    std::int64_t declined_total = 0;
    std::int64_t arb_trades = 0;
    double min_pool_x_fraction = 0.0; // min over records of pool_x / initial x
    double min_pool_y_fraction = 0.0;
    double fee_base_total = 0.0;
};

struct RunResult {
    std::vector<SimRecord> records;
    RunSummary summary;
};

struct LabeledRun {
    CurveKind kind = CurveKind::StaticSum;
    RunResult result;
};

void validate_config(const SimConfig& config);
SimState initial_state(const SimConfig& config);

// Fill or decline one request against the current curve. Fills move the
// pool, the agent's wallet, and the fee ledger; trader declines only bump
// the decline counter. Declines are data, not errors.
TradeOutcome settle_trade(SimState& state, const TradeRequest& request, const SimConfig& config);

// One simulation step: oracle update; retune (dynamic) or arbitrage
// (static); the trader's request; a second retune so dynamic pools end the
// step back at the market price; then the emitted record.
SimRecord step(SimState& state, const PriceSchedule& schedule, double trade, const SimConfig& config);

RunResult run(const SimConfig& config);

// All four curve kinds fed the exact same trade draws.
std::vector<LabeledRun> run_comparison(const SimConfig& base_config);

} // namespace ammsim
