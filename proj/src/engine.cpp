#include "ammsim/engine.hpp"

#include <algorithm>
#include <cmath>

#include "ammsim/metrics.hpp"

namespace ammsim {

const char* to_string(DeclineReason reason) {
    switch (reason) {
    case DeclineReason::PoolInfeasible: return "pool-infeasible";
    case DeclineReason::AgentBudget: return "agent-budget";
    case DeclineReason::DomainViolation: return "domain-violation";
    }
    return "unknown";
}

void validate_config(const SimConfig& config) {
    if (config.steps <= 0) throw ConfigError("config: steps must be > 0");
    if (!(config.fee_rate >= 0.0) || config.fee_rate >= 1.0) {
        throw ConfigError("config: fee_rate must lie in [0, 1)");
    }
    const auto nonneg = [](double v) { return std::isfinite(v) && v >= 0.0; };
    if (!nonneg(config.initial_pool.x) || !nonneg(config.initial_pool.y) ||
        !nonneg(config.initial_trader.x) || !nonneg(config.initial_trader.y) ||
        !nonneg(config.initial_arbitrageur.x) || !nonneg(config.initial_arbitrageur.y)) {
        throw ConfigError("config: initial holdings must be finite and >= 0");
    }
    if (is_product(config.amm_kind) &&
        (!(config.initial_pool.x > 0.0) || !(config.initial_pool.y > 0.0))) {
        throw ConfigError("config: product pools need strictly positive initial reserves");
    }
    if (is_sum(config.amm_kind) && !(config.initial_pool.x + config.initial_pool.y > 0.0)) {
        throw ConfigError("config: sum pools need a positive reserve total");
    }
    if (config.schedule.kind == ScheduleKind::Series &&
        config.schedule.points.size() < static_cast<std::size_t>(config.steps)) {
        throw ConfigError("config: price series shorter than the run");
    }
    if (!config.trades.empty() && config.trades.size() < static_cast<std::size_t>(config.steps)) {
        throw ConfigError("config: replay has fewer trades than steps");
    }
}

SimState initial_state(const SimConfig& config) {
    SimState s;
    s.curve = initial_curve(config.amm_kind, config.initial_pool);
    s.pool = config.initial_pool;
    s.trader = config.initial_trader;
    s.arbitrageur = config.initial_arbitrageur;
    s.lp_fees = Wallet{0.0, 0.0};
    return s;
}

namespace {

TradeOutcome declined(SimState& state, AgentId agent, DeclineReason reason) {
    if (agent == AgentId::Trader) state.cum.declined += 1;
    TradeOutcome out;
    out.decline = reason;
    return out;
}

SimRecord make_record(const SimState& state) {
    SimRecord r;
    r.t = state.t;
    r.p_mkt = state.p_mkt;
    r.p_pool = spot_price(state.curve, state.pool);
    r.pool_x = state.pool.x;
    r.pool_y = state.pool.y;
    r.trader_x = state.trader.x;
    r.trader_y = state.trader.y;
    r.arb_x = state.arbitrageur.x;
    r.arb_y = state.arbitrageur.y;
    r.lp_value = pool_value(state.pool.x, state.pool.y, state.p_mkt) +
                 pool_value(state.lp_fees.x, state.lp_fees.y, state.p_mkt);
    r.trader_value = pool_value(state.trader.x, state.trader.y, state.p_mkt);
    r.arb_value = pool_value(state.arbitrageur.x, state.arbitrageur.y, state.p_mkt);
    r.fees_cum = state.cum.fees_y;
    r.slippage_cum = state.cum.trader_slippage_y;
    r.declined_cum = state.cum.declined;
    return r;
}

CurveSpec retune(const CurveSpec& curve, const PoolState& pool, double p_mkt) {
    return curve.kind == CurveKind::DynamicSum ? retune_dynamic_sum(curve, pool, p_mkt)
                                               : retune_dynamic_product(curve, pool, p_mkt);
}

} // namespace

TradeOutcome settle_trade(SimState& state, const TradeRequest& request, const SimConfig& config) {
    Wallet& wallet = request.agent == AgentId::Trader ? state.trader : state.arbitrageur;

    SwapQuote q;
    try {
        q = quote(state.curve, state.pool, request.delta_x);
    } catch (const InsufficientPoolX&) {
        return declined(state, request.agent, DeclineReason::PoolInfeasible);
    } catch (const DomainError&) {
        return declined(state, request.agent, DeclineReason::PoolInfeasible);
    } catch (const std::invalid_argument&) {
        return declined(state, request.agent, DeclineReason::DomainViolation);
    }

    const double fee = config.fee_rate * std::abs(q.delta_x) * q.spot_price_before;
    if (q.delta_x > 0.0) {
        // Buyer pays delta_y plus the fee out of Y holdings.
        if (wallet.y < q.delta_y + fee) {
            return declined(state, request.agent, DeclineReason::AgentBudget);
        }
    } else {
        // Seller hands over X and nets the proceeds minus the fee.
        if (wallet.x < -q.delta_x || wallet.y - q.delta_y < fee) {
            return declined(state, request.agent, DeclineReason::AgentBudget);
        }
    }

    state.pool = execute_swap(state.pool, q);
    wallet.x += q.delta_x;
    wallet.y -= q.delta_y;
    wallet.y -= fee;
    state.lp_fees.y += fee;

    const double slip = slippage_from_quote(q);
    state.cum.fees_y += fee;
    state.cum.fee_base += std::abs(q.delta_x) * q.spot_price_before;
    if (request.agent == AgentId::Trader) {
        state.cum.trader_slippage_y += slip;
    } else {
        state.cum.arb_trades += 1;
    }

    TradeOutcome out;
    out.filled = true;
    out.delta_x = q.delta_x;
    out.delta_y = q.delta_y;
    out.fee = fee;
    out.slippage = slip;
    return out;
}

SimRecord step(SimState& state, const PriceSchedule& schedule, double trade, const SimConfig& config) {
    if (state.t >= config.steps) throw std::invalid_argument("step: run already finished");

    state.p_mkt = price_at(schedule, state.t, config.steps);

    if (is_dynamic(config.amm_kind)) {
        state.curve = retune(state.curve, state.pool, state.p_mkt);
    } else {
        const auto arb =
            arbitrage_decide(state.curve, state.pool, state.p_mkt, state.arbitrageur, config.fee_rate);
        if (arb) settle_trade(state, *arb, config); // failures fall through as no-trade
    }

    if (trade != 0.0) {
        settle_trade(state, TradeRequest{AgentId::Trader, trade}, config);
    }

    if (is_dynamic(config.amm_kind)) {
        state.curve = retune(state.curve, state.pool, state.p_mkt);
    }

    const SimRecord record = make_record(state);
    state.t += 1;
    return record;
}

RunResult run(const SimConfig& config) {
    validate_config(config);

    std::vector<double> trades = config.trades;
    if (trades.empty()) {
        trades = generate_trade_sequence(config.seed, static_cast<std::size_t>(config.steps)).draws;
    }

    SimState state = initial_state(config);
    RunResult out;
    out.records.reserve(static_cast<std::size_t>(config.steps));
    for (std::int64_t t = 0; t < config.steps; ++t) {
        out.records.push_back(step(state, config.schedule, trades[static_cast<std::size_t>(t)], config));
    }

    RunSummary& s = out.summary;
    s.amm_kind = config.amm_kind;
    s.end_price = price_at(config.schedule, config.steps - 1, config.steps);
    s.lp_final_value = pool_value(state.pool.x, state.pool.y, s.end_price) +
                       pool_value(state.lp_fees.x, state.lp_fees.y, s.end_price);
    s.trader_final_value = pool_value(state.trader.x, state.trader.y, s.end_price);
    s.arb_final_value = pool_value(state.arbitrageur.x, state.arbitrageur.y, s.end_price);
    s.fees_total = state.cum.fees_y;
    s.slippage_total = state.cum.trader_slippage_y;
    s.declined_total = state.cum.declined;
    s.arb_trades = state.cum.arb_trades;
    s.fee_base_total = state.cum.fee_base;

    double min_x = 1.0, min_y = 1.0;
    for (const SimRecord& r : out.records) {
        min_x = std::min(min_x, config.initial_pool.x > 0.0 ? r.pool_x / config.initial_pool.x : 1.0);
        min_y = std::min(min_y, config.initial_pool.y > 0.0 ? r.pool_y / config.initial_pool.y : 1.0);
    }
    s.min_pool_x_fraction = min_x;
    s.min_pool_y_fraction = min_y;
    return out;
}

std::vector<LabeledRun> run_comparison(const SimConfig& base_config) {
    SimConfig shared = base_config;
    validate_config(shared);
    if (shared.trades.empty()) {
        shared.trades =
            generate_trade_sequence(shared.seed, static_cast<std::size_t>(shared.steps)).draws;
    }

    std::vector<LabeledRun> out;
    for (CurveKind kind : {CurveKind::StaticSum, CurveKind::StaticProduct, CurveKind::DynamicSum,
                           CurveKind::DynamicProduct}) {
        SimConfig cfg = shared;
        cfg.amm_kind = kind;
        out.push_back(LabeledRun{kind, run(cfg)});
    }
    return out;
}

} // namespace ammsim
