#include "ammsim/agents.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ammsim {

namespace {
// Shave budget-derived clip amounts so settlement never trips on the last ulp.
constexpr double kBudgetShave = 1e-12;
} // namespace

const char* to_string(AgentId id) {
    return id == AgentId::Trader ? "trader" : "arbitrageur";
}

double NormalSampler::uniform01() {
    // 53-bit mantissa in [0, 1); identical bits on every platform.
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

double NormalSampler::next() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double v1 = 0.0, v2 = 0.0, s = 0.0;
    do {
        v1 = 2.0 * uniform01() - 1.0;
        v2 = 2.0 * uniform01() - 1.0;
        s = v1 * v1 + v2 * v2;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v2 * m;
    has_spare_ = true;
    return v1 * m;
}

TradeSequence generate_trade_sequence(std::uint64_t seed, std::size_t steps) {
    if (steps == 0) throw std::invalid_argument("generate_trade_sequence: steps must be > 0");
    TradeSequence seq;
    seq.seed = seed;
    seq.draws.reserve(steps);
    NormalSampler sampler(seed);
    for (std::size_t i = 0; i < steps; ++i) seq.draws.push_back(sampler.next());
    return seq;
}

std::string serialize_trade_sequence(const std::vector<double>& draws) {
    std::string out;
    out.reserve(draws.size() * 26);
    char buf[40];
    for (double d : draws) {
        std::snprintf(buf, sizeof buf, "%.17g\n", d);
        out += buf;
    }
    return out;
}

void save_trade_sequence(const std::string& path, const std::vector<double>& draws) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open replay file for writing: " + path);
    out << serialize_trade_sequence(draws);
}

std::vector<double> load_trade_sequence(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open replay file: " + path);
    std::vector<double> draws;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        double v = 0.0;
        if (ls >> v) draws.push_back(v);
    }
    if (draws.empty()) throw ConfigError("replay file has no trades: " + path);
    return draws;
}

namespace {

std::optional<TradeRequest> decide_static_product(const CurveSpec& curve, const PoolState& pool,
                                                  double p_mkt, const Wallet& wallet,
                                                  double fee_rate) {
    const double p0 = spot_price(curve, pool);
    const double x_star = std::sqrt(curve.k / p_mkt); // reserve where pool price equals p_mkt

    if (x_star < pool.x) {
        // Pool sells X too cheap: buy down to x_star, clipped to the Y budget.
        const double budget = wallet.y;
        if (!(budget > 0.0)) return std::nullopt;
        double d = pool.x - x_star;
        const double cost_full = (curve.k / (pool.x - d) - pool.y) + fee_rate * p0 * d;
        if (cost_full > budget) {
            // Solve (k/(x-d) - y) + fee_rate*p0*d = budget for d; in quadratic
            // form fee_rate*p0*d^2 - (y + budget + fee_rate*p0*x)*d + ((y+budget)*x - k) = 0,
            // smallest root taken via the cancellation-free formula.
            const double aq = fee_rate * p0;
            const double bq = pool.y + budget + fee_rate * p0 * pool.x;
            const double cq = (pool.y + budget) * pool.x - curve.k;
            if (cq <= 0.0) return std::nullopt;
            d = aq == 0.0 ? cq / bq : 2.0 * cq / (bq + std::sqrt(bq * bq - 4.0 * aq * cq));
            d *= 1.0 - kBudgetShave;
        }
        if (!(d > 0.0)) return std::nullopt;
        const SwapQuote q = quote(curve, pool, d);
        const double profit = p_mkt * d - q.delta_y - fee_rate * p0 * d;
        if (!(profit > 0.0)) return std::nullopt;
        return TradeRequest{AgentId::Arbitrageur, d};
    }

    if (x_star > pool.x) {
        // Pool pays too much for X: sell up to x_star, clipped to holdings.
        const double d = std::min(x_star - pool.x, wallet.x);
        if (!(d > 0.0)) return std::nullopt;
        const SwapQuote q = quote(curve, pool, -d);
        const double received = -q.delta_y;
        const double fee = fee_rate * p0 * d;
        if (wallet.y + received < fee) return std::nullopt;
        const double profit = received - p_mkt * d - fee;
        if (!(profit > 0.0)) return std::nullopt;
        return TradeRequest{AgentId::Arbitrageur, -d};
    }

    return std::nullopt;
}

std::optional<TradeRequest> decide_static_sum(const CurveSpec& curve, const PoolState& pool,
                                              double p_mkt, const Wallet& wallet,
                                              double fee_rate) {
    // Pool price is pinned at 1; trade only outside the fee band.
    if (p_mkt > 1.0 + fee_rate) {
        double affordable = wallet.y / (1.0 + fee_rate);
        if (fee_rate > 0.0) affordable *= 1.0 - kBudgetShave;
        const double d = std::min(max_buyable_x(curve, pool), affordable);
        if (!(d > 0.0)) return std::nullopt;
        const double profit = (p_mkt - 1.0 - fee_rate) * d;
        if (!(profit > 0.0)) return std::nullopt;
        return TradeRequest{AgentId::Arbitrageur, d};
    }
    if (p_mkt < 1.0 / (1.0 + fee_rate)) {
        const double d = std::min(wallet.x, pool.y); // pool pays 1 Y per X along the line
        if (!(d > 0.0)) return std::nullopt;
        const double profit = (1.0 - p_mkt - fee_rate) * d;
        if (!(profit > 0.0)) return std::nullopt;
        return TradeRequest{AgentId::Arbitrageur, -d};
    }
    return std::nullopt;
}

} // namespace

std::optional<TradeRequest> arbitrage_decide(const CurveSpec& curve, const PoolState& pool,
                                             double p_mkt, const Wallet& wallet, double fee_rate) {
    if (is_dynamic(curve.kind)) return std::nullopt; // tracking curves leave no gap
    if (!std::isfinite(p_mkt) || p_mkt <= 0.0) {
        throw NonPositivePrice("arbitrage_decide: p_mkt must be finite and > 0");
    }
    if (curve.kind == CurveKind::StaticProduct) {
        return decide_static_product(curve, pool, p_mkt, wallet, fee_rate);
    }
    return decide_static_sum(curve, pool, p_mkt, wallet, fee_rate);
}

} // namespace ammsim
