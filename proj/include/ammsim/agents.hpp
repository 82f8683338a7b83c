#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ammsim/curve.hpp"

namespace ammsim {

struct Wallet {
    double x = 0.0;
    double y = 0.0;
};

enum class AgentId { Trader, Arbitrageur };

const char* to_string(AgentId id);

// Signed request in X units: positive buys X from the pool.
struct TradeRequest {
    AgentId agent = AgentId::Trader;
    double delta_x = 0.0;
};

// Per-step trader draws, reproducible from the seed and replayable from file.
struct TradeSequence {
    std::uint64_t seed = 0;
    std::vector<double> draws;
};

// Standard-normal draws from mt19937_64 (high 53 bits -> uniform) through
// the Marsaglia polar method. Same seed, same draws, on any platform.
class NormalSampler {
public:
    explicit NormalSampler(std::uint64_t seed) : rng_(seed) {}
    double next();

private:
    double uniform01();
    std::mt19937_64 rng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

TradeSequence generate_trade_sequence(std::uint64_t seed, std::size_t steps);

// Replay files: one signed decimal per line, row i = step i's request.
// Values are written with 17 significant digits so they reload bit-exact.
void save_trade_sequence(const std::string& path, const std::vector<double>& draws);
std::vector<double> load_trade_sequence(const std::string& path);
std::string serialize_trade_sequence(const std::vector<double>& draws);

// Single clipped trade that closes the pool/market price gap on a static
// curve, or nothing when no profitable trade exists. Dynamic kinds always
// return nothing (tracking leaves no gap). The returned trade is affordable
// for the wallet with fees included.
std::optional<TradeRequest> arbitrage_decide(const CurveSpec& curve, const PoolState& pool,
                                             double p_mkt, const Wallet& wallet, double fee_rate);

} // namespace ammsim
