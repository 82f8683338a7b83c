#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>

#include "ammsim/agents.hpp"
#include "ammsim/metrics.hpp"
#include "doctest.h"

using namespace ammsim;

TEST_SUITE("agents") {

TEST_CASE("trade sequences are reproducible and seed-sensitive") {
    const TradeSequence a = generate_trade_sequence(42, 1000);
    const TradeSequence b = generate_trade_sequence(42, 1000);
    REQUIRE(a.draws.size() == 1000);
    CHECK(a.draws == b.draws); // bit-for-bit

    const TradeSequence c = generate_trade_sequence(43, 1000);
    CHECK(a.draws != c.draws);

    CHECK_THROWS_AS(generate_trade_sequence(1, 0), std::invalid_argument);
}

TEST_CASE("draws look standard normal") {
    const TradeSequence seq = generate_trade_sequence(42, 1000);
    const double mean =
        std::accumulate(seq.draws.begin(), seq.draws.end(), 0.0) / double(seq.draws.size());
    double var = 0.0;
    for (double d : seq.draws) var += (d - mean) * (d - mean);
    var /= double(seq.draws.size());
    CHECK(std::abs(mean) < 0.1);
    CHECK(std::abs(std::sqrt(var) - 1.0) < 0.1);
}

TEST_CASE("replay files round-trip bit-exact") {
    const TradeSequence seq = generate_trade_sequence(7, 250);
    const char* path = "agents_test_replay.txt";
    save_trade_sequence(path, seq.draws);
    const auto loaded = load_trade_sequence(path);
    CHECK(loaded == seq.draws);
    std::remove(path);

    CHECK_THROWS_AS(load_trade_sequence("missing_replay.txt"), ConfigError);
}

TEST_CASE("product arbitrage closes the price gap") {
    const CurveSpec cp = CurveSpec::static_product(1e6);
    const PoolState pool{1000.0, 1000.0};
    const Wallet deep{1e9, 1e9};

    SUBCASE("buys down to the market reserve point") {
        const auto trade = arbitrage_decide(cp, pool, 4.0, deep, 0.0);
        REQUIRE(trade.has_value());
        CHECK(trade->agent == AgentId::Arbitrageur);
        CHECK(trade->delta_x == doctest::Approx(500.0).epsilon(1e-12));
        const PoolState after = execute_swap(pool, quote(cp, pool, trade->delta_x));
        CHECK(spot_price(cp, after) == doctest::Approx(4.0).epsilon(1e-9));
    }

    SUBCASE("no trade at the balanced point") {
        const PoolState balanced{500.0, 2000.0}; // spot = 1e6/500^2 = 4
        CHECK_FALSE(arbitrage_decide(cp, balanced, 4.0, deep, 0.0).has_value());
    }

    SUBCASE("sells when the pool overprices X") {
        const auto trade = arbitrage_decide(cp, pool, 0.25, deep, 0.0);
        REQUIRE(trade.has_value());
        CHECK(trade->delta_x == doctest::Approx(-1000.0).epsilon(1e-12)); // x* = 2000
        const PoolState after = execute_swap(pool, quote(cp, pool, trade->delta_x));
        CHECK(spot_price(cp, after) == doctest::Approx(0.25).epsilon(1e-9));
    }
}

TEST_CASE("sum arbitrage sweeps the cheap side within budget") {
    const CurveSpec cs = CurveSpec::static_sum(2000.0);
    const PoolState pool{1000.0, 1000.0};

    const auto buy = arbitrage_decide(cs, pool, 5.0, Wallet{1000.0, 1000.0}, 0.0);
    REQUIRE(buy.has_value());
    CHECK(buy->delta_x == doctest::Approx(1000.0)); // whole X reserve at unit price

    const auto sell = arbitrage_decide(cs, pool, 0.2, Wallet{1000.0, 1000.0}, 0.0);
    REQUIRE(sell.has_value());
    CHECK(sell->delta_x == doctest::Approx(-1000.0)); // fill the pool's Y capacity

    // Inside the fee band: no profitable trade.
    CHECK_FALSE(arbitrage_decide(cs, pool, 1.01, Wallet{1000.0, 1000.0}, 0.02).has_value());
    CHECK_FALSE(arbitrage_decide(cs, pool, 0.99, Wallet{1000.0, 1000.0}, 0.02).has_value());
}

TEST_CASE("unbounded zero-fee product arbitrage equalizes prices") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> log_price(std::log(0.02), std::log(50.0));
    const CurveSpec cp = CurveSpec::static_product(1e6);
    const Wallet deep{1e12, 1e12};

    for (int i = 0; i < 200; ++i) {
        const double p = std::exp(log_price(rng));
        const PoolState pool{1000.0, 1000.0};
        const auto trade = arbitrage_decide(cp, pool, p, deep, 0.0);
        if (!trade) {
            CHECK(std::abs(spot_price(cp, pool) - p) <= 1e-9 * std::max(1.0, p));
            continue;
        }
        const PoolState after = execute_swap(pool, quote(cp, pool, trade->delta_x));
        CHECK(std::abs(spot_price(cp, after) - p) <= 1e-9 * std::max(1.0, p));
    }
}

TEST_CASE("clipped arbitrage stays affordable and profitable") {
    std::mt19937_64 rng(8888);
    std::uniform_real_distribution<double> log_price(std::log(0.02), std::log(50.0));
    std::uniform_real_distribution<double> holding(0.0, 3000.0);
    std::uniform_real_distribution<double> fee_dist(0.0, 0.05);

    const CurveSpec kinds[] = {CurveSpec::static_product(1e6), CurveSpec::static_sum(2000.0)};
    for (int i = 0; i < 500; ++i) {
        const CurveSpec& curve = kinds[i % 2];
        const PoolState pool{1000.0, 1000.0};
        const Wallet wallet{holding(rng), holding(rng)};
        const double fee_rate = fee_dist(rng);
        const double p = std::exp(log_price(rng));

        const auto trade = arbitrage_decide(curve, pool, p, wallet, fee_rate);
        if (!trade) continue;

        const SwapQuote q = quote(curve, pool, trade->delta_x);
        const double fee = fee_rate * std::abs(q.delta_x) * q.spot_price_before;
        Wallet settled = wallet;
        settled.x += q.delta_x;
        settled.y -= q.delta_y;
        settled.y -= fee;
        CHECK(settled.x >= 0.0);
        CHECK(settled.y >= 0.0);

        // Mark-to-market gain at the oracle price, fees included.
        const double before = pool_value(wallet.x, wallet.y, p);
        const double after = pool_value(settled.x, settled.y, p);
        CHECK(after > before);
    }
}

TEST_CASE("dynamic curves present no arbitrage") {
    const PoolState pool{1000.0, 1000.0};
    const Wallet deep{1e9, 1e9};
    const CurveSpec dsum = retune_dynamic_sum(CurveSpec::dynamic_sum(2000.0), pool, 3.0);
    const CurveSpec dprod = retune_dynamic_product(CurveSpec::dynamic_product(1e6), pool, 3.0);

    CHECK_FALSE(arbitrage_decide(dsum, pool, 3.0, deep, 0.0).has_value());
    CHECK_FALSE(arbitrage_decide(dprod, pool, 3.0, deep, 0.0).has_value());

    // Right after a retune, trading at the tangent price cannot profit:
    // the line breaks even and the hyperbola charges slippage on top.
    for (double d : {-80.0, -5.0, 5.0, 80.0}) {
        const SwapQuote qs = quote(dsum, pool, d);
        CHECK(3.0 * qs.delta_x - qs.delta_y == 0.0);
        const SwapQuote qp = quote(dprod, pool, d);
        CHECK(3.0 * qp.delta_x - qp.delta_y < 0.0);
        CHECK(std::abs(3.0 * qp.delta_x - qp.delta_y) ==
              doctest::Approx(slippage_from_quote(qp)).epsilon(1e-12));
    }
}

} // TEST_SUITE
