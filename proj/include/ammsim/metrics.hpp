#pragma once

#include <string>

#include "ammsim/curve.hpp"

namespace ammsim {

// Mark-to-market view of one holder's position at a reference price.
struct ValueSnapshot {
    std::string holder;
    double x_value = 0.0; // X holdings * reference price, in Y units
    double y_value = 0.0; // Y holdings
    double total = 0.0;   // x_value + y_value
    double reference_price = 0.0;
};

ValueSnapshot value_snapshot(std::string holder, double x, double y, double price);

// Pool value measured in Y: p * x + y. Expects p >= 0.
double pool_value(double x, double y, double p);

// Trader's loss versus filling the whole trade at the pre-trade spot price.
// Zero on sum kinds, positive on the strictly convex product kinds.
double slippage(const CurveSpec& curve, const PoolState& pool, double delta_x);

// Same, computed from an existing quote: delta_y - spot_before * delta_x
// (covers both trade directions).
double slippage_from_quote(const SwapQuote& q);

// Relative pool-value change across a reserve move, measured at the new
// price p_n: (V_pn(new) - V_pn(old)) / V_pn(old). Negative means loss.
double divergence_loss_general(double p_n, double x_o, double y_o, double x_n, double y_n);

// Closed form for the plain constant-product curve as a function of the
// price ratio rho = p_n / p_o: (2 * sqrt(rho) - 1 - rho) / (1 + rho).
double divergence_loss_constant_product(double rho);

} // namespace ammsim
