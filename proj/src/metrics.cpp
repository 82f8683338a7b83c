#include "ammsim/metrics.hpp"

#include <cmath>
#include <utility>

namespace ammsim {

ValueSnapshot value_snapshot(std::string holder, double x, double y, double price) {
    ValueSnapshot v;
    v.holder = std::move(holder);
    v.x_value = price * x;
    v.y_value = y;
    v.total = v.x_value + v.y_value;
    v.reference_price = price;
    return v;
}

double pool_value(double x, double y, double p) {
    return p * x + y;
}

double slippage(const CurveSpec& curve, const PoolState& pool, double delta_x) {
    return slippage_from_quote(quote(curve, pool, delta_x));
}

double slippage_from_quote(const SwapQuote& q) {
    // Buy:  delta_y - p0 * delta_x   (paid more than the spot bill)
    // Sell: p0 * |delta_x| - |delta_y| (received less), same signed expression.
    return q.delta_y - q.spot_price_before * q.delta_x;
}

double divergence_loss_general(double p_n, double x_o, double y_o, double x_n, double y_n) {
    const double base = p_n * x_o + y_o;
    if (base <= 0.0 || !std::isfinite(base)) {
        throw ZeroBaseValue("divergence_loss_general: base value must be > 0");
    }
    return (p_n * x_n + y_n - base) / base;
}

double divergence_loss_constant_product(double rho) {
    if (!std::isfinite(rho) || rho <= 0.0) {
        throw NonPositiveRho("divergence_loss_constant_product: rho must be finite and > 0");
    }
    return (2.0 * std::sqrt(rho) - 1.0 - rho) / (1.0 + rho);
}

} // namespace ammsim
