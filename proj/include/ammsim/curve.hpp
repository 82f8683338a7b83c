#pragma once

#include <string_view>

#include "ammsim/errors.hpp"

namespace ammsim {

enum class CurveKind { StaticSum, StaticProduct, DynamicSum, DynamicProduct };

constexpr bool is_sum(CurveKind k) {
    return k == CurveKind::StaticSum || k == CurveKind::DynamicSum;
}
constexpr bool is_product(CurveKind k) {
    return k == CurveKind::StaticProduct || k == CurveKind::DynamicProduct;
}
constexpr bool is_dynamic(CurveKind k) {
    return k == CurveKind::DynamicSum || k == CurveKind::DynamicProduct;
}
constexpr bool is_static(CurveKind k) { return !is_dynamic(k); }

const char* to_string(CurveKind kind);
CurveKind curve_kind_from_string(std::string_view name); // "static-sum", "dynamic-product", ...

// The active trading curve.
//
// Sum kinds trade along the line        slope * (x - a) + y = c,
// product kinds along the hyperbola     w * (x - a) * y = k.
//
// Static kinds keep a = 0 and slope = w = 1 for their whole life, which
// reduces the shapes to y = c - x and x * y = k. Dynamic kinds move a
// (plus slope, or w) on every retune so the curve passes through the
// current reserves with spot price equal to the oracle price.
struct CurveSpec {
    CurveKind kind = CurveKind::StaticProduct;
    double c = 0.0;     // sum constant, Y units (sum kinds)
    double k = 0.0;     // product constant, X*Y units (product kinds)
    double a = 0.0;     // horizontal shift, X units
    double w = 1.0;     // scale > 0 (dynamic product)
    double slope = 1.0; // line slope captured at the last retune (sum kinds)

    static CurveSpec static_sum(double c);
    static CurveSpec static_product(double k);
    static CurveSpec dynamic_sum(double c);     // starts as the unit-slope line
    static CurveSpec dynamic_product(double k); // starts as the plain hyperbola
};

struct PoolState {
    double x = 0.0;
    double y = 0.0;
};

// Result of pricing one swap against a fixed curve. delta_x > 0 means the
// trader receives X and pays delta_y > 0 of Y; delta_x < 0 means the trader
// sells X and receives -delta_y. new_pool lies on the same curve; origin is
// kept so execution can reject quotes built from another pool state.
struct SwapQuote {
    double delta_x = 0.0;
    double delta_y = 0.0;
    PoolState origin;
    PoolState new_pool;
    double spot_price_before = 0.0;
};

// y on the curve at reserve x. Throws DomainError outside the valid branch
// (x <= a for product kinds, negative y for sum kinds).
double curve_y_at(const CurveSpec& curve, double x);

// Spot price -dy/dx at the pool's current reserves (Y per X).
double spot_price(const CurveSpec& curve, const PoolState& pool);

// Price a swap of delta_x (signed, X units) against the pool. Closed form,
// pool untouched. Throws InsufficientPoolX when a buy exceeds what the pool
// can supply, DomainError when the end state leaves the curve's domain.
SwapQuote quote(const CurveSpec& curve, const PoolState& pool, double delta_x);

// Apply a quote. Throws StaleQuote unless the pool matches the quote's
// origin exactly. Wallet settlement is the caller's job.
PoolState execute_swap(const PoolState& pool, const SwapQuote& q);

// Move the line through the current reserves with slope p_mkt:
//   a = x - (c - y) / p_mkt, stored slope = p_mkt.
CurveSpec retune_dynamic_sum(const CurveSpec& curve, const PoolState& pool, double p_mkt);

// Move the hyperbola through the current reserves with spot price p_mkt:
//   a = x - y / p_mkt,  w = k * p_mkt / y^2.
CurveSpec retune_dynamic_product(const CurveSpec& curve, const PoolState& pool, double p_mkt);

// Largest buy the pool can fill. Sum kinds can hand out the whole X
// reserve; product kinds approach the x = a asymptote, so the bound is
// (x - a) shaved by a 1e-9 guard to keep the end state in-domain.
double max_buyable_x(const CurveSpec& curve, const PoolState& pool);

// True when the reserves satisfy the active curve equation to rel_tol.
bool on_curve(const CurveSpec& curve, const PoolState& pool, double rel_tol = 1e-9);

// Curve constants derived from the starting reserves: c = x + y, k = x * y.
CurveSpec initial_curve(CurveKind kind, const PoolState& initial_pool);

} // namespace ammsim
