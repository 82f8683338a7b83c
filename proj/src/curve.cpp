#include "ammsim/curve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ammsim {

namespace {
constexpr double kDomainGuard = 1e-9; // multiplicative shave off the buy limit

void require_positive_price(double p, const char* where) {
    if (!std::isfinite(p) || p <= 0.0) {
        throw NonPositivePrice(std::string(where) + ": price must be finite and > 0");
    }
}
} // namespace

const char* to_string(CurveKind kind) {
    switch (kind) {
    case CurveKind::StaticSum: return "static-sum";
    case CurveKind::StaticProduct: return "static-product";
    case CurveKind::DynamicSum: return "dynamic-sum";
    case CurveKind::DynamicProduct: return "dynamic-product";
    }
    return "unknown";
}

CurveKind curve_kind_from_string(std::string_view name) {
    if (name == "static-sum") return CurveKind::StaticSum;
    if (name == "static-product") return CurveKind::StaticProduct;
    if (name == "dynamic-sum") return CurveKind::DynamicSum;
    if (name == "dynamic-product") return CurveKind::DynamicProduct;
    throw ConfigError("unknown AMM kind: " + std::string(name));
}

CurveSpec CurveSpec::static_sum(double c) {
    if (!(c > 0.0)) throw ConfigError("static_sum: c must be > 0");
    CurveSpec s;
    s.kind = CurveKind::StaticSum;
    s.c = c;
    return s;
}

CurveSpec CurveSpec::static_product(double k) {
    if (!(k > 0.0)) throw ConfigError("static_product: k must be > 0");
    CurveSpec s;
    s.kind = CurveKind::StaticProduct;
    s.k = k;
    return s;
}

CurveSpec CurveSpec::dynamic_sum(double c) {
    CurveSpec s = static_sum(c);
    s.kind = CurveKind::DynamicSum;
    return s;
}

CurveSpec CurveSpec::dynamic_product(double k) {
    CurveSpec s = static_product(k);
    s.kind = CurveKind::DynamicProduct;
    return s;
}

CurveSpec initial_curve(CurveKind kind, const PoolState& pool) {
    switch (kind) {
    case CurveKind::StaticSum: return CurveSpec::static_sum(pool.x + pool.y);
    case CurveKind::DynamicSum: return CurveSpec::dynamic_sum(pool.x + pool.y);
    case CurveKind::StaticProduct: return CurveSpec::static_product(pool.x * pool.y);
    case CurveKind::DynamicProduct: return CurveSpec::dynamic_product(pool.x * pool.y);
    }
    throw ConfigError("initial_curve: unknown kind");
}

double curve_y_at(const CurveSpec& curve, double x) {
    if (!std::isfinite(x)) throw DomainError("curve_y_at: x must be finite");
    if (is_product(curve.kind)) {
        if (x <= curve.a) throw DomainError("curve_y_at: x must exceed the asymptote x = a");
        return (curve.k / curve.w) / (x - curve.a);
    }
    const double y = curve.c - curve.slope * (x - curve.a);
    if (y < 0.0) throw DomainError("curve_y_at: y is negative at this x");
    return y;
}

double spot_price(const CurveSpec& curve, const PoolState& pool) {
    if (is_sum(curve.kind)) return curve.slope;
    const double gap = pool.x - curve.a;
    if (gap <= 0.0) throw DomainError("spot_price: pool x must exceed the asymptote x = a");
    return (curve.k / curve.w) / (gap * gap);
}

SwapQuote quote(const CurveSpec& curve, const PoolState& pool, double delta_x) {
    if (!std::isfinite(delta_x) || delta_x == 0.0) {
        throw std::invalid_argument("quote: delta_x must be finite and nonzero");
    }
    SwapQuote q;
    q.delta_x = delta_x;
    q.origin = pool;
    q.spot_price_before = spot_price(curve, pool);

    const double x_n = pool.x - delta_x;
    if (is_sum(curve.kind)) {
        if (x_n < 0.0) throw InsufficientPoolX("quote: buy exceeds the pool's X reserve");
        // Along the line delta_y is exactly slope * delta_x.
        q.delta_y = curve.slope * delta_x;
        const double y_n = pool.y + q.delta_y;
        if (y_n < 0.0) throw DomainError("quote: sell would drive the pool's Y reserve negative");
        q.new_pool = PoolState{x_n, y_n};
        return q;
    }

    if (x_n <= curve.a) throw InsufficientPoolX("quote: buy exceeds what the hyperbola can supply");
    const double y_n = (curve.k / curve.w) / (x_n - curve.a);
    q.delta_y = y_n - pool.y;
    q.new_pool = PoolState{x_n, y_n};
    return q;
}

PoolState execute_swap(const PoolState& pool, const SwapQuote& q) {
    if (pool.x != q.origin.x || pool.y != q.origin.y) {
        throw StaleQuote("execute_swap: quote was built from a different pool state");
    }
    return q.new_pool;
}

CurveSpec retune_dynamic_sum(const CurveSpec& curve, const PoolState& pool, double p_mkt) {
    if (curve.kind != CurveKind::DynamicSum) {
        throw std::invalid_argument("retune_dynamic_sum: curve is not dynamic-sum");
    }
    require_positive_price(p_mkt, "retune_dynamic_sum");
    CurveSpec next = curve;
    next.a = pool.x - (curve.c - pool.y) / p_mkt;
    next.slope = p_mkt;
    // The new line must pass through the reserves.
    const double residual = next.slope * (pool.x - next.a) + pool.y - next.c;
    if (std::abs(residual) > 1e-9 * std::max(1.0, std::abs(next.c))) {
        throw std::logic_error("retune_dynamic_sum: line misses the pool state");
    }
    return next;
}

CurveSpec retune_dynamic_product(const CurveSpec& curve, const PoolState& pool, double p_mkt) {
    if (curve.kind != CurveKind::DynamicProduct) {
        throw std::invalid_argument("retune_dynamic_product: curve is not dynamic-product");
    }
    require_positive_price(p_mkt, "retune_dynamic_product");
    if (!(pool.x > 0.0) || !(pool.y > 0.0)) {
        throw DegeneratePool("retune_dynamic_product: reserves must both be > 0");
    }
    CurveSpec next = curve;
    next.a = pool.x - pool.y / p_mkt;         // keeps a < x
    next.w = curve.k * p_mkt / (pool.y * pool.y); // keeps w > 0
    const double curve_residual = next.w * (pool.x - next.a) * pool.y - next.k;
    const double price_residual = spot_price(next, pool) - p_mkt;
    if (std::abs(curve_residual) > 1e-9 * std::max(1.0, next.k) ||
        std::abs(price_residual) > 1e-9 * std::max(1.0, p_mkt)) {
        throw std::logic_error("retune_dynamic_product: retuned curve misses the pool state");
    }
    return next;
}

double max_buyable_x(const CurveSpec& curve, const PoolState& pool) {
    if (is_sum(curve.kind)) return pool.x;
    return (pool.x - curve.a) * (1.0 - kDomainGuard);
}

bool on_curve(const CurveSpec& curve, const PoolState& pool, double rel_tol) {
    if (is_sum(curve.kind)) {
        const double residual = curve.slope * (pool.x - curve.a) + pool.y - curve.c;
        return std::abs(residual) <= rel_tol * std::max(1.0, std::abs(curve.c));
    }
    const double residual = curve.w * (pool.x - curve.a) * pool.y - curve.k;
    return std::abs(residual) <= rel_tol * std::max(1.0, curve.k);
}

} // namespace ammsim
