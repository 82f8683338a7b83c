#pragma once

#include <stdexcept>

namespace ammsim {

// Requested x lies outside the active curve's valid branch, or the
// resulting y would be negative.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Buy request larger than the pool can supply along the active curve.
struct InsufficientPoolX : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Quote presented for execution against a pool it was not built from.
struct StaleQuote : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Oracle or retune price that is zero, negative, or not finite.
struct NonPositivePrice : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Pool reserves unusable for the requested retune (x <= 0 or y <= 0).
struct DegeneratePool : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Relative-change metric evaluated against a zero base value.
struct ZeroBaseValue : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Price ratio must be strictly positive.
struct NonPositiveRho : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Step index outside a schedule's valid range.
struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Bad simulation or CLI configuration (unknown kind, short series, ...).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ammsim
