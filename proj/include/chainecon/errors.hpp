#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace chainecon {

// Elasticity of the attack-value function is (e/V)V'(e); undefined where V(e) = 0.
struct UndefinedElasticityError : std::domain_error {
    using std::domain_error::domain_error;
};

// cost_savings() is only defined for the fixed-reward regime.
struct InvalidRegimeError : std::domain_error {
    using std::domain_error::domain_error;
};

// Requested quantity does not exist because the sustainability condition fails.
struct InfeasibleError : std::domain_error {
    using std::domain_error::domain_error;
};

// Malformed sweep specification: unknown axis name, empty output selection,
// bad axis bounds, or a requested output whose parameters are neither fixed
// nor provided by an axis.
struct SweepSpecError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Market-feed failure; carries the failing source so callers can tell which
// endpoint or file misbehaved.
struct FeedError : std::runtime_error {
    enum class Kind { io, timeout, http_status, parse, non_positive_rate };

    FeedError(Kind kind, std::string source, const std::string& message)
        : std::runtime_error(message + " [source: " + source + "]"),
          kind(kind),
          source(std::move(source)) {}

    Kind kind;
    std::string source;
};

}  // namespace chainecon
