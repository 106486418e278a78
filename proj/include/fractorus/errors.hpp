// fractorus — error types shared across the library and CLI.
//
// The CLI maps these onto its stable exit-code contract:
//   InputError      -> exit 2 (configuration / argument errors)
//   NumericalError  -> exit 3 (tolerance not met, divergent quadrature, ...)
#pragma once

#include <stdexcept>
#include <string>

namespace fractorus {

// Invalid arguments, malformed files, out-of-domain parameters.
struct InputError : std::invalid_argument {
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A computation could not meet its requested accuracy or hit a numerical
// failure that the caller asked us not to silently absorb.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace fractorus
