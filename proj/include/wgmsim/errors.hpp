#pragma once

#include <stdexcept>
#include <string>

namespace wgmsim {

// Shapes, layouts or indices that do not fit together.
struct DimensionError : std::runtime_error {
    explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid run configuration (bad keys, values, incomplete presets).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A numerical contract was violated (non-Hermitian input, trace drift,
// positivity loss, Fock-truncation leakage, oracle disagreement).
struct GuardError : std::runtime_error {
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wgmsim
