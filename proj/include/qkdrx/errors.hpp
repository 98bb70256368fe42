#pragma once

#include <stdexcept>
#include <string>

namespace qkdrx {

/// Bad configuration input: syntax errors, unknown keys, out-of-range
/// values discovered while resolving a run configuration. CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Unphysical model parameters or states: violated type invariants,
/// unphysical covariance matrices, infeasible optimization constraints.
/// CLI exit code 3.
class ModelError : public std::domain_error {
public:
    explicit ModelError(const std::string& msg) : std::domain_error(msg) {}
};

} // namespace qkdrx
