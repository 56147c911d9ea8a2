#pragma once

#include <stdexcept>
#include <string>

namespace blrec {

// Violated construction-time invariant (bad atom bounds, empty window, ...).
class InvariantError : public std::runtime_error {
public:
    explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

// Violated call-site precondition (undersampled grid, unknowns present, ...).
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// Unusable configuration or input file.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace blrec
