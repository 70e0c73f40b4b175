#pragma once

#include <stdexcept>
#include <string>

namespace besov {

// Parameter or hypothesis violation (bad p/q/s/m, unusable scale, ...).
// CLI maps this to exit code 2.
class invalid_params_error : public std::runtime_error {
public:
    explicit invalid_params_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or unreadable file content.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operands live on different grids.
class grid_mismatch_error : public std::runtime_error {
public:
    explicit grid_mismatch_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace besov
