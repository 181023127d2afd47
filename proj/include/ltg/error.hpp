#pragma once

#include <stdexcept>
#include <string>

namespace ltg {

// Single error type for the whole library. `code` is a stable, machine-readable
// identifier (e.g. "ArityMismatch", "UnboundVariable"); `what()` carries the
// human-readable message including the code.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

}  // namespace ltg
