#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gammamedian {

/// An iterative method stopped without meeting its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, std::uintmax_t iterations)
        : std::runtime_error(what + " (after " + std::to_string(iterations) + " iterations)"),
          iterations_(iterations) {}

    std::uintmax_t iterations() const { return iterations_; }

private:
    std::uintmax_t iterations_;
};

} // namespace gammamedian
