#pragma once

#include <stdexcept>
#include <string>

namespace evt {

// Numeric-domain violations: invalid parameters, preconditions on data.
struct domain_error : std::domain_error {
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// A denominator or pivot degenerated exactly.
struct singularity_error : domain_error {
    explicit singularity_error(const std::string& what) : domain_error(what) {}
};

// A statistic overflowed the double range.
struct overflow_error : domain_error {
    explicit overflow_error(const std::string& what) : domain_error(what) {}
};

// The tail was too degenerate to fit second-order parameters.
struct estimation_failure : std::runtime_error {
    explicit estimation_failure(const std::string& what) : std::runtime_error(what) {}
};

// Adaptive level selection could not find a usable minimum.
// Carries a printable diagnostic of the curves it looked at.
struct selection_failure : std::runtime_error {
    std::string diagnostics;
    selection_failure(const std::string& what, std::string diag)
        : std::runtime_error(what), diagnostics(std::move(diag)) {}
};

struct no_exceedance_error : domain_error {
    explicit no_exceedance_error(const std::string& what) : domain_error(what) {}
};

}  // namespace evt
