#pragma once

#include <stdexcept>
#include <string>

namespace commgraph {

// Bad arguments, precondition violations, parse failures.
class input_error : public std::invalid_argument {
public:
    explicit input_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Exact mode cannot represent the spectrum; carries the residual factor
// that refused to split over Q(i). Callers may retry in float mode.
class unsupported_spectrum_error : public std::runtime_error {
public:
    explicit unsupported_spectrum_error(const std::string& residual)
        : std::runtime_error("spectrum not supported in exact mode; irreducible residual: " + residual),
          residual_factor(residual) {}

    std::string residual_factor;
};

// Enumeration request exceeds the configured memory budget.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A guaranteed-to-exist witness was not found. This contradicts a proven
// statement, so it is surfaced loudly and never swallowed.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace commgraph
