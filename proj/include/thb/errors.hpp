#pragma once

#include <stdexcept>
#include <string>

namespace thb {

/// Violated precondition (bad parameters, N0/N3 failure, invalid config).
/// The CLI maps this to exit code 2.
class precondition_error : public std::runtime_error {
public:
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

/// A simulation left the admissible range (|u| or |v| > 1e6).
class divergence_error : public std::runtime_error {
public:
    divergence_error(double t, const std::string& what)
        : std::runtime_error(what), time(t) {}
    double time;
};

}  // namespace thb
