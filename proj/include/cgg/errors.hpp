#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cgg {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Swap preconditions violated (removed edge absent, inserted pair present or a loop).
class InvalidSwap : public Error {
public:
    using Error::Error;
};

// A non-edge was requested from a complete graph.
class CompleteGraph : public Error {
public:
    CompleteGraph() : Error("graph is complete: no non-edge to sample") {}
};

class InvalidGraph : public Error {
public:
    using Error::Error;
};

// Seed graph fails one or more constraints. `reasons()` lists each failure.
class SeedViolation : public Error {
public:
    explicit SeedViolation(std::vector<std::string> reasons);
    const std::vector<std::string>& reasons() const noexcept { return reasons_; }

private:
    std::vector<std::string> reasons_;
};

class TooFewNodes : public Error {
public:
    using Error::Error;
};

class InfeasibleEdgeCount : public Error {
public:
    using Error::Error;
};

class ConvergenceFailure : public Error {
public:
    using Error::Error;
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

class TooFewGraphs : public Error {
public:
    using Error::Error;
};

class NoSeedFound : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace cgg
