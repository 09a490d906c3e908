#pragma once

#include <stdexcept>
#include <string>

namespace dpe {

/// Malformed textual input (edge list, graph6, CLI family spec).
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    /// 1-based line number, or 0 when the error is not tied to a line.
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// A configured size limit (subset enumeration, permutation search, sweep order) would be exceeded.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A distance-based quantity was requested for a disconnected graph.
class Disconnected : public std::runtime_error {
public:
    Disconnected(int reachable, int unreachable)
        : std::runtime_error("graph is disconnected: vertex " + std::to_string(unreachable) +
                             " is not reachable from vertex " + std::to_string(reachable)),
          reachable_(reachable), unreachable_(unreachable) {}

    int reachable() const noexcept { return reachable_; }
    int unreachable() const noexcept { return unreachable_; }

private:
    int reachable_;
    int unreachable_;
};

/// The eigensolver hit its sweep cap or a result failed its residual contract.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace dpe
