#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace kdefect {

/// Base type for everything this library throws.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input text could not be parsed. `line` is 1-based; 0 means the whole input.
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& msg)
        : Error(line_ > 0 ? "line " + std::to_string(line_) + ": " + msg : msg),
          line(line_) {}
};

/// A size guard was exceeded. `guard` names the limit that tripped.
struct GuardError : Error {
    std::string guard;
    GuardError(std::string guard_, const std::string& msg)
        : Error(msg + " (guard: " + guard_ + ")"), guard(std::move(guard_)) {}
};

/// Checked integer arithmetic left the representable range.
struct OverflowError : Error {
    explicit OverflowError(const std::string& op)
        : Error("integer overflow in " + op) {}
};

/// Two engines disagreed on the same quantity. Carries enough to re-run:
/// `graph` is edge-list text, values are rendered results.
struct EngineMismatch : Error {
    std::string graph;
    int k;
    std::string engine_a, engine_b;
    std::string value_a, value_b;

    EngineMismatch(std::string graph_, int k_,
                   std::string ea, std::string va,
                   std::string eb, std::string vb)
        : Error("engine mismatch at k=" + std::to_string(k_) + ": " + ea + " -> " + va +
                " but " + eb + " -> " + vb + "\ngraph:\n" + graph_),
          graph(std::move(graph_)), k(k_),
          engine_a(std::move(ea)), engine_b(std::move(eb)),
          value_a(std::move(va)), value_b(std::move(vb)) {}
};

} // namespace kdefect
