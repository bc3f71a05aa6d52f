#pragma once

#include <stdexcept>
#include <string>

namespace sharp_hilbert {

// Argument outside the mathematical domain of an operation.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Inverse spectral transform produced a residual imaginary part above
// tolerance; signals broken conjugate symmetry upstream.
struct NonRealResult : std::runtime_error {
    explicit NonRealResult(const std::string& what) : std::runtime_error(what) {}
};

// Adaptive quadrature could not reach the requested absolute tolerance.
struct QuadratureFailure : std::runtime_error {
    explicit QuadratureFailure(const std::string& what) : std::runtime_error(what) {}
};

// Scalar optimizer could not bracket or refine a maximum.
struct OptimizationFailure : std::runtime_error {
    explicit OptimizationFailure(const std::string& what) : std::runtime_error(what) {}
};

// Invalid simulation or command configuration.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file; carries a 1-based line number when known.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, long line = -1)
        : std::runtime_error(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what),
          line_number(line) {}
    long line_number;
};

}  // namespace sharp_hilbert
