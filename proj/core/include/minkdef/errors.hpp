#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace minkdef {

/// Base class for all workbench errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct ContextMismatch : Error {
    ContextMismatch() : Error("field elements belong to different contexts") {}
};

struct NegativeRadicand : Error {
    explicit NegativeRadicand(const std::string& rad)
        : Error("square root of negative element " + rad) {}
};

/// Thrown by operations that need a square root the current field does not
/// contain. `radicands` holds printable literals of every blocking radicand
/// so the caller can restart in a suitable quadratic extension.
struct NotASquareError : Error {
    std::vector<std::string> radicands;
    explicit NotASquareError(std::vector<std::string> rads)
        : Error("required square root not in field: " + join(rads)),
          radicands(std::move(rads)) {}

  private:
    static std::string join(const std::vector<std::string>& rads) {
        std::string out;
        for (size_t i = 0; i < rads.size(); ++i) {
            if (i) out += ", ";
            out += rads[i];
        }
        return out;
    }
};

struct DimensionMismatch : Error {
    DimensionMismatch() : Error("points have different dimensions or contexts") {}
};

struct WrongDimension : Error {
    explicit WrongDimension(const std::string& what) : Error(what) {}
};

struct SyntaxError : Error {
    size_t position;
    SyntaxError(const std::string& what, size_t pos)
        : Error(what + " at position " + std::to_string(pos)), position(pos) {}
};

struct UnknownName : Error {
    explicit UnknownName(const std::string& name) : Error("unknown name: " + name) {}
};

struct UnboundVariable : Error {
    explicit UnboundVariable(const std::string& var)
        : Error("unbound variable: " + var) {}
};

} // namespace minkdef
