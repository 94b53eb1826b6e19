#pragma once

#include <stdexcept>
#include <string>

namespace srbetti {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A face or generator references a vertex outside 1..n.
struct InvalidVertex : Error {
    using Error::Error;
};

// Ideals with linear generators (missing singleton faces) sit outside the
// complex/ideal bijection and are rejected.
struct LinearGeneratorUnsupported : Error {
    using Error::Error;
};

struct DimensionError : Error {
    using Error::Error;
};

struct VoidComplexError : Error {
    using Error::Error;
};

struct ComplexTooLarge : Error {
    using Error::Error;
};

struct AmbientMismatch : Error {
    using Error::Error;
};

struct NotAnFVector : Error {
    using Error::Error;
};

struct NotSameHilbertFunction : Error {
    using Error::Error;
};

struct InvalidParameter : Error {
    using Error::Error;
};

} // namespace srbetti
