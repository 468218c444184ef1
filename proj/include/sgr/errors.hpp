#pragma once

#include <stdexcept>
#include <string>

namespace sgr {

// Base for all domain errors. The CLI maps these to exit code 2.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct FieldMismatch : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct ContextMismatch : Error { using Error::Error; };
struct NotPrime : Error { using Error::Error; };
struct OrderBoundExceeded : Error { using Error::Error; };
struct DimensionBoundExceeded : Error { using Error::Error; };
struct DepthBoundExceeded : Error { using Error::Error; };
struct LevelOutOfRange : Error { using Error::Error; };
struct NotNormal : Error { using Error::Error; };
struct NotDescending : Error { using Error::Error; };
struct GeneratorBelowBaseLevel : Error { using Error::Error; };
struct ZeroInput : Error { using Error::Error; };
struct SchemaError : Error { using Error::Error; };
struct HashMismatch : Error { using Error::Error; };
struct VerificationFailed : Error { using Error::Error; };

// Violated internal invariant; always a bug, never an input problem.
struct InternalError : Error { using Error::Error; };

}  // namespace sgr
