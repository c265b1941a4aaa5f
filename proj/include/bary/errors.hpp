#pragma once

#include <stdexcept>
#include <string>

namespace bary {

/// Base class for all geometric precondition violations.
struct GeometryError : std::runtime_error {
    explicit GeometryError(const std::string& what) : std::runtime_error(what) {}
};

/// Side lengths that are nonpositive or violate the strict triangle inequality.
struct DegenerateTriangle : GeometryError {
    explicit DegenerateTriangle(const std::string& what) : GeometryError(what) {}
};

/// A finite/infinite operand mix that makes a point difference ill-defined.
struct InfiniteMisuse : GeometryError {
    explicit InfiniteMisuse(const std::string& what) : GeometryError(what) {}
};

/// A direction argument collapsed to the zero vector.
struct ZeroVector : GeometryError {
    explicit ZeroVector(const std::string& what) : GeometryError(what) {}
};

struct IdenticalPoints : GeometryError {
    explicit IdenticalPoints(const std::string& what) : GeometryError(what) {}
};

struct IdenticalLines : GeometryError {
    explicit IdenticalLines(const std::string& what) : GeometryError(what) {}
};

struct ConcentricCircles : GeometryError {
    explicit ConcentricCircles(const std::string& what) : GeometryError(what) {}
};

struct UnknownTheorem : GeometryError {
    explicit UnknownTheorem(const std::string& what) : GeometryError(what) {}
};

struct DegenerateEmbedding : GeometryError {
    explicit DegenerateEmbedding(const std::string& what) : GeometryError(what) {}
};

}  // namespace bary
