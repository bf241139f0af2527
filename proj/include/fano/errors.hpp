#ifndef FANO_ERRORS_HPP
#define FANO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fano {

// Base class for every error this library throws on bad input.
// Internal invariant breakage is handled with assert(), not exceptions.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two equal points where a pair of distinct ones is required.
struct DegenerateInputError : Error {
    using Error::Error;
};

// Three collinear points passed where a triangle is required.
struct NotATriangleError : Error {
    using Error::Error;
};

// Arrow list leaves some unordered pair undirected.
struct MissingPairError : Error {
    using Error::Error;
};

// Arrow list directs some unordered pair both ways.
struct ConflictingPairError : Error {
    using Error::Error;
};

// Operation requires a composition algebra and the input is not one.
struct NotCompositionError : Error {
    using Error::Error;
};

// More than one cyclically oriented triangle inside a quadrilateral.
struct AmbiguousOrientationError : Error {
    using Error::Error;
};

// A composition algebra matched neither the plus nor the minus shape.
// Must never fire on a correct build; kept as a live oracle.
struct ClassificationContradictionError : Error {
    using Error::Error;
};

// Split composition algebra without its unique distinguished point.
// Like ClassificationContradictionError, a should-never-happen oracle.
struct NoSuchPointError : Error {
    using Error::Error;
};

// Seven triangles that do not satisfy both Fano axioms.
struct NotAFanoFamilyError : Error {
    using Error::Error;
};

// Malformed text input; carries a 1-based line number when known.
struct ParseError : Error {
    explicit ParseError(const std::string& what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_number(line) {}
    int line_number = 0;
};

// Well-formed text whose content is geometrically invalid
// (line system is not a Fano plane, bad arrow coverage, unknown norm line).
struct GeometryError : Error {
    using Error::Error;
};

} // namespace fano

#endif
