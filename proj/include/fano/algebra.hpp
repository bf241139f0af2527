#ifndef FANO_ALGEBRA_HPP
#define FANO_ALGEBRA_HPP

#include <gmpxx.h>

#include <array>
#include <optional>

#include "fano/structures.hpp"

// The eight-dimensional algebra attached to a norm and multiplication factor:
// basis products e_P e_Q = sign(P,Q) e_{P+Q}, e_P e_P = -N(P) e_0, with e_0
// the unit.  Scalars are exact rationals so that compositor identities are
// decidable with zero tolerance.

namespace fano {

using Rational = mpq_class;

struct OctonionElement {
    // coeff[i] multiplies e_i; coeff[0] is the unit coordinate.
    std::array<Rational, 8> coeff{};

    static OctonionElement zero() { return {}; }
    static OctonionElement unit() { return basis(CubePoint(0)); }
    static OctonionElement basis(CubePoint p) {
        OctonionElement e;
        e.coeff[p.index] = 1;
        return e;
    }

    bool is_zero() const {
        for (const auto& c : coeff)
            if (sgn(c) != 0) return false;
        return true;
    }

    friend bool operator==(const OctonionElement&, const OctonionElement&) = default;
};

OctonionElement operator+(const OctonionElement& a, const OctonionElement& b);
OctonionElement operator-(const OctonionElement& a, const OctonionElement& b);
OctonionElement operator*(const Rational& s, const OctonionElement& a);

struct AlgebraStructure {
    Norm norm;
    MultFactor factor;

    // Dense basis table: e_i e_j = table[i][j].coeff * e_{table[i][j].target}.
    struct TableEntry {
        std::uint8_t target = 0;
        std::int8_t coeff = 1;  // +1 or -1
    };
    std::array<std::array<TableEntry, 8>, 8> table{};
};

AlgebraStructure make_algebra(Norm n, MultFactor f);

// Bilinear extension of the basis table.
OctonionElement multiply(const AlgebraStructure& a, const OctonionElement& z, const OctonionElement& w);

// (λ^0)^2 + Σ_P (λ^P)^2 N(P).
Rational quad_form(const AlgebraStructure& a, const OctonionElement& z);

// N(Z W) - N(Z) N(W), computed through multiply and quad_form.
Rational compositor_direct(const AlgebraStructure& a, const OctonionElement& z, const OctonionElement& w);

// The same quantity as a sum over ordered line triples and ordered
// quadrilateral 4-tuples; an independent route kept as the oracle for
// compositor_direct.
Rational compositor_structured(const AlgebraStructure& a, const OctonionElement& z, const OctonionElement& w);

// The two composition conditions, checked exhaustively: every ordered line
// traversal (P,Q,R) must satisfy N(P+R) ε_PQ ε_QR = +1, and every 4-cycle
// (P,Q,R,S) on a quadrilateral must satisfy N(P+Q) ε_PQ ε_QR ε_RS ε_SP N(P+S) = -1.
// Witnesses name the first failing tuple.
struct ConditionReport {
    bool lines_ok = true;
    bool quads_ok = true;
    std::optional<std::array<Point, 3>> line_witness;
    std::optional<std::array<Point, 4>> quad_witness;

    bool all_ok() const { return lines_ok && quads_ok; }
};

ConditionReport structural_conditions(Norm n, MultFactor f);
inline ConditionReport structural_conditions(const AlgebraStructure& a) {
    return structural_conditions(a.norm, a.factor);
}

bool is_composition(Norm n, MultFactor f);
inline bool is_composition(const AlgebraStructure& a) { return is_composition(a.norm, a.factor); }

enum class AlgebraClass { not_composition, plus_type, minus_type };

struct ClassTag {
    AlgebraClass kind = AlgebraClass::not_composition;
    // For split (nonzero-norm) composition algebras: the unique point whose
    // future (plus) or past (minus) is everything else.
    std::optional<Point> distinguished;
};

// Classifies a structure.  For the trivial norm, plus means every future is
// a line and minus means every past is.  For a nonzero norm, plus/minus
// means a unique point has full future/past.  Throws
// ClassificationContradictionError if a composition algebra fits neither
// shape (must never happen; kept as a live oracle).
ClassTag classify(Norm n, MultFactor f);
inline ClassTag classify(const AlgebraStructure& a) { return classify(a.norm, a.factor); }

// The unique cyclically oriented triangle inside a quadrilateral, together
// with the quadrilateral's fourth point.  nullopt when no triangle is
// oriented; AmbiguousOrientationError when more than one is (both cases
// only occur for non-composition factors).
struct OrientedTriangle {
    Triangle triangle;
    Point distinguished;
};

std::optional<OrientedTriangle> oriented_triangle(MultFactor f, const Quadrilateral& q);

} // namespace fano

#endif
