#ifndef FANO_ORIENTED_HPP
#define FANO_ORIENTED_HPP

#include <optional>
#include <vector>

#include "fano/algebra.hpp"

// Logarithms of composition-grade multiplication factors: assignments
// P -> alpha_P of dual-space elements subject to two parity axioms,
//   (i)  alpha_P(P) + n(P) = 1,
//   (ii) alpha_P(Q) + alpha_Q(P) = 1 for P != Q,
// where n is the ambient norm form (zero for plain oriented maps).

namespace fano {

struct OrientedMap {
    LinearForm norm_form;               // n
    std::array<LinearForm, 8> alpha{};  // alpha[p] for p in 1..7; slot 0 unused

    friend bool operator==(const OrientedMap&, const OrientedMap&) = default;
};

// First axiom violation found, if any.
struct OrientedViolation {
    enum class Axiom { self_value, pair_value } axiom;
    Point p{1}, q{1};  // q == p for self_value
};

std::optional<OrientedViolation> validate_oriented(const OrientedMap& m);
inline bool is_oriented(const OrientedMap& m) { return !validate_oriented(m).has_value(); }

// sign * e^alpha: the factor with sign(P,Q) = sign * sign_exp(alpha_P(Q)).
MultFactor exp_map(const OrientedMap& m, Sign sign);

struct LogResult {
    OrientedMap map;
    Sign sign = Sign::plus;
};

// Unique (map, sign) with exp_map(map, sign) == f, for a composition
// structure (e^n, f).  Throws NotCompositionError otherwise.
LogResult log_map(MultFactor f, LinearForm n);

// alpha'_P(Q) = alpha_P(Q) + shift(P) shift(Q); maps maps for norm form m
// bijectively onto maps for m + shift and is an involution for fixed shift.
OrientedMap shift_norm(const OrientedMap& m, LinearForm shift);

// Symmetric bilinear form on the cube with zero diagonal; three free bits,
// the values on the basis pairs (1,2), (1,4), (2,4).
struct AlternatingForm {
    std::uint8_t bits = 0;  // bit0 = value(1,2), bit1 = value(1,4), bit2 = value(2,4)

    static constexpr AlternatingForm from_index(unsigned i) {
        assert(i < 8);
        return AlternatingForm{static_cast<std::uint8_t>(i)};
    }
    constexpr unsigned index() const { return bits; }

    constexpr unsigned operator()(CubePoint a, CubePoint b) const {
        unsigned p1 = a.index & 1u, p2 = (a.index >> 1) & 1u, p4 = (a.index >> 2) & 1u;
        unsigned q1 = b.index & 1u, q2 = (b.index >> 1) & 1u, q4 = (b.index >> 2) & 1u;
        unsigned v = (bits & 1u) & ((p1 & q2) ^ (p2 & q1));
        v ^= ((bits >> 1) & 1u) & ((p1 & q4) ^ (p4 & q1));
        v ^= ((bits >> 2) & 1u) & ((p2 & q4) ^ (p4 & q2));
        return v;
    }

    friend constexpr bool operator==(AlternatingForm, AlternatingForm) = default;
};

// Difference of two maps with the same norm form, as an alternating form.
AlternatingForm affine_diff(const OrientedMap& a, const OrientedMap& b);

// Translate a map by an alternating form: beta_P(Q) = alpha_P(Q) + d(P,Q).
OrientedMap affine_translate(const OrientedMap& m, AlternatingForm d);

// All maps for the given norm form: a base point found by backtracking,
// plus its eight alternating-form translates, sorted canonically.
std::vector<OrientedMap> enumerate_maps(LinearForm n);

// Seven triangles satisfying both Fano axioms.
struct TrianglePlane {
    std::array<Triangle, 7> triangles;
};

// For a plain oriented map, the triangle F \ {P} \ Ker(alpha_P) per point,
// ordered by orthopoint index.
TrianglePlane triangle_plane(const OrientedMap& m);

// Inverse of triangle_plane: the unique plain map whose triangles these are.
// Throws NotAFanoFamilyError when either Fano axiom fails.
OrientedMap map_from_triangle_plane(const TrianglePlane& t);

// Checks the two Fano axioms on a 7-triangle family; returns a description
// of the first violation, or nullopt.
std::optional<std::string> fano_family_violation(const TrianglePlane& t);

// Sign twist exchanging composition structures across norms: the factor with
// sign'(P,Q) = sign_exp(shift(P) shift(Q)) * sign(P,Q).  An involution for
// fixed shift.
MultFactor bridge_factor(MultFactor f, LinearForm shift);

// For a split composition structure (e^n, f), n nonzero: the unique point
// whose future or past is everything else.  Throws NotCompositionError if
// the structure is not a composition algebra.
Point distinguished_point(MultFactor f, LinearForm n);

} // namespace fano

#endif
