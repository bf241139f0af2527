#ifndef FANO_FANO_CORE_HPP
#define FANO_FANO_CORE_HPP

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

#include "fano/errors.hpp"

// The seven-point plane in xor coordinates: points are the indices 1..7 read
// as 3-bit vectors over GF(2), the zero vector is adjoined to form the cube,
// and {a, b, a^b} are exactly the lines.  Everything downstream (norms,
// multiplication factors, scans) leans on this coordinatization.

namespace fano {

// Element of the cube: index 0..7, addition is bitwise xor.
struct CubePoint {
    std::uint8_t index = 0;

    constexpr CubePoint() = default;
    constexpr explicit CubePoint(unsigned i) : index(static_cast<std::uint8_t>(i)) { assert(i < 8); }

    constexpr bool is_zero() const { return index == 0; }

    friend constexpr bool operator==(CubePoint, CubePoint) = default;
    friend constexpr auto operator<=>(CubePoint, CubePoint) = default;
};

constexpr CubePoint add(CubePoint p, CubePoint q) { return CubePoint(p.index ^ q.index); }
constexpr CubePoint operator+(CubePoint p, CubePoint q) { return add(p, q); }

// Plane point: a nonzero cube point.
struct Point {
    std::uint8_t index = 1;

    constexpr Point() = default;
    constexpr explicit Point(unsigned i) : index(static_cast<std::uint8_t>(i)) { assert(i >= 1 && i < 8); }
    constexpr explicit Point(CubePoint p) : Point(p.index) {}

    constexpr operator CubePoint() const { return CubePoint(index); }

    friend constexpr bool operator==(Point, Point) = default;
    friend constexpr auto operator<=>(Point, Point) = default;
};

constexpr unsigned point_count = 7;

// All of F in index order.
constexpr std::array<Point, 7> all_points() {
    return {Point(1), Point(2), Point(3), Point(4), Point(5), Point(6), Point(7)};
}

// Subset of the plane as a 7-bit characteristic mask (bit p <-> point p).
// Equality, intersection and complement are mask arithmetic.
struct PointSet {
    std::uint8_t mask = 0;

    constexpr PointSet() = default;
    constexpr explicit PointSet(std::uint8_t m) : mask(m) { assert((m & 1u) == 0); }
    constexpr PointSet(std::initializer_list<Point> pts) {
        for (Point p : pts) mask |= static_cast<std::uint8_t>(1u << p.index);
    }

    constexpr bool contains(Point p) const { return (mask >> p.index) & 1u; }
    constexpr unsigned size() const { return static_cast<unsigned>(std::popcount(mask)); }
    constexpr bool empty() const { return mask == 0; }

    constexpr PointSet with(Point p) const { return PointSet(static_cast<std::uint8_t>(mask | (1u << p.index))); }
    constexpr PointSet without(Point p) const { return PointSet(static_cast<std::uint8_t>(mask & ~(1u << p.index))); }

    // xor of all members; a 3-set is a line iff this is zero.
    constexpr CubePoint sum() const {
        unsigned s = 0;
        for (unsigned i = 1; i < 8; ++i)
            if ((mask >> i) & 1u) s ^= i;
        return CubePoint(s);
    }

    std::vector<Point> points() const;  // ascending index order

    friend constexpr bool operator==(PointSet, PointSet) = default;
    friend constexpr auto operator<=>(PointSet, PointSet) = default;
};

constexpr PointSet operator&(PointSet a, PointSet b) { return PointSet(static_cast<std::uint8_t>(a.mask & b.mask)); }
constexpr PointSet operator|(PointSet a, PointSet b) { return PointSet(static_cast<std::uint8_t>(a.mask | b.mask)); }
constexpr PointSet operator^(PointSet a, PointSet b) { return PointSet(static_cast<std::uint8_t>(a.mask ^ b.mask)); }

// The whole plane.
constexpr PointSet full_plane() { return PointSet(std::uint8_t{0xFE}); }
constexpr PointSet complement(PointSet s) { return full_plane() ^ s; }

std::string to_string(PointSet s);  // "{1,2,3}"

// Dual-space element: value at P is the parity of mask & P, in {0,1}.
struct LinearForm {
    std::uint8_t mask = 0;  // 0..7

    constexpr LinearForm() = default;
    constexpr explicit LinearForm(unsigned m) : mask(static_cast<std::uint8_t>(m)) { assert(m < 8); }

    constexpr unsigned operator()(CubePoint p) const {
        return static_cast<unsigned>(std::popcount(static_cast<unsigned>(mask & p.index))) & 1u;
    }
    constexpr bool is_zero() const { return mask == 0; }

    // {P in F : form(P) = 0}; the whole plane for the zero form, a line otherwise.
    constexpr PointSet kernel_in_plane() const {
        std::uint8_t m = 0;
        for (unsigned i = 1; i < 8; ++i)
            if ((std::popcount(static_cast<unsigned>(mask & i)) & 1) == 0) m |= static_cast<std::uint8_t>(1u << i);
        return PointSet(m);
    }

    friend constexpr bool operator==(LinearForm, LinearForm) = default;
    friend constexpr auto operator<=>(LinearForm, LinearForm) = default;
};

constexpr LinearForm operator+(LinearForm a, LinearForm b) { return LinearForm(a.mask ^ b.mask); }

// Line: three points summing to zero, paired with the nonzero form whose
// kernel they are.
struct Line {
    PointSet members;
    LinearForm form;

    friend constexpr bool operator==(const Line&, const Line&) = default;
    friend constexpr auto operator<=>(const Line&, const Line&) = default;
};

struct Triangle {
    PointSet members;    // three points, not a line
    Point orthopoint;    // P+Q+R
    Line ortholine;      // {P+Q, Q+R, R+P}

    friend constexpr bool operator==(const Triangle&, const Triangle&) = default;
};

struct Quadrilateral {
    PointSet members;       // four points, no three collinear
    Line complement_line;   // F \ members

    friend constexpr bool operator==(const Quadrilateral&, const Quadrilateral&) = default;
};

// Unique line through two distinct points. Throws DegenerateInputError on P == Q.
Line line_through(Point p, Point q);

// Line presented as the kernel of a nonzero form.
Line line_of_form(LinearForm f);

// The seven lines, ordered by form mask 1..7.
const std::array<Line, 7>& all_lines();

// Is this 3-subset closed under addition?
constexpr bool is_line_set(PointSet s) { return s.size() == 3 && s.sum().is_zero(); }

// Orthopoint and ortholine of a non-collinear 3-set.
// Throws NotATriangleError when the points are collinear.
Triangle orthodata(PointSet three_points);

Quadrilateral complement_quadrilateral(const Line& l);

// Quadrilateral from an explicit 4-set; validates no three collinear.
Quadrilateral make_quadrilateral(PointSet four_points);

// The seven quadrilaterals, complements of all_lines() in order.
const std::array<Quadrilateral, 7>& all_quadrilaterals();

// All 28 triangles (the 35 3-subsets minus the 7 lines), ascending by mask.
std::vector<Triangle> all_triangles();

// Exhaustive verification of the seven incidence laws.  A failed law is
// reported with a witness, never thrown.
struct LawCheck {
    std::string law;       // "L1".."L7"
    bool passed = false;
    std::string witness;   // empty when passed
};

struct LawReport {
    std::array<LawCheck, 7> laws;
    bool all_passed() const {
        for (const auto& l : laws)
            if (!l.passed) return false;
        return true;
    }
};

LawReport check_incidence_laws();

} // namespace fano

#endif
