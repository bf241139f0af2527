#include "fano/fano_core.hpp"

#include <algorithm>
#include <sstream>

namespace fano {

std::vector<Point> PointSet::points() const {
    std::vector<Point> out;
    out.reserve(size());
    for (unsigned i = 1; i < 8; ++i)
        if ((mask >> i) & 1u) out.push_back(Point(i));
    return out;
}

std::string to_string(PointSet s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (Point p : s.points()) {
        if (!first) os << ',';
        os << static_cast<int>(p.index);
        first = false;
    }
    os << '}';
    return os.str();
}

Line line_of_form(LinearForm f) {
    assert(!f.is_zero());
    return Line{f.kernel_in_plane(), f};
}

Line line_through(Point p, Point q) {
    if (p == q)
        throw DegenerateInputError("no unique line through equal points " + std::to_string(p.index));
    // The form vanishing on both p and q is unique among the 7 nonzero masks.
    for (unsigned m = 1; m < 8; ++m) {
        LinearForm f(m);
        if (f(p) == 0 && f(q) == 0) return line_of_form(f);
    }
    assert(false && "two distinct nonzero points always span a line");
    return {};
}

const std::array<Line, 7>& all_lines() {
    static const std::array<Line, 7> lines = [] {
        std::array<Line, 7> out{};
        for (unsigned m = 1; m < 8; ++m) out[m - 1] = line_of_form(LinearForm(m));
        return out;
    }();
    return lines;
}

Triangle orthodata(PointSet three_points) {
    if (three_points.size() != 3)
        throw NotATriangleError("expected 3 points, got " + to_string(three_points));
    CubePoint s = three_points.sum();
    if (s.is_zero())
        throw NotATriangleError("collinear points " + to_string(three_points));
    Point ortho(s);

    auto pts = three_points.points();
    PointSet ortholine_members{Point(add(pts[0], pts[1])), Point(add(pts[1], pts[2])),
                               Point(add(pts[2], pts[0]))};
    assert(is_line_set(ortholine_members));
    Line ortholine = line_through(Point(add(pts[0], pts[1])), Point(add(pts[1], pts[2])));
    assert(ortholine.members == ortholine_members);
    return Triangle{three_points, ortho, ortholine};
}

Quadrilateral complement_quadrilateral(const Line& l) {
    return Quadrilateral{complement(l.members), l};
}

Quadrilateral make_quadrilateral(PointSet four_points) {
    if (four_points.size() != 4)
        throw GeometryError("expected 4 points, got " + to_string(four_points));
    PointSet rest = complement(four_points);
    if (!is_line_set(rest))
        throw GeometryError(to_string(four_points) + " has three collinear points");
    auto pts = rest.points();
    return Quadrilateral{four_points, line_through(pts[0], pts[1])};
}

const std::array<Quadrilateral, 7>& all_quadrilaterals() {
    static const std::array<Quadrilateral, 7> quads = [] {
        std::array<Quadrilateral, 7> out{};
        for (unsigned i = 0; i < 7; ++i) out[i] = complement_quadrilateral(all_lines()[i]);
        return out;
    }();
    return quads;
}

std::vector<Triangle> all_triangles() {
    std::vector<Triangle> out;
    out.reserve(28);
    for (unsigned m = 0; m < 256; m += 2) {
        PointSet s(static_cast<std::uint8_t>(m));
        if (s.size() == 3 && !s.sum().is_zero()) out.push_back(orthodata(s));
    }
    return out;
}

namespace {

LawCheck check_l1() {
    // Triangle plus its orthopoint is a quadrilateral.
    for (const Triangle& t : all_triangles()) {
        PointSet q = t.members.with(t.orthopoint);
        if (q.size() != 4 || !is_line_set(complement(q)))
            return {"L1", false, to_string(t.members)};
    }
    return {"L1", true, {}};
}

LawCheck check_l2() {
    // Orthopoint, ortholine and triangle partition the plane.
    for (const Triangle& t : all_triangles()) {
        PointSet pieces[3] = {PointSet{t.orthopoint}, t.ortholine.members, t.members};
        unsigned total = pieces[0].size() + pieces[1].size() + pieces[2].size();
        PointSet u = pieces[0] | pieces[1] | pieces[2];
        if (total != 7 || u != full_plane())
            return {"L2", false, to_string(t.members)};
    }
    return {"L2", true, {}};
}

LawCheck check_l3() {
    // Any partition of F into a point, a line and a triangle is the
    // orthodata partition of that triangle.
    for (Point p : full_plane().points()) {
        for (const Line& l : all_lines()) {
            if (l.members.contains(p)) continue;
            PointSet rest = complement(l.members.with(p));
            if (rest.size() != 3 || rest.sum().is_zero())
                return {"L3", false, "point " + std::to_string(p.index) + ", line " + to_string(l.members)};
            Triangle t = orthodata(rest);
            if (t.orthopoint != p || t.ortholine.members != l.members)
                return {"L3", false, "point " + std::to_string(p.index) + ", line " + to_string(l.members)};
        }
    }
    return {"L3", true, {}};
}

LawCheck check_l4() {
    const auto& quads = all_quadrilaterals();
    for (unsigned i = 0; i < quads.size(); ++i)
        for (unsigned j = i + 1; j < quads.size(); ++j)
            if ((quads[i].members & quads[j].members).size() != 2)
                return {"L4", false, to_string(quads[i].members) + " and " + to_string(quads[j].members)};
    return {"L4", true, {}};
}

LawCheck check_l5() {
    // Union of three distinct lines: F when concurrent, point complement when not.
    const auto& lines = all_lines();
    for (unsigned i = 0; i < 7; ++i)
        for (unsigned j = i + 1; j < 7; ++j)
            for (unsigned k = j + 1; k < 7; ++k) {
                PointSet u = lines[i].members | lines[j].members | lines[k].members;
                bool concurrent = !(lines[i].members & lines[j].members & lines[k].members).empty();
                bool ok = concurrent ? (u == full_plane()) : (u.size() == 6);
                if (!ok)
                    return {"L5", false,
                            to_string(lines[i].members) + " " + to_string(lines[j].members) + " " +
                                to_string(lines[k].members)};
            }
    return {"L5", true, {}};
}

LawCheck check_l6() {
    for (Point p : full_plane().points())
        for (Point q : full_plane().points()) {
            if (q.index <= p.index) continue;
            unsigned avoiding = 0;
            for (const Line& l : all_lines())
                if (!l.members.contains(p) && !l.members.contains(q)) ++avoiding;
            if (avoiding != 2)
                return {"L6", false, "points " + std::to_string(p.index) + "," + std::to_string(q.index)};
        }
    return {"L6", true, {}};
}

LawCheck check_l7() {
    for (const Quadrilateral& q : all_quadrilaterals())
        if (!q.members.sum().is_zero()) return {"L7", false, to_string(q.members)};
    return {"L7", true, {}};
}

} // namespace

LawReport check_incidence_laws() {
    return LawReport{{check_l1(), check_l2(), check_l3(), check_l4(), check_l5(), check_l6(), check_l7()}};
}

} // namespace fano
