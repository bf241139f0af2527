#include "fano/algebra.hpp"

#include <algorithm>

namespace fano {

namespace {

// Point triples/quadruples as raw indices, precomputed once for the hot paths.
struct Geometry {
    std::array<std::array<std::uint8_t, 3>, 7> line_triples{};  // ascending members per line
    std::array<std::array<std::uint8_t, 4>, 7> quad_points{};   // ascending members per quadrilateral
};

const Geometry& geometry() {
    static const Geometry g = [] {
        Geometry out{};
        for (unsigned i = 0; i < 7; ++i) {
            auto lp = all_lines()[i].members.points();
            for (unsigned k = 0; k < 3; ++k) out.line_triples[i][k] = lp[k].index;
            auto qp = all_quadrilaterals()[i].members.points();
            for (unsigned k = 0; k < 4; ++k) out.quad_points[i][k] = qp[k].index;
        }
        return out;
    }();
    return g;
}

constexpr unsigned form_bit(unsigned mask, unsigned p) {
    return static_cast<unsigned>(std::popcount(mask & p)) & 1u;
}

// The three rotation-inequivalent 4-cycles on four points.
constexpr std::array<std::array<int, 4>, 3> cycle_orders = {{{0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}}};

} // namespace

OctonionElement operator+(const OctonionElement& a, const OctonionElement& b) {
    OctonionElement out;
    for (unsigned i = 0; i < 8; ++i) out.coeff[i] = a.coeff[i] + b.coeff[i];
    return out;
}

OctonionElement operator-(const OctonionElement& a, const OctonionElement& b) {
    OctonionElement out;
    for (unsigned i = 0; i < 8; ++i) out.coeff[i] = a.coeff[i] - b.coeff[i];
    return out;
}

OctonionElement operator*(const Rational& s, const OctonionElement& a) {
    OctonionElement out;
    for (unsigned i = 0; i < 8; ++i) out.coeff[i] = s * a.coeff[i];
    return out;
}

AlgebraStructure make_algebra(Norm n, MultFactor f) {
    AlgebraStructure a;
    a.norm = n;
    a.factor = f;
    for (unsigned i = 0; i < 8; ++i) {
        a.table[0][i] = {static_cast<std::uint8_t>(i), 1};
        a.table[i][0] = {static_cast<std::uint8_t>(i), 1};
    }
    for (unsigned p = 1; p < 8; ++p) {
        a.table[p][p] = {0, static_cast<std::int8_t>(-sign_value(eval_norm(n, Point(p))))};
        for (unsigned q = 1; q < 8; ++q) {
            if (p == q) continue;
            a.table[p][q] = {static_cast<std::uint8_t>(p ^ q),
                             static_cast<std::int8_t>(sign_value(f.sign(Point(p), Point(q))))};
        }
    }
    return a;
}

OctonionElement multiply(const AlgebraStructure& a, const OctonionElement& z, const OctonionElement& w) {
    OctonionElement out;
    for (unsigned i = 0; i < 8; ++i) {
        if (sgn(z.coeff[i]) == 0) continue;
        for (unsigned j = 0; j < 8; ++j) {
            if (sgn(w.coeff[j]) == 0) continue;
            const auto& e = a.table[i][j];
            if (e.coeff > 0)
                out.coeff[e.target] += z.coeff[i] * w.coeff[j];
            else
                out.coeff[e.target] -= z.coeff[i] * w.coeff[j];
        }
    }
    return out;
}

Rational quad_form(const AlgebraStructure& a, const OctonionElement& z) {
    Rational total = z.coeff[0] * z.coeff[0];
    for (unsigned p = 1; p < 8; ++p) {
        if (sgn(z.coeff[p]) == 0) continue;
        Rational sq = z.coeff[p] * z.coeff[p];
        if (eval_norm(a.norm, Point(p)) == Sign::plus)
            total += sq;
        else
            total -= sq;
    }
    return total;
}

Rational compositor_direct(const AlgebraStructure& a, const OctonionElement& z, const OctonionElement& w) {
    return quad_form(a, multiply(a, z, w)) - quad_form(a, z) * quad_form(a, w);
}

Rational compositor_structured(const AlgebraStructure& a, const OctonionElement& z, const OctonionElement& w) {
    const Geometry& g = geometry();
    const unsigned nmask = a.norm.form.mask;
    Rational total = 0;

    // Quadrilateral part: all ordered 4-tuples (P,Q,R,S) spanning a
    // quadrilateral, summand N(P+Q) ε_PQ ε_RS λ^P μ^Q λ^R μ^S.
    for (const auto& quad : g.quad_points) {
        std::array<int, 4> perm = {0, 1, 2, 3};
        do {
            unsigned p = quad[perm[0]], q = quad[perm[1]], r = quad[perm[2]], s = quad[perm[3]];
            if (sgn(z.coeff[p]) == 0 || sgn(w.coeff[q]) == 0 || sgn(z.coeff[r]) == 0 || sgn(w.coeff[s]) == 0)
                continue;
            unsigned bit = form_bit(nmask, p ^ q) ^ a.factor.logbit(Point(p), Point(q)) ^
                           a.factor.logbit(Point(r), Point(s));
            Rational term = z.coeff[p] * w.coeff[q] * z.coeff[r] * w.coeff[s];
            if (bit)
                total -= term;
            else
                total += term;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    // Line part: all ordered triples (P,Q,R) spanning a line, summand
    // 2 N(R) ε_PQ λ^P μ^Q (λ^0 μ^R + λ^R μ^0).
    for (const auto& line : g.line_triples) {
        std::array<int, 3> perm = {0, 1, 2};
        do {
            unsigned p = line[perm[0]], q = line[perm[1]], r = line[perm[2]];
            if (sgn(z.coeff[p]) == 0 || sgn(w.coeff[q]) == 0) continue;
            Rational mixed = z.coeff[0] * w.coeff[r] + z.coeff[r] * w.coeff[0];
            if (sgn(mixed) == 0) continue;
            unsigned bit = form_bit(nmask, r) ^ a.factor.logbit(Point(p), Point(q));
            Rational term = 2 * z.coeff[p] * w.coeff[q] * mixed;
            if (bit)
                total -= term;
            else
                total += term;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    return total;
}

ConditionReport structural_conditions(Norm n, MultFactor f) {
    const Geometry& g = geometry();
    const unsigned nmask = n.form.mask;
    ConditionReport report;

    // Line condition over all 6 ordered traversals of each line.  In log
    // form, with P+R the line's third point Q: n(Q) + lPQ + lQR = 0.
    for (const auto& line : g.line_triples) {
        std::array<int, 3> perm = {0, 1, 2};
        do {
            unsigned p = line[perm[0]], q = line[perm[1]], r = line[perm[2]];
            unsigned bit = form_bit(nmask, p ^ r) ^ f.logbit(Point(p), Point(q)) ^ f.logbit(Point(q), Point(r));
            if (bit != 0) {
                report.lines_ok = false;
                report.line_witness = {Point(p), Point(q), Point(r)};
                break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!report.lines_ok) break;
    }

    // Quadrilateral condition over the 3 distinct 4-cycles of each
    // quadrilateral: n(P+Q) + n(P+S) + lPQ + lQR + lRS + lSP = 1.
    for (const auto& quad : g.quad_points) {
        for (const auto& order : cycle_orders) {
            unsigned p = quad[order[0]], q = quad[order[1]], r = quad[order[2]], s = quad[order[3]];
            unsigned bit = form_bit(nmask, p ^ q) ^ form_bit(nmask, p ^ s) ^ f.logbit(Point(p), Point(q)) ^
                           f.logbit(Point(q), Point(r)) ^ f.logbit(Point(r), Point(s)) ^
                           f.logbit(Point(s), Point(p));
            if (bit != 1u) {
                report.quads_ok = false;
                report.quad_witness = {Point(p), Point(q), Point(r), Point(s)};
                break;
            }
        }
        if (!report.quads_ok) break;
    }

    return report;
}

bool is_composition(Norm n, MultFactor f) { return structural_conditions(n, f).all_ok(); }

ClassTag classify(Norm n, MultFactor f) {
    if (!is_composition(n, f)) return {AlgebraClass::not_composition, std::nullopt};

    if (n.form.is_zero()) {
        bool futures_lines = true, pasts_lines = true;
        for (Point p : all_points()) {
            FuturePast fp = future_past(f, p);
            futures_lines = futures_lines && is_line_set(fp.future);
            pasts_lines = pasts_lines && is_line_set(fp.past);
        }
        if (futures_lines == pasts_lines)
            throw ClassificationContradictionError("trivial-norm composition factor " +
                                                   std::to_string(f.encoding()));
        return {futures_lines ? AlgebraClass::plus_type : AlgebraClass::minus_type, std::nullopt};
    }

    std::optional<Point> full_future, full_past;
    unsigned future_hits = 0, past_hits = 0;
    for (Point p : all_points()) {
        FuturePast fp = future_past(f, p);
        if (fp.future.size() == 6) {
            full_future = p;
            ++future_hits;
        }
        if (fp.past.size() == 6) {
            full_past = p;
            ++past_hits;
        }
    }
    if (future_hits == 1 && past_hits == 0) return {AlgebraClass::plus_type, full_future};
    if (past_hits == 1 && future_hits == 0) return {AlgebraClass::minus_type, full_past};
    throw ClassificationContradictionError("split composition factor " + std::to_string(f.encoding()) +
                                           " under norm mask " + std::to_string(n.form.mask));
}

std::optional<OrientedTriangle> oriented_triangle(MultFactor f, const Quadrilateral& quad) {
    auto pts = quad.members.points();
    assert(pts.size() == 4);

    std::optional<OrientedTriangle> found;
    for (unsigned skip = 0; skip < 4; ++skip) {
        Point a = pts[(skip + 1) % 4], b = pts[(skip + 2) % 4], c = pts[(skip + 3) % 4];
        // {a,b,c} is cyclic iff the three signs around it agree.
        Sign ab = f.sign(a, b), bc = f.sign(b, c), ca = f.sign(c, a);
        if (ab == bc && bc == ca) {
            if (found)
                throw AmbiguousOrientationError("two oriented triangles in " + to_string(quad.members) +
                                                " (factor " + std::to_string(f.encoding()) + ")");
            found = OrientedTriangle{orthodata(PointSet{a, b, c}), pts[skip]};
        }
    }
    return found;
}

} // namespace fano
