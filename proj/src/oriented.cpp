#include "fano/oriented.hpp"

#include <algorithm>

namespace fano {

namespace {

// Mask of the unique linear form taking value v[i] at cube point i, or
// nullopt when v is not linear.  v[0] must be 0.
std::optional<LinearForm> form_from_values(const std::array<unsigned, 8>& v) {
    unsigned mask = (v[1] & 1u) | ((v[2] & 1u) << 1) | ((v[4] & 1u) << 2);
    LinearForm f(mask);
    for (unsigned i = 0; i < 8; ++i)
        if (f(CubePoint(i)) != (v[i] & 1u)) return std::nullopt;
    return f;
}

} // namespace

std::optional<OrientedViolation> validate_oriented(const OrientedMap& m) {
    for (Point p : all_points()) {
        if ((m.alpha[p.index](p) ^ m.norm_form(p)) != 1u)
            return OrientedViolation{OrientedViolation::Axiom::self_value, p, p};
        for (Point q : all_points()) {
            if (q.index <= p.index) continue;
            if ((m.alpha[p.index](q) ^ m.alpha[q.index](p)) != 1u)
                return OrientedViolation{OrientedViolation::Axiom::pair_value, p, q};
        }
    }
    return std::nullopt;
}

MultFactor exp_map(const OrientedMap& m, Sign sign) {
    std::uint32_t enc = 0;
    unsigned sign_bit = sign_log(sign);
    for (Point p : all_points())
        for (Point q : all_points()) {
            if (p.index >= q.index) continue;
            if (m.alpha[p.index](q) ^ sign_bit) enc |= 1u << pair_index(p, q);
        }
    return MultFactor::from_encoding(enc);
}

LogResult log_map(MultFactor f, LinearForm n) {
    for (Sign sign : {Sign::plus, Sign::minus}) {
        OrientedMap m;
        m.norm_form = n;
        bool all_linear = true;
        unsigned sign_bit = sign_log(sign);
        for (Point p : all_points()) {
            std::array<unsigned, 8> values{};
            values[p.index] = 1u ^ n(p);  // forced by axiom (i)
            for (Point q : all_points())
                if (q != p) values[q.index] = f.logbit(p, q) ^ sign_bit;
            auto form = form_from_values(values);
            if (!form) {
                all_linear = false;
                break;
            }
            m.alpha[p.index] = *form;
        }
        if (all_linear) {
            assert(is_oriented(m));
            assert(exp_map(m, sign) == f);
            return {m, sign};
        }
    }
    throw NotCompositionError("factor " + std::to_string(f.encoding()) + " has no logarithm for norm mask " +
                              std::to_string(n.mask));
}

OrientedMap shift_norm(const OrientedMap& m, LinearForm shift) {
    OrientedMap out;
    out.norm_form = m.norm_form + shift;
    for (Point p : all_points())
        out.alpha[p.index] = shift(p) ? m.alpha[p.index] + shift : m.alpha[p.index];
    return out;
}

AlternatingForm affine_diff(const OrientedMap& a, const OrientedMap& b) {
    if (a.norm_form != b.norm_form)
        throw Error("affine difference requires matching norm forms");
    auto value = [&](unsigned p, unsigned q) {
        return a.alpha[p](CubePoint(q)) ^ b.alpha[p](CubePoint(q));
    };
    AlternatingForm d{static_cast<std::uint8_t>(value(1, 2) | (value(1, 4) << 1) | (value(2, 4) << 2))};
#ifndef NDEBUG
    // Bilinearity of the difference is what the affine structure asserts.
    for (Point p : all_points())
        for (Point q : all_points()) assert(d(p, q) == value(p.index, q.index));
#endif
    return d;
}

OrientedMap affine_translate(const OrientedMap& m, AlternatingForm d) {
    OrientedMap out;
    out.norm_form = m.norm_form;
    for (Point p : all_points()) {
        // The form Q -> d(P,Q), by its values on the basis.
        unsigned mask = d(p, CubePoint(1)) | (d(p, CubePoint(2)) << 1) | (d(p, CubePoint(4)) << 2);
        out.alpha[p.index] = m.alpha[p.index] + LinearForm(mask);
    }
    return out;
}

namespace {

// Depth-first search for one map satisfying both axioms.
bool find_base_map(OrientedMap& m, unsigned p) {
    if (p == 8) return true;
    for (unsigned mask = 0; mask < 8; ++mask) {
        LinearForm cand(mask);
        if ((cand(Point(p)) ^ m.norm_form(Point(p))) != 1u) continue;
        bool ok = true;
        for (unsigned q = 1; q < p; ++q)
            if ((cand(Point(q)) ^ m.alpha[q](Point(p))) != 1u) {
                ok = false;
                break;
            }
        if (!ok) continue;
        m.alpha[p] = cand;
        if (find_base_map(m, p + 1)) return true;
    }
    return false;
}

std::array<std::uint8_t, 7> alpha_key(const OrientedMap& m) {
    std::array<std::uint8_t, 7> k{};
    for (unsigned p = 1; p < 8; ++p) k[p - 1] = m.alpha[p].mask;
    return k;
}

} // namespace

std::vector<OrientedMap> enumerate_maps(LinearForm n) {
    OrientedMap base;
    base.norm_form = n;
    bool found = find_base_map(base, 1);
    assert(found);
    (void)found;

    std::vector<OrientedMap> maps;
    maps.reserve(8);
    for (unsigned i = 0; i < 8; ++i) maps.push_back(affine_translate(base, AlternatingForm::from_index(i)));
    std::sort(maps.begin(), maps.end(),
              [](const OrientedMap& a, const OrientedMap& b) { return alpha_key(a) < alpha_key(b); });
    for ([[maybe_unused]] const auto& m : maps) assert(is_oriented(m));
    return maps;
}

TrianglePlane triangle_plane(const OrientedMap& m) {
    if (!m.norm_form.is_zero())
        throw Error("triangle planes are defined for plain oriented maps");
    TrianglePlane out{};
    for (Point p : all_points()) {
        // alpha_P is nonzero (alpha_P(P) = 1), so its kernel is a line not through P.
        PointSet tri = complement(m.alpha[p.index].kernel_in_plane()).without(p);
        out.triangles[p.index - 1] = orthodata(tri);
        assert(out.triangles[p.index - 1].orthopoint == p);
    }
    return out;
}

std::optional<std::string> fano_family_violation(const TrianglePlane& t) {
    for (Point p : all_points())
        for (Point q : all_points()) {
            if (q.index <= p.index) continue;
            unsigned containing = 0;
            for (const Triangle& tri : t.triangles)
                if (tri.members.contains(p) && tri.members.contains(q)) ++containing;
            if (containing != 1)
                return "points " + std::to_string(p.index) + "," + std::to_string(q.index) + " lie in " +
                       std::to_string(containing) + " members";
        }
    for (unsigned i = 0; i < 7; ++i)
        for (unsigned j = i + 1; j < 7; ++j) {
            unsigned common = (t.triangles[i].members & t.triangles[j].members).size();
            if (common != 1)
                return "members " + to_string(t.triangles[i].members) + " and " +
                       to_string(t.triangles[j].members) + " share " + std::to_string(common) + " points";
        }
    return std::nullopt;
}

OrientedMap map_from_triangle_plane(const TrianglePlane& t) {
    if (auto violation = fano_family_violation(t))
        throw NotAFanoFamilyError(*violation);

    OrientedMap m;
    m.norm_form = LinearForm(0);
    PointSet orthopoints;
    for (const Triangle& tri : t.triangles) {
        orthopoints = orthopoints.with(tri.orthopoint);
        m.alpha[tri.orthopoint.index] = tri.ortholine.form;
    }
    if (orthopoints != full_plane())
        throw NotAFanoFamilyError("orthopoints not pairwise distinct");
    assert(is_oriented(m));
    return m;
}

MultFactor bridge_factor(MultFactor f, LinearForm shift) {
    std::uint32_t flip = 0;
    for (Point p : all_points())
        for (Point q : all_points()) {
            if (p.index >= q.index) continue;
            if (shift(p) & shift(q)) flip |= 1u << pair_index(p, q);
        }
    return MultFactor::from_encoding(f.encoding() ^ flip);
}

Point distinguished_point(MultFactor f, LinearForm n) {
    assert(!n.is_zero());
    ClassTag tag = classify(Norm{n}, f);
    if (tag.kind == AlgebraClass::not_composition)
        throw NotCompositionError("factor " + std::to_string(f.encoding()) +
                                  " is not a composition algebra for norm mask " + std::to_string(n.mask));
    if (!tag.distinguished)
        throw NoSuchPointError("split composition algebra without a distinguished point");
    return *tag.distinguished;
}

} // namespace fano
