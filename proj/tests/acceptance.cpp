// Acceptance suite: exercises every advertised guarantee end to end and
// prints one pass/fail line per criterion.  Exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "fano/commands.hpp"

using namespace fano;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && passed) {
            passed = false;
            detail = what;
        }
    }
};

std::string fixture(const std::string& name) { return std::string(FANO_FIXTURE_DIR) + "/" + name; }

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

OctonionElement random_octonion(std::mt19937& rng) {
    OctonionElement z;
    for (auto& c : z.coeff) c = random_rational(rng);
    return z;
}

// 1. Incidence laws and object counts, under one second.
Outcome incidence_suite() {
    Outcome o;
    LawReport report = check_incidence_laws();
    for (const LawCheck& law : report.laws)
        o.require(law.passed, law.law + " failed at " + law.witness);
    o.require(full_plane().size() == 7, "point count");
    o.require(all_lines().size() == 7, "line count");
    o.require(all_triangles().size() == 28, "triangle count");
    o.require(all_quadrilaterals().size() == 7, "quadrilateral count");
    o.detail = "laws L1-L7 pass; 7 points, 7 lines, 28 triangles, 7 quadrilaterals";
    return o;
}

// 2. The structured compositor expansion agrees with the direct computation,
//    exactly, on 100 random rational pairs for each of 1000 random structures.
Outcome compositor_oracle() {
    Outcome o;
    std::mt19937 rng(20240801);
    std::uniform_int_distribution<std::uint32_t> pick_factor(0, MultFactor::encoding_count - 1);
    std::uniform_int_distribution<unsigned> pick_mask(0, 7);

    long checked = 0;
    for (int structure = 0; structure < 1000 && o.passed; ++structure) {
        AlgebraStructure a =
            make_algebra(Norm{LinearForm(pick_mask(rng))}, MultFactor::from_encoding(pick_factor(rng)));
        for (int pair = 0; pair < 100; ++pair) {
            OctonionElement z = random_octonion(rng);
            OctonionElement w = random_octonion(rng);
            if (compositor_structured(a, z, w) != compositor_direct(a, z, w)) {
                o.require(false, "mismatch at factor " + std::to_string(a.factor.encoding()) +
                                     ", norm mask " + std::to_string(a.norm.form.mask));
                break;
            }
            ++checked;
        }
    }
    o.detail = std::to_string(checked) + " pairs over 1000 structures agree exactly";
    return o;
}

// 3. Exhaustive trivial-norm scan, single-threaded.
Outcome division_scan(ScanResult& out) {
    Outcome o;
    out = scan_norm(trivial_norm(), 1);
    o.require(out.total_scanned == MultFactor::encoding_count, "wrong scan size");
    o.require(out.composition_count == 16, "composition count " + std::to_string(out.composition_count));
    o.require(out.plus_tags.size() == 8, "plus count");
    o.require(out.minus_tags.size() == 8, "minus count");
    o.require(out.contradictions == 0, "contradictions");
    o.detail = "2097152 factors: 16 composition (8 plus, 8 minus), 0 contradictions";
    return o;
}

// 4. Eight plain oriented maps whose two exponentials are exactly the scan's
//    sixteen composition factors.
Outcome oriented_map_count(const ScanResult& scan) {
    Outcome o;
    auto maps = enumerate_maps(LinearForm(0));
    o.require(maps.size() == 8, "map count " + std::to_string(maps.size()));

    std::set<std::uint32_t> exp_set, scan_set;
    for (const OrientedMap& m : maps) {
        o.require(is_oriented(m), "invalid enumerated map");
        exp_set.insert(exp_map(m, Sign::plus).encoding());
        exp_set.insert(exp_map(m, Sign::minus).encoding());
    }
    scan_set.insert(scan.plus_tags.begin(), scan.plus_tags.end());
    scan_set.insert(scan.minus_tags.begin(), scan.minus_tags.end());
    o.require(exp_set.size() == 16, "exponential images not distinct");
    o.require(exp_set == scan_set, "exponential images differ from the scan");
    o.detail = "8 oriented maps; {+-exp} equals the 16 scanned factors";
    return o;
}

// 5. Triangle planes biject with oriented maps and realize pasts.
Outcome triangle_plane_bijection() {
    Outcome o;
    auto maps = enumerate_maps(LinearForm(0));
    std::set<std::set<std::uint8_t>> families;
    for (const OrientedMap& m : maps) {
        TrianglePlane t = triangle_plane(m);
        o.require(!fano_family_violation(t).has_value(), "family violates a Fano axiom");

        std::set<std::uint8_t> family;
        for (const Triangle& tri : t.triangles) family.insert(tri.members.mask);
        families.insert(family);

        OrientedMap recovered = map_from_triangle_plane(t);
        o.require(recovered == m, "map_from_triangle_plane is not inverse");

        MultFactor f = exp_map(recovered, Sign::plus);
        for (const Triangle& tri : t.triangles)
            o.require(future_past(f, tri.orthopoint).past == tri.members,
                      "pasts do not reproduce the family");
    }
    o.require(families.size() == 8, "families not distinct");
    o.detail = "8 distinct Fano families, inverted and realized as pasts";
    return o;
}

// 6. Split scans, the bridge bijection, and the commuting diagram.
Outcome split_scan_and_bridge(const ScanResult& trivial, std::array<ScanResult, 8>& scans) {
    Outcome o;
    scans[0] = trivial;
    for (unsigned mask = 1; mask < 8; ++mask) {
        scans[mask] = scan_norm(Norm{LinearForm(mask)}, 1);
        o.require(scans[mask].composition_count == 16,
                  "norm mask " + std::to_string(mask) + " composition count");
        o.require(scans[mask].plus_tags.size() == 8 && scans[mask].minus_tags.size() == 8,
                  "norm mask " + std::to_string(mask) + " type split");
        o.require(scans[mask].contradictions == 0, "contradictions under mask " + std::to_string(mask));

        auto bridged = [&](const std::vector<std::uint32_t>& tags) {
            std::vector<std::uint32_t> out;
            for (std::uint32_t enc : tags)
                out.push_back(bridge_factor(MultFactor::from_encoding(enc), LinearForm(mask)).encoding());
            std::sort(out.begin(), out.end());
            return out;
        };
        o.require(bridged(trivial.plus_tags) == scans[mask].plus_tags,
                  "bridge does not carry plus factors onto mask " + std::to_string(mask));
        o.require(bridged(trivial.minus_tags) == scans[mask].minus_tags,
                  "bridge does not carry minus factors onto mask " + std::to_string(mask));
    }

    unsigned identities = 0;
    for (const OrientedMap& m : enumerate_maps(LinearForm(0)))
        for (unsigned mask = 1; mask < 8; ++mask)
            for (Sign s : {Sign::plus, Sign::minus})
                if (bridge_factor(exp_map(m, s), LinearForm(mask)) ==
                    exp_map(shift_norm(m, LinearForm(mask)), s))
                    ++identities;
    o.require(identities == 112, "diagram identities: " + std::to_string(identities) + "/112");
    o.detail = "7 split scans of 16 (8+8); bridge bijection holds; 112/112 diagram identities";
    return o;
}

// 7. Every split composition structure has exactly one distinguished point,
//    equal to the pre-bridge kernel computation.
Outcome distinguished_points(const std::array<ScanResult, 8>& scans) {
    Outcome o;
    unsigned checked = 0;
    for (unsigned mask = 1; mask < 8; ++mask) {
        LinearForm n(mask);
        auto check_tags = [&](const std::vector<std::uint32_t>& tags, bool plus) {
            for (std::uint32_t enc : tags) {
                MultFactor f = MultFactor::from_encoding(enc);
                unsigned full = 0;
                Point candidate(1);
                for (Point p : all_points()) {
                    FuturePast fp = future_past(f, p);
                    const PointSet& side = plus ? fp.future : fp.past;
                    if (side.size() == 6) {
                        ++full;
                        candidate = p;
                    }
                }
                o.require(full == 1, "factor " + std::to_string(enc) + " has " + std::to_string(full) +
                                         " full points under mask " + std::to_string(mask));
                Point reported = distinguished_point(f, n);
                o.require(reported == candidate, "reported point differs");

                // Pre-bridge: the same point's future (resp. past) is the kernel.
                MultFactor division = bridge_factor(f, n);
                FuturePast pre = future_past(division, reported);
                o.require((plus ? pre.future : pre.past) == n.kernel_in_plane(),
                          "pre-bridge kernel mismatch for factor " + std::to_string(enc));
                ++checked;
            }
        };
        check_tags(scans[mask].plus_tags, true);
        check_tags(scans[mask].minus_tags, false);
    }
    o.require(checked == 112, "checked " + std::to_string(checked) + " split structures");
    o.detail = "112 split structures: unique distinguished point, matching the pre-bridge kernel";
    return o;
}

// 8. The bundled figure fixtures behave as drawn.
Outcome figure_fixtures() {
    Outcome o;

    std::ostringstream out, err;
    o.require(cmd_verify(fixture("figure1_left.arrows"), out, err) == 0, "left fixture exit code");
    ResolvedArrows left = load_arrow_text(read_file(fixture("figure1_left.arrows")));
    o.require(left.norm == trivial_norm(), "left fixture norm");
    o.require(classify(left.norm, left.factor).kind == AlgebraClass::plus_type, "left fixture class");

    ResolvedArrows right = load_arrow_text(read_file(fixture("figure1_right.arrows")));
    o.require(!right.norm.form.is_zero(), "right fixture norm");
    o.require(is_composition(right.norm, right.factor), "right fixture composition");
    unsigned admitting = 0;
    for (unsigned mask = 0; mask < 8; ++mask)
        if (is_composition(Norm{LinearForm(mask)}, right.factor)) ++admitting;
    o.require(admitting == 1, "right fixture norm not unique");

    ResolvedArrows pair_left = load_arrow_text(read_file(fixture("figure3_left.arrows")));
    ResolvedArrows pair_right = load_arrow_text(read_file(fixture("figure3_right.arrows")));
    o.require(pair_left.coordinate_of_label == pair_right.coordinate_of_label, "panel labelings differ");
    LinearForm shift = pair_right.norm.form;
    unsigned flipped = 0;
    bool flip_pattern = true;
    for (Point p : all_points())
        for (Point q : all_points()) {
            if (p.index >= q.index) continue;
            bool differs = pair_left.factor.sign(p, q) != pair_right.factor.sign(p, q);
            if (differs) ++flipped;
            flip_pattern = flip_pattern && (differs == (shift(p) == 1 && shift(q) == 1));
        }
    o.require(flipped == 6, "panels differ on " + std::to_string(flipped) + " arrows");
    o.require(flip_pattern, "flipped arrows are not the off-kernel pairs");
    o.require(pair_right.factor == bridge_factor(pair_left.factor, shift), "panels not bridge-related");

    o.detail = "left: trivial plus, exit 0; right: unique split norm; panels differ on the 6 predicted arrows";
    return o;
}

// 9. Positive definiteness and alternativity in the division case; explicit
//    isotropic vectors and zero divisors in every split case.
Outcome algebraic_sanity(const std::array<ScanResult, 8>& scans) {
    Outcome o;
    std::mt19937 rng(424242);

    auto alternative = [&](const AlgebraStructure& a) {
        for (unsigned i = 0; i < 8; ++i)
            for (unsigned j = 0; j < 8; ++j) {
                OctonionElement ei = OctonionElement::basis(CubePoint(i));
                OctonionElement ej = OctonionElement::basis(CubePoint(j));
                if (!(multiply(a, multiply(a, ei, ei), ej) == multiply(a, ei, multiply(a, ei, ej))))
                    return false;
                if (!(multiply(a, multiply(a, ei, ej), ej) == multiply(a, ei, multiply(a, ej, ej))))
                    return false;
            }
        return true;
    };

    for (std::uint32_t enc : scans[0].plus_tags) {
        AlgebraStructure a = make_algebra(trivial_norm(), MultFactor::from_encoding(enc));
        for (unsigned i = 0; i < 8; ++i)
            o.require(quad_form(a, OctonionElement::basis(CubePoint(i))) == 1,
                      "division form not positive definite");
        o.require(alternative(a), "division factor " + std::to_string(enc) + " not alternative");
        for (int trial = 0; trial < 5; ++trial) {
            OctonionElement z = random_octonion(rng);
            Rational nz = quad_form(a, z);
            if (sgn(nz) == 0) continue;
            OctonionElement inverse = (1 / nz) * ((2 * z.coeff[0]) * OctonionElement::unit() - z);
            o.require(multiply(a, z, inverse) == OctonionElement::unit() &&
                          multiply(a, inverse, z) == OctonionElement::unit(),
                      "missing two-sided inverse");
        }
    }
    for (std::uint32_t enc : scans[0].minus_tags) {
        AlgebraStructure a = make_algebra(trivial_norm(), MultFactor::from_encoding(enc));
        o.require(alternative(a), "division factor " + std::to_string(enc) + " not alternative");
    }

    for (unsigned mask = 1; mask < 8; ++mask) {
        for (std::uint32_t enc : scans[mask].plus_tags) {
            AlgebraStructure a = make_algebra(Norm{LinearForm(mask)}, MultFactor::from_encoding(enc));
            o.require(alternative(a), "split factor not alternative");

            Point negative(1);
            for (Point p : all_points())
                if (eval_norm(a.norm, p) == Sign::minus) negative = p;
            OctonionElement z = OctonionElement::unit() + OctonionElement::basis(negative);
            OctonionElement conj = (2 * z.coeff[0]) * OctonionElement::unit() - z;
            o.require(quad_form(a, z) == 0, "isotropic vector is not isotropic");
            o.require(!z.is_zero() && !conj.is_zero() && multiply(a, z, conj).is_zero(),
                      "zero divisor pair fails");
        }
        for (std::uint32_t enc : scans[mask].minus_tags)
            o.require(alternative(make_algebra(Norm{LinearForm(mask)}, MultFactor::from_encoding(enc))),
                      "split factor not alternative");
    }

    o.detail = "division: positive definite + alternative + inverses; split: isotropic vectors and zero divisors";
    return o;
}

// 10. Census output is byte-identical across runs and worker counts.
Outcome determinism() {
    Outcome o;
    std::ostringstream all_one, all_three, trivial_a, trivial_b, err;
    o.require(cmd_enumerate("all", 1, all_one, err) == 0, "census exit code");
    o.require(cmd_enumerate("all", 3, all_three, err) == 0, "census exit code (workers 3)");
    o.require(all_one.str() == all_three.str(), "census differs across worker counts");
    o.require(cmd_enumerate("trivial", 2, trivial_a, err) == 0, "scan exit code");
    o.require(cmd_enumerate("trivial", 5, trivial_b, err) == 0, "scan exit code");
    o.require(trivial_a.str() == trivial_b.str(), "scan differs across runs");
    o.detail = "census and scan documents byte-identical across runs and --workers";
    return o;
}

struct Criterion {
    int id;
    std::string name;
    Outcome outcome;
    double seconds = 0.0;
    double limit = 0.0;  // 0 = no stated limit
};

void report(std::vector<Criterion>& results, int id, const std::string& name, double limit,
            const std::function<Outcome()>& run) {
    auto start = std::chrono::steady_clock::now();
    Outcome o = run();
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit > 0 && seconds >= limit) {
        o.passed = false;
        o.detail = "exceeded " + std::to_string(limit) + " s time limit";
    }
    results.push_back({id, name, o, seconds, limit});
}

} // namespace

int main() {
    std::vector<Criterion> results;
    ScanResult trivial_scan;
    std::array<ScanResult, 8> scans{};

    report(results, 1, "incidence suite", 1.0, incidence_suite);
    report(results, 2, "compositor oracle", 30.0, compositor_oracle);
    report(results, 3, "division classification", 120.0, [&] { return division_scan(trivial_scan); });
    report(results, 4, "oriented map count", 0, [&] { return oriented_map_count(trivial_scan); });
    report(results, 5, "triangle-plane bijection", 0, triangle_plane_bijection);
    report(results, 6, "split classification and bridge", 0,
           [&] { return split_scan_and_bridge(trivial_scan, scans); });
    report(results, 7, "distinguished points", 0, [&] { return distinguished_points(scans); });
    report(results, 8, "figure fixtures", 0, figure_fixtures);
    report(results, 9, "algebraic sanity", 0, [&] { return algebraic_sanity(scans); });
    report(results, 10, "determinism", 0, determinism);

    bool all_passed = true;
    for (const Criterion& c : results) {
        all_passed = all_passed && c.outcome.passed;
        std::ostringstream time;
        time.setf(std::ios::fixed);
        time.precision(2);
        time << c.seconds << " s";
        std::cout << (c.outcome.passed ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.name
                  << " — " << c.outcome.detail << " [" << time.str() << "]\n";
    }
    std::cout << (all_passed ? "all criteria passed" : "SOME CRITERIA FAILED") << "\n";
    return all_passed ? 0 : 1;
}
