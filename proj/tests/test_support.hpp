#ifndef FANO_TEST_SUPPORT_HPP
#define FANO_TEST_SUPPORT_HPP

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fano/algebra.hpp"

namespace fano::test {

inline std::string fixture_path(const std::string& name) {
    return std::string(FANO_FIXTURE_DIR) + "/" + name;
}

inline std::string golden_path(const std::string& name) {
    return std::string(FANO_GOLDEN_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), "cannot open ", path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline OctonionElement random_octonion(std::mt19937& rng) {
    OctonionElement z;
    for (auto& c : z.coeff) c = random_rational(rng);
    return z;
}

// A division-case factor given by an explicit future line per point.  The
// assignment is antisymmetry-consistent; mf_from_arrows would reject it
// otherwise.
inline MultFactor sample_division_factor() {
    static const std::array<PointSet, 8> future = {
        PointSet{},
        PointSet{Point(2), Point(5), Point(7)},
        PointSet{Point(3), Point(4), Point(7)},
        PointSet{Point(1), Point(4), Point(5)},
        PointSet{Point(1), Point(6), Point(7)},
        PointSet{Point(2), Point(4), Point(6)},
        PointSet{Point(1), Point(2), Point(3)},
        PointSet{Point(3), Point(5), Point(6)},
    };
    std::vector<std::pair<Point, Point>> arrows;
    for (Point p : all_points())
        for (Point q : all_points()) {
            if (p.index >= q.index) continue;
            if (future[p.index].contains(q))
                arrows.emplace_back(p, q);
            else
                arrows.emplace_back(q, p);
        }
    return mf_from_arrows(arrows);
}

// Invertible linear map of the cube, stored as the image of every point.
struct Collineation {
    std::array<Point, 8> image{};  // image[p] for p in 1..7

    Point operator()(Point p) const { return image[p.index]; }
};

inline Collineation random_collineation(std::mt19937& rng) {
    std::uniform_int_distribution<unsigned> pick(1, 7);
    unsigned a = pick(rng);
    unsigned b = pick(rng);
    while (b == a) b = pick(rng);
    unsigned c = pick(rng);
    while (c == a || c == b || c == (a ^ b)) c = pick(rng);

    Collineation g;
    for (unsigned p = 1; p < 8; ++p) {
        unsigned img = 0;
        if (p & 1u) img ^= a;
        if (p & 2u) img ^= b;
        if (p & 4u) img ^= c;
        g.image[p] = Point(img);
    }
    return g;
}

inline MultFactor transport(MultFactor f, const Collineation& g) {
    std::uint32_t enc = 0;
    for (Point p : all_points())
        for (Point q : all_points()) {
            if (p.index >= q.index) continue;
            Point gp = g(p), gq = g(q);
            unsigned bit = gp.index < gq.index ? f.logbit(p, q) : f.logbit(q, p);
            if (bit) enc |= 1u << pair_index(gp, gq);
        }
    return MultFactor::from_encoding(enc);
}

inline Norm transport(Norm n, const Collineation& g) {
    std::array<unsigned, 8> value{};
    for (Point p : all_points()) value[g(p).index] = n.form(p);
    unsigned mask = value[1] | (value[2] << 1) | (value[4] << 2);
    Norm out{LinearForm(mask)};
    for (Point p : all_points()) REQUIRE(out.form(g(p)) == n.form(p));
    return out;
}

} // namespace fano::test

#endif
