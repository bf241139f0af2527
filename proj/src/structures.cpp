#include "fano/structures.hpp"

namespace fano {

std::optional<Line> norm_support(Norm n) {
    if (n.form.is_zero()) return std::nullopt;
    return line_of_form(n.form);
}

std::array<Norm, 8> all_norms() {
    std::array<Norm, 8> out{};
    for (unsigned m = 0; m < 8; ++m) out[m] = Norm{LinearForm(m)};
    return out;
}

FuturePast future_past(MultFactor f, Point p) {
    FuturePast fp;
    for (Point q : full_plane().points()) {
        if (q == p) continue;
        if (f.sign(p, q) == Sign::plus)
            fp.future = fp.future.with(q);
        else
            fp.past = fp.past.with(q);
    }
    return fp;
}

MultFactor mf_from_arrows(std::span<const std::pair<Point, Point>> arrows) {
    std::array<int, 21> seen{};  // 0 unset, +1 arrow min->max, -1 arrow max->min
    seen.fill(0);
    for (auto [p, q] : arrows) {
        if (p == q) throw DegenerateInputError("arrow from a point to itself: " + std::to_string(p.index));
        unsigned k = pair_index(p, q);
        int dir = p.index < q.index ? 1 : -1;
        if (seen[k] == 0) {
            seen[k] = dir;
        } else if (seen[k] != dir) {
            throw ConflictingPairError("both directions listed for pair {" + std::to_string(p.index) + "," +
                                       std::to_string(q.index) + "}");
        }
        // A repeated identical arrow is tolerated: it adds no information.
    }
    std::uint32_t enc = 0;
    for (Point p : full_plane().points())
        for (Point q : full_plane().points()) {
            if (p.index >= q.index) continue;
            unsigned k = pair_index(p, q);
            if (seen[k] == 0)
                throw MissingPairError("no arrow for pair {" + std::to_string(p.index) + "," +
                                       std::to_string(q.index) + "}");
            if (seen[k] < 0) enc |= 1u << k;  // arrow max->min means sign(min,max) = -1
        }
    return MultFactor::from_encoding(enc);
}

} // namespace fano
