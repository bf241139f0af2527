#include "fano/arrow_file.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>

namespace fano {

namespace {

std::vector<std::string> tokens_of(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

unsigned label_index(ArrowFile& file, std::map<std::string, unsigned>& index, const std::string& label,
                     int line_no) {
    auto it = index.find(label);
    if (it != index.end()) return it->second;
    if (file.labels.size() == 7)
        throw ParseError("more than 7 distinct point labels (new label '" + label + "')", line_no);
    unsigned id = static_cast<unsigned>(file.labels.size());
    file.labels.push_back(label);
    index.emplace(label, id);
    return id;
}

} // namespace

ArrowFile parse_arrow_file(std::istream& in) {
    ArrowFile file;
    std::map<std::string, unsigned> index;
    bool norm_seen = false;

    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        auto toks = tokens_of(raw);
        if (toks.empty()) continue;

        const std::string& directive = toks[0];
        if (directive == "line:") {
            if (toks.size() != 4) throw ParseError("'line:' needs exactly 3 labels", line_no);
            std::array<unsigned, 3> ids{};
            for (unsigned k = 0; k < 3; ++k) ids[k] = label_index(file, index, toks[k + 1], line_no);
            if (ids[0] == ids[1] || ids[1] == ids[2] || ids[0] == ids[2])
                throw ParseError("repeated label in line definition", line_no);
            file.lines.push_back(ids);
        } else if (directive == "arrow:") {
            if (toks.size() != 3) throw ParseError("'arrow:' needs exactly 2 labels", line_no);
            unsigned a = label_index(file, index, toks[1], line_no);
            unsigned b = label_index(file, index, toks[2], line_no);
            if (a == b) throw ParseError("arrow from a label to itself", line_no);
            file.arrows.emplace_back(a, b);
        } else if (directive == "norm:") {
            if (norm_seen) throw ParseError("duplicate 'norm:' directive", line_no);
            norm_seen = true;
            if (toks.size() == 2 && toks[1] == "trivial") {
                file.norm_line = std::nullopt;
                continue;
            }
            if (toks.size() != 4) throw ParseError("'norm:' needs 3 labels or 'trivial'", line_no);
            std::array<unsigned, 3> ids{};
            for (unsigned k = 0; k < 3; ++k) ids[k] = label_index(file, index, toks[k + 1], line_no);
            file.norm_line = ids;
        } else {
            throw ParseError("unknown directive '" + directive + "'", line_no);
        }
    }

    if (file.lines.size() != 7)
        throw ParseError("expected 7 'line:' directives, got " + std::to_string(file.lines.size()));
    if (file.labels.size() != 7)
        throw ParseError("expected 7 distinct labels, got " + std::to_string(file.labels.size()));
    return file;
}

ArrowFile parse_arrow_file(const std::string& text) {
    std::istringstream is(text);
    return parse_arrow_file(is);
}

namespace {

// Fano axioms on the abstract label incidence system.
void validate_label_incidence(const ArrowFile& file) {
    for (unsigned a = 0; a < 7; ++a)
        for (unsigned b = a + 1; b < 7; ++b) {
            unsigned containing = 0;
            for (const auto& l : file.lines)
                if (std::count(l.begin(), l.end(), a) && std::count(l.begin(), l.end(), b)) ++containing;
            if (containing != 1)
                throw GeometryError("labels '" + file.labels[a] + "' and '" + file.labels[b] + "' lie on " +
                                    std::to_string(containing) + " lines");
        }
    for (unsigned i = 0; i < 7; ++i)
        for (unsigned j = i + 1; j < 7; ++j) {
            unsigned common = 0;
            for (unsigned a = 0; a < 7; ++a)
                if (std::count(file.lines[i].begin(), file.lines[i].end(), a) &&
                    std::count(file.lines[j].begin(), file.lines[j].end(), a))
                    ++common;
            if (common != 1)
                throw GeometryError("line definitions " + std::to_string(i + 1) + " and " +
                                    std::to_string(j + 1) + " share " + std::to_string(common) + " points");
        }
}

// First incidence-preserving assignment of cube points to labels, in label
// order; deterministic for a fixed line list.
bool assign_labels(const ArrowFile& file, std::array<Point, 8>& coord, unsigned next, std::uint8_t used) {
    if (next == 7) return true;
    for (unsigned idx = 1; idx < 8; ++idx) {
        if ((used >> idx) & 1u) continue;
        bool ok = true;
        for (const auto& l : file.lines) {
            // Once a listed line is fully assigned its members must sum to zero.
            if (std::count(l.begin(), l.end(), next) == 0) continue;
            unsigned sum = idx;
            bool complete = true;
            for (unsigned member : l) {
                if (member == next) continue;
                if (member > next) {
                    complete = false;
                    break;
                }
                sum ^= coord[member].index;
            }
            if (complete && sum != 0) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        coord[next] = Point(idx);
        if (assign_labels(file, coord, next + 1, static_cast<std::uint8_t>(used | (1u << idx)))) return true;
    }
    return false;
}

} // namespace

ResolvedArrows resolve_arrow_file(const ArrowFile& file) {
    validate_label_incidence(file);

    ResolvedArrows out;
    bool found = assign_labels(file, out.coordinate_of_label, 0, 0);
    assert(found && "a valid Fano incidence system always coordinatizes");
    (void)found;
    for (unsigned i = 0; i < 7; ++i) out.label_of_point[out.coordinate_of_label[i].index] = file.labels[i];

    std::vector<std::pair<Point, Point>> arrows;
    arrows.reserve(file.arrows.size());
    for (auto [a, b] : file.arrows)
        arrows.emplace_back(out.coordinate_of_label[a], out.coordinate_of_label[b]);
    out.factor = mf_from_arrows(arrows);

    out.norm = trivial_norm();
    if (file.norm_line) {
        PointSet kernel;
        for (unsigned id : *file.norm_line) kernel = kernel.with(out.coordinate_of_label[id]);
        if (!is_line_set(kernel))
            throw GeometryError("norm line {" + file.labels[(*file.norm_line)[0]] + "," +
                                file.labels[(*file.norm_line)[1]] + "," + file.labels[(*file.norm_line)[2]] +
                                "} is not a line of the plane");
        out.norm = Norm{line_through(kernel.points()[0], kernel.points()[1]).form};
    }
    return out;
}

} // namespace fano
