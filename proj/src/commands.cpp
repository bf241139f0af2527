#include "fano/commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace fano {

namespace {

ResolvedArrows load_arrow_path(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return resolve_arrow_file(parse_arrow_file(in));
}

std::optional<Norm> parse_norm_selector(const std::string& sel) {
    if (sel == "trivial") return trivial_norm();
    if (sel.rfind("mask:", 0) == 0) {
        const std::string rest = sel.substr(5);
        if (rest.size() == 1 && rest[0] >= '0' && rest[0] <= '7')
            return Norm{LinearForm(static_cast<unsigned>(rest[0] - '0'))};
        return std::nullopt;
    }
    // "a,b,c": the kernel line in cube coordinates.
    std::istringstream is(sel);
    std::string part;
    PointSet kernel;
    while (std::getline(is, part, ',')) {
        if (part.size() != 1 || part[0] < '1' || part[0] > '7') return std::nullopt;
        kernel = kernel.with(Point(static_cast<unsigned>(part[0] - '0')));
    }
    if (!is_line_set(kernel)) return std::nullopt;
    auto pts = kernel.points();
    return Norm{line_through(pts[0], pts[1]).form};
}

} // namespace

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
    try {
        ResolvedArrows resolved = load_arrow_path(path);
        TableOutput table = make_table_output(resolved);
        out << emit_table(table);
        return table.tag.kind == AlgebraClass::not_composition ? 1 : 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_enumerate(const std::string& selector, unsigned workers, std::ostream& out, std::ostream& err) {
    try {
        if (selector == "all") {
            CensusReport report = full_report(workers);
            out << emit_census(report);
            err << "census completed in " << report.elapsed_seconds << " s\n";
            return 0;
        }
        auto norm = parse_norm_selector(selector);
        if (!norm) throw Error("unknown selector '" + selector + "'");
        out << emit_scan(scan_norm(*norm, workers));
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_export_dot(const std::string& input, std::ostream& out, std::ostream& err) {
    try {
        if (input.rfind("enc:", 0) == 0) {
            std::string rest = input.substr(4);
            std::string enc_part = rest;
            Norm norm = trivial_norm();
            if (auto comma = rest.find(','); comma != std::string::npos) {
                enc_part = rest.substr(0, comma);
                auto sel = parse_norm_selector(rest.substr(comma + 1));
                if (!sel) throw Error("bad norm selector in '" + input + "'");
                norm = *sel;
            }
            unsigned long long enc = 0;
            try {
                size_t pos = 0;
                enc = std::stoull(enc_part, &pos);
                if (pos != enc_part.size()) throw std::invalid_argument(enc_part);
            } catch (const std::exception&) {
                throw Error("bad factor encoding '" + enc_part + "'");
            }
            if (enc >= MultFactor::encoding_count)
                throw Error("factor encoding out of range: " + enc_part);
            out << export_dot(norm, MultFactor::from_encoding(static_cast<std::uint32_t>(enc)));
            return 0;
        }
        out << export_dot(load_arrow_path(input));
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace fano
