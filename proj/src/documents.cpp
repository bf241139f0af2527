#include "fano/documents.hpp"

#include <sstream>

namespace fano {

namespace {

std::string class_name(AlgebraClass c) {
    switch (c) {
        case AlgebraClass::plus_type: return "plus";
        case AlgebraClass::minus_type: return "minus";
        default: return "not-composition";
    }
}

std::string kernel_description(Norm n) {
    auto support = norm_support(n);
    return support ? to_string(support->members) : std::string("trivial");
}

void emit_scan_block(std::ostringstream& os, const ScanResult& r) {
    os << "norm-mask: " << static_cast<int>(r.norm.form.mask) << "\n";
    os << "norm-kernel: " << kernel_description(r.norm) << "\n";
    os << "scanned: " << r.total_scanned << "\n";
    os << "composition: " << r.composition_count << "\n";
    os << "contradictions: " << r.contradictions << "\n";
    os << "plus:";
    for (auto enc : r.plus_tags) os << ' ' << enc;
    os << "\n";
    os << "minus:";
    for (auto enc : r.minus_tags) os << ' ' << enc;
    os << "\n";
}

} // namespace

TableOutput make_table_output(Norm n, MultFactor f) {
    TableOutput t;
    t.norm = n;
    t.factor = f;
    t.conditions = structural_conditions(n, f);
    t.tag = t.conditions.all_ok() ? classify(n, f) : ClassTag{AlgebraClass::not_composition, std::nullopt};
    t.table = make_algebra(n, f).table;
    return t;
}

TableOutput make_table_output(const ResolvedArrows& r) {
    TableOutput t = make_table_output(r.norm, r.factor);
    std::array<std::string, 8> labels{};
    for (unsigned p = 1; p < 8; ++p) labels[p] = r.label_of_point[p];
    t.point_labels = labels;
    return t;
}

std::string emit_table(const TableOutput& t) {
    std::ostringstream os;
    os << "fano-table v1\n";
    os << "norm-mask: " << static_cast<int>(t.norm.form.mask) << "\n";
    os << "norm-kernel: " << kernel_description(t.norm) << "\n";
    os << "factor: " << t.factor.encoding() << "\n";

    unsigned minus_count = 0;
    for (Point p : all_points())
        if (eval_norm(t.norm, p) == Sign::minus) ++minus_count;
    os << "signature: (" << (8 - minus_count) << "," << minus_count << ")\n";

    os << "classification: " << class_name(t.tag.kind) << "\n";
    os << "distinguished-point: ";
    if (t.tag.distinguished)
        os << static_cast<int>(t.tag.distinguished->index) << "\n";
    else
        os << "-\n";

    os << "line-condition: ";
    if (t.conditions.lines_ok) {
        os << "pass\n";
    } else {
        const auto& w = *t.conditions.line_witness;
        os << "fail " << static_cast<int>(w[0].index) << ' ' << static_cast<int>(w[1].index) << ' '
           << static_cast<int>(w[2].index) << "\n";
    }
    os << "quad-condition: ";
    if (t.conditions.quads_ok) {
        os << "pass\n";
    } else {
        const auto& w = *t.conditions.quad_witness;
        os << "fail " << static_cast<int>(w[0].index) << ' ' << static_cast<int>(w[1].index) << ' '
           << static_cast<int>(w[2].index) << ' ' << static_cast<int>(w[3].index) << "\n";
    }

    if (t.point_labels) {
        os << "point-labels:";
        for (unsigned p = 1; p < 8; ++p) os << ' ' << (*t.point_labels)[p];
        os << "\n";
    }

    os << "table:\n";
    for (unsigned i = 0; i < 8; ++i) {
        for (unsigned j = 0; j < 8; ++j) {
            const auto& e = t.table[i][j];
            os << (j ? " " : "") << (e.coeff > 0 ? '+' : '-') << static_cast<int>(e.target);
        }
        os << "\n";
    }
    return os.str();
}

namespace {

// Minimal line-oriented reader for the table document.
struct DocReader {
    std::istringstream is;
    int line_no = 0;

    explicit DocReader(const std::string& text) : is(text) {}

    std::string next_line() {
        std::string line;
        if (!std::getline(is, line)) throw ParseError("unexpected end of document", line_no);
        ++line_no;
        return line;
    }

    // "key: rest" -> rest
    std::string expect_key(const std::string& key) {
        std::string line = next_line();
        std::string prefix = key + ":";
        if (line.rfind(prefix, 0) != 0) throw ParseError("expected '" + key + ":'", line_no);
        std::string rest = line.substr(prefix.size());
        if (!rest.empty() && rest[0] == ' ') rest.erase(0, 1);
        return rest;
    }
};

long parse_long(const std::string& s, DocReader& r) {
    try {
        size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected a number, got '" + s + "'", r.line_no);
    }
}

} // namespace

TableOutput parse_table(const std::string& text) {
    DocReader r(text);
    if (r.next_line() != "fano-table v1") throw ParseError("missing 'fano-table v1' header", r.line_no);

    long mask = parse_long(r.expect_key("norm-mask"), r);
    if (mask < 0 || mask > 7) throw ParseError("norm mask out of range", r.line_no);
    std::string kernel = r.expect_key("norm-kernel");
    long enc = parse_long(r.expect_key("factor"), r);
    if (enc < 0 || static_cast<std::uint32_t>(enc) >= MultFactor::encoding_count)
        throw ParseError("factor encoding out of range", r.line_no);

    TableOutput t = make_table_output(Norm{LinearForm(static_cast<unsigned>(mask))},
                                      MultFactor::from_encoding(static_cast<std::uint32_t>(enc)));
    if (kernel != kernel_description(t.norm)) throw ParseError("norm kernel does not match its mask", r.line_no);

    std::string signature = r.expect_key("signature");
    std::string classification = r.expect_key("classification");
    std::string distinguished = r.expect_key("distinguished-point");
    std::string line_cond = r.expect_key("line-condition");
    std::string quad_cond = r.expect_key("quad-condition");

    std::string table_marker = r.next_line();
    if (table_marker.rfind("point-labels:", 0) == 0) {
        std::istringstream ls(table_marker.substr(std::string("point-labels:").size()));
        std::array<std::string, 8> labels{};
        for (unsigned p = 1; p < 8; ++p)
            if (!(ls >> labels[p])) throw ParseError("point-labels needs 7 labels", r.line_no);
        t.point_labels = labels;
        table_marker = r.next_line();
    }
    if (table_marker != "table:") throw ParseError("expected 'table:'", r.line_no);

    for (unsigned i = 0; i < 8; ++i) {
        std::istringstream row(r.next_line());
        for (unsigned j = 0; j < 8; ++j) {
            std::string cell;
            if (!(row >> cell) || cell.size() != 2 || (cell[0] != '+' && cell[0] != '-') ||
                cell[1] < '0' || cell[1] > '7')
                throw ParseError("bad table cell in row " + std::to_string(i), r.line_no);
            AlgebraStructure::TableEntry expected = t.table[i][j];
            if (static_cast<unsigned>(cell[1] - '0') != expected.target ||
                (cell[0] == '+') != (expected.coeff > 0))
                throw ParseError("table cell (" + std::to_string(i) + "," + std::to_string(j) +
                                     ") does not match the declared norm and factor",
                                 r.line_no);
        }
    }

    // Cross-check the derived fields against the recomputation.
    std::string reemitted = emit_table(t);
    std::string line;
    auto field_matches = [&](const std::string& key, const std::string& given) {
        std::istringstream cs(reemitted);
        std::string prefix = key + ": ";
        while (std::getline(cs, line))
            if (line.rfind(prefix, 0) == 0) return line.substr(prefix.size()) == given;
        return false;
    };
    if (!field_matches("signature", signature)) throw ParseError("signature does not match the norm");
    if (!field_matches("classification", classification))
        throw ParseError("classification does not match the structure");
    if (!field_matches("distinguished-point", distinguished))
        throw ParseError("distinguished point does not match the structure");
    if (!field_matches("line-condition", line_cond)) throw ParseError("line-condition does not match");
    if (!field_matches("quad-condition", quad_cond)) throw ParseError("quad-condition does not match");

    return t;
}

std::string emit_scan(const ScanResult& r) {
    std::ostringstream os;
    os << "fano-census v1\n";
    emit_scan_block(os, r);
    return os.str();
}

std::string emit_census(const CensusReport& r) {
    std::ostringstream os;
    os << "fano-census v1\n";
    std::uint32_t total = 0;
    for (const auto& s : r.per_norm) {
        emit_scan_block(os, s);
        os << "\n";
        total += s.composition_count;
    }
    os << "total-composition: " << total << "\n";
    os << "bridge-bijection: " << (r.bridge_bijection_ok ? "pass" : "fail") << "\n";
    os << "diagram-identities: " << r.diagram_passed << "/" << r.diagram_checked << "\n";
    return os.str();
}

namespace {

std::string dot_document(const std::array<std::string, 8>& labels, Norm n, MultFactor f) {
    std::ostringstream os;
    os << "digraph fano_arrows {\n";
    PointSet kernel = n.form.is_zero() ? PointSet{} : n.form.kernel_in_plane();
    for (unsigned p = 1; p < 8; ++p) {
        os << "  \"" << labels[p] << "\" [shape=circle";
        if (kernel.contains(Point(p))) os << ", color=blue, peripheries=2";
        os << "];\n";
    }
    for (unsigned p = 1; p < 8; ++p)
        for (unsigned q = p + 1; q < 8; ++q) {
            bool forward = f.sign(Point(p), Point(q)) == Sign::plus;
            const std::string& tail = forward ? labels[p] : labels[q];
            const std::string& head = forward ? labels[q] : labels[p];
            os << "  \"" << tail << "\" -> \"" << head << "\";\n";
        }
    os << "}\n";
    return os.str();
}

} // namespace

std::string export_dot(Norm n, MultFactor f) {
    std::array<std::string, 8> labels{};
    for (unsigned p = 1; p < 8; ++p) labels[p] = std::to_string(p);
    return dot_document(labels, n, f);
}

std::string export_dot(const ResolvedArrows& r) {
    return dot_document(r.label_of_point, r.norm, r.factor);
}

} // namespace fano
