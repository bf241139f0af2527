#ifndef FANO_DOCUMENTS_HPP
#define FANO_DOCUMENTS_HPP

#include <string>

#include "fano/arrow_file.hpp"
#include "fano/survey.hpp"

// Text documents: the multiplication-table report, the census report and
// DOT export.  All emitters are deterministic; table documents round-trip
// through parse_table losslessly.

namespace fano {

struct TableOutput {
    Norm norm;
    MultFactor factor;
    ClassTag tag;
    ConditionReport conditions;
    std::array<std::array<AlgebraStructure::TableEntry, 8>, 8> table{};
    std::optional<std::array<std::string, 8>> point_labels;  // by cube index, slot 0 unused
};

TableOutput make_table_output(Norm n, MultFactor f);
TableOutput make_table_output(const ResolvedArrows& r);

std::string emit_table(const TableOutput& t);

// Strict inverse of emit_table: rebuilds the structure from the document's
// norm mask and factor encoding and verifies every other field against the
// recomputation.  Throws ParseError on any mismatch.
TableOutput parse_table(const std::string& text);

std::string emit_scan(const ScanResult& r);
std::string emit_census(const CensusReport& r);

// Directed graph of the 21 arrows in DOT syntax; kernel-line nodes carry a
// distinguishing attribute when the norm is nonzero.
std::string export_dot(Norm n, MultFactor f);
std::string export_dot(const ResolvedArrows& r);

} // namespace fano

#endif
