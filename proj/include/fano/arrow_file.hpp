#ifndef FANO_ARROW_FILE_HPP
#define FANO_ARROW_FILE_HPP

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fano/structures.hpp"

// Textual arrow systems: 7 line definitions and 21 arrows over arbitrary
// point labels, with an optional norm line.  Labels are tied to cube
// coordinates by an incidence-preserving bijection found at ingestion; every
// library predicate is invariant under the choice.
//
// Grammar (one directive per line, '#' starts a comment):
//   line: a b c        seven times
//   arrow: a b         twenty-one times, meaning sign(a,b) = +1
//   norm: a b c        optional; kernel line of the norm
//   norm: trivial      optional; the default

namespace fano {

struct ArrowFile {
    std::vector<std::string> labels;                         // first-appearance order, exactly 7
    std::vector<std::array<unsigned, 3>> lines;              // label indices, 7 triples
    std::vector<std::pair<unsigned, unsigned>> arrows;       // label-index pairs, 21
    std::optional<std::array<unsigned, 3>> norm_line;        // nullopt = trivial norm
};

ArrowFile parse_arrow_file(std::istream& in);
ArrowFile parse_arrow_file(const std::string& text);

// An arrow file tied to cube coordinates.
struct ResolvedArrows {
    std::array<Point, 8> coordinate_of_label{};  // by label index (slot 7 unused)
    std::array<std::string, 8> label_of_point{};  // by cube index 1..7
    Norm norm;
    MultFactor factor;
};

// Validates the Fano axioms on the label incidence system (GeometryError
// with a witness otherwise), finds the deterministic first labeling, and
// builds the factor (MissingPairError / ConflictingPairError on bad arrow
// coverage) and the norm (GeometryError when the norm line is not one of
// the seven).
ResolvedArrows resolve_arrow_file(const ArrowFile& file);

inline ResolvedArrows load_arrow_text(const std::string& text) {
    return resolve_arrow_file(parse_arrow_file(text));
}

} // namespace fano

#endif
