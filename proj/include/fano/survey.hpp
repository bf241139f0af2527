#ifndef FANO_SURVEY_HPP
#define FANO_SURVEY_HPP

#include <vector>

#include "fano/oriented.hpp"

// Exhaustive classification of all 2^21 multiplication factors per norm.
// The factor space may be split into disjoint encoding ranges processed by
// parallel workers; merged results are identical for any worker count.

namespace fano {

struct ScanResult {
    Norm norm;
    std::uint32_t total_scanned = 0;
    std::uint32_t composition_count = 0;
    std::vector<std::uint32_t> plus_tags;   // factor encodings, ascending
    std::vector<std::uint32_t> minus_tags;  // factor encodings, ascending
    std::uint32_t contradictions = 0;       // always 0 on a correct build

    friend bool operator==(const ScanResult&, const ScanResult&) = default;
};

ScanResult scan_norm(Norm n, unsigned workers = 1);

struct CensusReport {
    std::array<ScanResult, 8> per_norm;  // indexed by norm form mask

    // Cross-norm checks: the bridge maps the trivial-norm composition
    // factors onto each nonzero norm's, type for type, and commutes with
    // exp/shift on all maps, norms and signs.
    bool bridge_bijection_ok = false;
    unsigned diagram_checked = 0;
    unsigned diagram_passed = 0;

    double elapsed_seconds = 0.0;  // informational only, never serialized
};

CensusReport full_report(unsigned workers = 1);

} // namespace fano

#endif
