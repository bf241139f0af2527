#include "fano/survey.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

namespace fano {

namespace {

struct RangeTally {
    std::vector<std::uint32_t> plus_tags;
    std::vector<std::uint32_t> minus_tags;
    std::uint32_t contradictions = 0;
};

RangeTally scan_range(Norm n, std::uint32_t begin, std::uint32_t end) {
    RangeTally tally;
    for (std::uint32_t enc = begin; enc < end; ++enc) {
        MultFactor f = MultFactor::from_encoding(enc);
        try {
            ClassTag tag = classify(n, f);
            if (tag.kind == AlgebraClass::plus_type)
                tally.plus_tags.push_back(enc);
            else if (tag.kind == AlgebraClass::minus_type)
                tally.minus_tags.push_back(enc);
        } catch (const ClassificationContradictionError&) {
            ++tally.contradictions;
        }
    }
    return tally;
}

} // namespace

ScanResult scan_norm(Norm n, unsigned workers) {
    if (workers == 0) workers = 1;
    const std::uint32_t total = MultFactor::encoding_count;

    std::vector<RangeTally> tallies(workers);
    if (workers == 1) {
        tallies[0] = scan_range(n, 0, total);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        std::uint32_t chunk = total / workers;
        for (unsigned w = 0; w < workers; ++w) {
            std::uint32_t begin = w * chunk;
            std::uint32_t end = (w + 1 == workers) ? total : begin + chunk;
            threads.emplace_back([&, w, begin, end] { tallies[w] = scan_range(n, begin, end); });
        }
        for (auto& t : threads) t.join();
    }

    // Ranges are disjoint and ascending, so concatenation keeps the tag
    // lists sorted regardless of worker count.
    ScanResult result;
    result.norm = n;
    result.total_scanned = total;
    for (const auto& t : tallies) {
        result.plus_tags.insert(result.plus_tags.end(), t.plus_tags.begin(), t.plus_tags.end());
        result.minus_tags.insert(result.minus_tags.end(), t.minus_tags.begin(), t.minus_tags.end());
        result.contradictions += t.contradictions;
    }
    result.composition_count =
        static_cast<std::uint32_t>(result.plus_tags.size() + result.minus_tags.size());
    return result;
}

namespace {

std::vector<std::uint32_t> bridged_sorted(const std::vector<std::uint32_t>& tags, LinearForm shift) {
    std::vector<std::uint32_t> out;
    out.reserve(tags.size());
    for (std::uint32_t enc : tags)
        out.push_back(bridge_factor(MultFactor::from_encoding(enc), shift).encoding());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

CensusReport full_report(unsigned workers) {
    auto start = std::chrono::steady_clock::now();

    CensusReport report;
    for (unsigned mask = 0; mask < 8; ++mask)
        report.per_norm[mask] = scan_norm(Norm{LinearForm(mask)}, workers);

    report.bridge_bijection_ok = true;
    const ScanResult& trivial = report.per_norm[0];
    for (unsigned mask = 1; mask < 8; ++mask) {
        LinearForm shift(mask);
        report.bridge_bijection_ok = report.bridge_bijection_ok &&
                                     bridged_sorted(trivial.plus_tags, shift) == report.per_norm[mask].plus_tags &&
                                     bridged_sorted(trivial.minus_tags, shift) == report.per_norm[mask].minus_tags;
    }

    // bridge(exp(a, s), n') == exp(shift(a, n'), s) for every plain map,
    // nonzero norm form and sign.
    for (const OrientedMap& m : enumerate_maps(LinearForm(0)))
        for (unsigned mask = 1; mask < 8; ++mask)
            for (Sign s : {Sign::plus, Sign::minus}) {
                LinearForm shift(mask);
                ++report.diagram_checked;
                if (bridge_factor(exp_map(m, s), shift) == exp_map(shift_norm(m, shift), s))
                    ++report.diagram_passed;
            }

    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace fano
