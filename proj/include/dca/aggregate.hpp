#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "dca/types.hpp"

namespace dca {

struct AntigenScore {
    std::uint64_t presentations = 0;
    std::uint64_t mature_count = 0;
    double mcav = 0.0;  // mature_count / presentations
};

// Per-antigen-type aggregation of the presentation log. Ids deposited but
// never presented are excluded from scoring and listed separately.
struct McavReport {
    std::map<AntigenId, AntigenScore> scores;
    std::vector<AntigenId> unpresented;
};

McavReport compute_mcav(std::span<const PresentationRecord> records);
McavReport compute_mcav(std::span<const PresentationRecord> records,
                        const std::map<AntigenId, std::uint64_t>& deposits);

enum class Label { normal = 0, anomalous = 1 };

// anomalous iff mcav exceeds the threshold strictly.
std::map<AntigenId, Label> classify(const McavReport& report, double threshold);

struct AccuracyRow {
    double threshold = 0.0;
    std::uint64_t true_positives = 0;
    std::uint64_t true_negatives = 0;
    std::uint64_t false_positives = 0;
    std::uint64_t false_negatives = 0;
    double accuracy = 0.0;  // (TP + TN) / scored ids
};

// Classification accuracy per threshold over the scored ids. Every scored id
// must carry a ground-truth label; a missing label is an error naming the id.
std::vector<AccuracyRow> accuracy_sweep(const std::map<AntigenId, double>& mcav_by_id,
                                        const std::map<AntigenId, Label>& truth,
                                        std::span<const double> thresholds);
std::vector<AccuracyRow> accuracy_sweep(const McavReport& report,
                                        const std::map<AntigenId, Label>& truth,
                                        std::span<const double> thresholds);

// 0.0 to 1.0 at 0.1 intervals.
std::vector<double> default_thresholds();

// presented / deposited per id. deposits must cover every presented id with
// at least the presented count; a shortfall signals an accounting bug.
std::map<AntigenId, double> presentation_ratio(
    std::span<const PresentationRecord> records,
    const std::map<AntigenId, std::uint64_t>& deposits);

const char* to_string(Context c);
const char* to_string(Label l);
Context context_from_string(const std::string& s);
Label label_from_string(const std::string& s);

}  // namespace dca
