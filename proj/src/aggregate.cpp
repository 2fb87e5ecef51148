#include "dca/aggregate.hpp"

#include <stdexcept>

namespace dca {

McavReport compute_mcav(std::span<const PresentationRecord> records) {
    McavReport report;
    for (const auto& r : records) {
        auto& score = report.scores[r.antigen];
        ++score.presentations;
        if (r.context == Context::mature) ++score.mature_count;
    }
    for (auto& [id, score] : report.scores)
        score.mcav = static_cast<double>(score.mature_count) /
                     static_cast<double>(score.presentations);
    return report;
}

McavReport compute_mcav(std::span<const PresentationRecord> records,
                        const std::map<AntigenId, std::uint64_t>& deposits) {
    McavReport report = compute_mcav(records);
    for (const auto& [id, count] : deposits) {
        if (count > 0 && !report.scores.contains(id)) report.unpresented.push_back(id);
    }
    return report;
}

std::map<AntigenId, Label> classify(const McavReport& report, double threshold) {
    if (!(threshold >= 0.0 && threshold <= 1.0))
        throw std::invalid_argument("classification threshold must lie in [0,1]");
    std::map<AntigenId, Label> labels;
    for (const auto& [id, score] : report.scores)
        labels[id] = score.mcav > threshold ? Label::anomalous : Label::normal;
    return labels;
}

std::vector<AccuracyRow> accuracy_sweep(const std::map<AntigenId, double>& mcav_by_id,
                                        const std::map<AntigenId, Label>& truth,
                                        std::span<const double> thresholds) {
    for (const auto& [id, mcav] : mcav_by_id) {
        (void)mcav;
        if (!truth.contains(id))
            throw std::invalid_argument("no ground-truth label for scored antigen id " +
                                        std::to_string(id));
    }

    std::vector<AccuracyRow> rows;
    rows.reserve(thresholds.size());
    for (double t : thresholds) {
        AccuracyRow row;
        row.threshold = t;
        for (const auto& [id, mcav] : mcav_by_id) {
            const bool predicted_anomalous = mcav > t;
            const bool is_anomalous = truth.at(id) == Label::anomalous;
            if (predicted_anomalous && is_anomalous) ++row.true_positives;
            else if (!predicted_anomalous && !is_anomalous) ++row.true_negatives;
            else if (predicted_anomalous) ++row.false_positives;
            else ++row.false_negatives;
        }
        const std::uint64_t total = mcav_by_id.size();
        row.accuracy = total == 0 ? 0.0
                                  : static_cast<double>(row.true_positives + row.true_negatives) /
                                        static_cast<double>(total);
        rows.push_back(row);
    }
    return rows;
}

std::vector<AccuracyRow> accuracy_sweep(const McavReport& report,
                                        const std::map<AntigenId, Label>& truth,
                                        std::span<const double> thresholds) {
    std::map<AntigenId, double> mcav_by_id;
    for (const auto& [id, score] : report.scores) mcav_by_id[id] = score.mcav;
    return accuracy_sweep(mcav_by_id, truth, thresholds);
}

std::vector<double> default_thresholds() {
    std::vector<double> thresholds;
    for (int i = 0; i <= 10; ++i) thresholds.push_back(static_cast<double>(i) / 10.0);
    return thresholds;
}

std::map<AntigenId, double> presentation_ratio(
    std::span<const PresentationRecord> records,
    const std::map<AntigenId, std::uint64_t>& deposits) {
    std::map<AntigenId, std::uint64_t> presented;
    for (const auto& r : records) ++presented[r.antigen];

    for (const auto& [id, count] : presented) {
        auto it = deposits.find(id);
        const std::uint64_t deposited = it == deposits.end() ? 0 : it->second;
        if (count > deposited)
            throw std::logic_error("antigen id " + std::to_string(id) + " presented " +
                                   std::to_string(count) + " times but deposited only " +
                                   std::to_string(deposited) + "; accounting bug");
    }

    std::map<AntigenId, double> ratios;
    for (const auto& [id, deposited] : deposits) {
        if (deposited == 0) continue;
        auto it = presented.find(id);
        const std::uint64_t count = it == presented.end() ? 0 : it->second;
        ratios[id] = static_cast<double>(count) / static_cast<double>(deposited);
    }
    return ratios;
}

const char* to_string(Context c) {
    return c == Context::mature ? "mature" : "semi-mature";
}

const char* to_string(Label l) { return l == Label::anomalous ? "anomalous" : "normal"; }

Context context_from_string(const std::string& s) {
    if (s == "mature") return Context::mature;
    if (s == "semi-mature") return Context::semi_mature;
    throw std::invalid_argument("unknown context '" + s + "'");
}

Label label_from_string(const std::string& s) {
    if (s == "anomalous") return Label::anomalous;
    if (s == "normal") return Label::normal;
    throw std::invalid_argument("unknown label '" + s + "'");
}

}  // namespace dca
