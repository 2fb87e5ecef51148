#include "dca/session.hpp"

#include <algorithm>
#include <stdexcept>

#include "dca/csv.hpp"

namespace dca {

namespace {

// Synthetic process ids. Shell and daemon run for the whole session; the
// transfer and scan-side processes are active only inside the event window.
constexpr AntigenId kShellId = 101;
constexpr AntigenId kDaemonId = 102;
constexpr AntigenId kTransferId = 201;
constexpr AntigenId kScannerId = 301;
constexpr AntigenId kScanViewId = 302;

constexpr double kBaseRate = 20.0;          // packets/s of idle background traffic
constexpr double kTransferPeakRate = 60.0;  // smooth bulk-transfer plateau

std::uint64_t jitter(Rng& rng, std::uint64_t spread) {
    return uniform_index(rng, spread + 1);
}

const char* kSignalHeader = "timestamp,dest_unreachable_per_sec,packets_out_per_sec";
const char* kAntigenHeader = "timestamp,antigen_id";
const char* kTruthHeader = "antigen_id,label";
const char* kMaximaHeader = "max_pamp,max_danger,max_delta";

}  // namespace

SessionKind session_kind_from_string(const std::string& s) {
    if (s == "control") return SessionKind::control;
    if (s == "normal") return SessionKind::normal;
    if (s == "attack") return SessionKind::attack;
    throw std::invalid_argument("unknown session kind '" + s +
                                "' (expected control, normal or attack)");
}

const char* to_string(SessionKind k) {
    switch (k) {
        case SessionKind::control: return "control";
        case SessionKind::normal: return "normal";
        case SessionKind::attack: return "attack";
    }
    return "control";
}

std::pair<std::uint64_t, std::uint64_t> event_window(SessionKind kind,
                                                     std::uint64_t duration_s) {
    if (kind == SessionKind::control) return {0, 0};
    const std::uint64_t begin = duration_s / 3;
    const std::uint64_t length = std::max<std::uint64_t>(1, duration_s / 4);
    return {begin, std::min(duration_s, begin + length)};
}

std::map<AntigenId, Label> truth_map(std::span<const TruthEntry> truth) {
    std::map<AntigenId, Label> m;
    for (const auto& t : truth) m[t.antigen] = t.label;
    return m;
}

GeneratedSession generate_session(SessionKind kind, std::uint64_t duration_s,
                                  std::uint64_t seed) {
    if (duration_s < 1)
        throw std::invalid_argument("session duration must be at least 1 second");

    Rng rng(seed);
    GeneratedSession out;
    out.maxima = SignalMaxima{};
    const auto [win_begin, win_end] = event_window(kind, duration_s);
    const std::uint64_t ramp =
        std::max<std::uint64_t>(1, (win_end - win_begin) / 4);

    out.truth.push_back({kShellId, Label::normal});
    out.truth.push_back({kDaemonId, Label::normal});
    if (kind == SessionKind::normal) out.truth.push_back({kTransferId, Label::normal});
    if (kind == SessionKind::attack) {
        out.truth.push_back({kScannerId, Label::anomalous});
        out.truth.push_back({kScanViewId, Label::anomalous});
    }

    for (std::uint64_t sec = 0; sec < duration_s; ++sec) {
        const bool in_window = sec >= win_begin && sec < win_end;
        double rate = kBaseRate;
        double errors = 0.0;

        if (kind == SessionKind::normal && in_window) {
            // Smooth trapezoid: ramp up, plateau, ramp down.
            const double up = std::min(1.0, static_cast<double>(sec - win_begin + 1) /
                                                static_cast<double>(ramp));
            const double down = std::min(1.0, static_cast<double>(win_end - sec) /
                                                  static_cast<double>(ramp));
            rate = kBaseRate + (kTransferPeakRate - kBaseRate) * std::min(up, down);
        } else if (kind == SessionKind::attack && in_window) {
            // Bursty probing: the rate slams between a low and a high band
            //每 second, and the indiscriminate scan raises error responses.
            if ((sec - win_begin) % 2 == 0)
                rate = 45.0 + uniform_in(rng, 0.0, 10.0);
            else
                rate = 115.0 + uniform_in(rng, 0.0, 25.0);
            errors = 5.0 + uniform_in(rng, 0.0, 5.0);
        }

        out.session.samples.push_back(
            RawSample{static_cast<double>(sec), errors, rate});

        // Antigen emission tracks process activity.
        std::vector<std::pair<AntigenId, std::uint64_t>> emission;
        emission.emplace_back(kShellId, 2 + jitter(rng, 2));
        emission.emplace_back(kDaemonId, 3 + jitter(rng, 2));
        if (kind == SessionKind::normal && in_window)
            emission.emplace_back(kTransferId, 8 + jitter(rng, 3));
        if (kind == SessionKind::attack && in_window) {
            emission.emplace_back(kScannerId, 10 + jitter(rng, 4));
            emission.emplace_back(kScanViewId, 4 + jitter(rng, 2));
        }

        std::uint64_t total = 0;
        for (const auto& [id, count] : emission) total += count;
        std::uint64_t k = 0;
        for (const auto& [id, count] : emission) {
            for (std::uint64_t c = 0; c < count; ++c, ++k) {
                const double ts = static_cast<double>(sec) +
                                  static_cast<double>(k + 1) /
                                      static_cast<double>(total + 1);
                out.session.antigen.push_back(AntigenEvent{ts, id});
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// delimited-text io

void write_signal_log(const std::filesystem::path& path,
                      std::span<const RawSample> samples) {
    std::string text = std::string(kSignalHeader) + "\n";
    for (const auto& s : samples)
        csv::append_row(text, {csv::format_real(s.timestamp),
                               csv::format_real(s.dest_unreachable_per_sec),
                               csv::format_real(s.packets_out_per_sec)});
    csv::write_text_file(path, text);
}

void write_antigen_log(const std::filesystem::path& path,
                       std::span<const AntigenEvent> events) {
    std::string text = std::string(kAntigenHeader) + "\n";
    for (const auto& e : events)
        csv::append_row(text, {csv::format_real(e.timestamp), std::to_string(e.antigen)});
    csv::write_text_file(path, text);
}

void write_ground_truth(const std::filesystem::path& path,
                        std::span<const TruthEntry> truth) {
    std::string text = std::string(kTruthHeader) + "\n";
    for (const auto& t : truth)
        csv::append_row(text, {std::to_string(t.antigen), to_string(t.label)});
    csv::write_text_file(path, text);
}

void write_maxima(const std::filesystem::path& path, const SignalMaxima& maxima) {
    std::string text = std::string(kMaximaHeader) + "\n";
    csv::append_row(text, {csv::format_real(maxima.max_pamp),
                           csv::format_real(maxima.max_danger),
                           csv::format_real(maxima.max_delta)});
    csv::write_text_file(path, text);
}

std::vector<RawSample> read_signal_log(const std::filesystem::path& path) {
    std::vector<RawSample> samples;
    csv::for_each_row(path, kSignalHeader, 3, [&](std::size_t line, const auto& f) {
        RawSample s{csv::parse_real(f[0], path, line), csv::parse_real(f[1], path, line),
                    csv::parse_real(f[2], path, line)};
        if (s.dest_unreachable_per_sec < 0.0 || s.packets_out_per_sec < 0.0)
            throw std::runtime_error(path.string() + ":" + std::to_string(line) +
                                     ": negative rate");
        if (!samples.empty() && s.timestamp < samples.back().timestamp)
            throw std::runtime_error(path.string() + ":" + std::to_string(line) +
                                     ": timestamp regression");
        samples.push_back(s);
    });
    return samples;
}

std::vector<AntigenEvent> read_antigen_log(const std::filesystem::path& path) {
    std::vector<AntigenEvent> events;
    csv::for_each_row(path, kAntigenHeader, 2, [&](std::size_t line, const auto& f) {
        AntigenEvent e{csv::parse_real(f[0], path, line), csv::parse_count(f[1], path, line)};
        if (!events.empty() && e.timestamp < events.back().timestamp)
            throw std::runtime_error(path.string() + ":" + std::to_string(line) +
                                     ": timestamp regression");
        events.push_back(e);
    });
    return events;
}

std::vector<TruthEntry> read_ground_truth(const std::filesystem::path& path) {
    std::vector<TruthEntry> truth;
    csv::for_each_row(path, kTruthHeader, 2, [&](std::size_t line, const auto& f) {
        try {
            truth.push_back({csv::parse_count(f[0], path, line), label_from_string(f[1])});
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error(path.string() + ":" + std::to_string(line) + ": " +
                                     e.what());
        }
    });
    return truth;
}

SignalMaxima read_maxima(const std::filesystem::path& path) {
    SignalMaxima maxima;
    bool seen = false;
    csv::for_each_row(path, kMaximaHeader, 3, [&](std::size_t line, const auto& f) {
        if (seen)
            throw std::runtime_error(path.string() + ":" + std::to_string(line) +
                                     ": expected a single data row");
        maxima = SignalMaxima{csv::parse_real(f[0], path, line),
                              csv::parse_real(f[1], path, line),
                              csv::parse_real(f[2], path, line)};
        seen = true;
    });
    if (!seen) throw std::runtime_error(path.string() + ": missing data row");
    maxima.validate();
    return maxima;
}

Session parse_session(const std::filesystem::path& signal_path,
                      const std::filesystem::path& antigen_path) {
    return Session{read_signal_log(signal_path), read_antigen_log(antigen_path)};
}

std::vector<TissueEvent> to_tissue_events(const Session& session,
                                          const SignalMaxima& maxima,
                                          const SignalMapping& mapping) {
    maxima.validate();
    mapping.validate();

    std::vector<TissueEvent> events;
    events.reserve(session.samples.size() + session.antigen.size());

    std::size_t ai = 0;
    std::optional<RawSample> previous;
    for (const auto& sample : session.samples) {
        // Antigen strictly earlier than this sample goes first; a deposit
        // sharing the timestamp follows the signal update.
        while (ai < session.antigen.size() &&
               session.antigen[ai].timestamp < sample.timestamp) {
            events.push_back(TissueEvent::antigen_deposit(session.antigen[ai].timestamp,
                                                          session.antigen[ai].antigen));
            ++ai;
        }
        const SignalVector derived = derive_signals(sample, previous, maxima);
        events.push_back(
            TissueEvent::signal_update(sample.timestamp, apply_mapping(derived, mapping)));
        previous = sample;
    }
    for (; ai < session.antigen.size(); ++ai)
        events.push_back(TissueEvent::antigen_deposit(session.antigen[ai].timestamp,
                                                      session.antigen[ai].antigen));
    return events;
}

}  // namespace dca
