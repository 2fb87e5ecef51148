#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dca/aggregate.hpp"
#include "dca/engine.hpp"
#include "dca/signals.hpp"

namespace dca {

// A recorded or synthesised monitoring session: the per-second signal log
// and the antigen log, each ordered by timestamp.
struct Session {
    std::vector<RawSample> samples;
    std::vector<AntigenEvent> antigen;
};

enum class SessionKind { control, normal, attack };

SessionKind session_kind_from_string(const std::string& s);
const char* to_string(SessionKind k);

struct TruthEntry {
    AntigenId antigen = 0;
    Label label = Label::normal;

    friend bool operator==(const TruthEntry&, const TruthEntry&) = default;
};

struct GeneratedSession {
    Session session;
    std::vector<TruthEntry> truth;  // ordered by antigen id
    SignalMaxima maxima;            // ceilings the profiles were built against
};

// Synthesises a session. All kinds carry steady background traffic and two
// background processes (shell, daemon). normal adds a smoothly ramped bulk
// transfer with its own process; attack adds a bursty scan window with
// destination-unreachable errors and two scan-side processes labelled
// anomalous. Per-process antigen emission tracks activity. Deterministic in
// (kind, duration, seed).
GeneratedSession generate_session(SessionKind kind, std::uint64_t duration_s,
                                  std::uint64_t seed);

// The transfer/scan window of a generated session, [begin, end) seconds.
// Control sessions have an empty window.
std::pair<std::uint64_t, std::uint64_t> event_window(SessionKind kind,
                                                     std::uint64_t duration_s);

std::map<AntigenId, Label> truth_map(std::span<const TruthEntry> truth);

// Delimited-text session formats: comma separated, one header line, UTF-8.
// Malformed rows and timestamp regressions are reported with file:line.
void write_signal_log(const std::filesystem::path& path, std::span<const RawSample> samples);
void write_antigen_log(const std::filesystem::path& path, std::span<const AntigenEvent> events);
void write_ground_truth(const std::filesystem::path& path, std::span<const TruthEntry> truth);
void write_maxima(const std::filesystem::path& path, const SignalMaxima& maxima);

std::vector<RawSample> read_signal_log(const std::filesystem::path& path);
std::vector<AntigenEvent> read_antigen_log(const std::filesystem::path& path);
std::vector<TruthEntry> read_ground_truth(const std::filesystem::path& path);
SignalMaxima read_maxima(const std::filesystem::path& path);

// Loads and validates both halves of a recorded session.
Session parse_session(const std::filesystem::path& signal_path,
                      const std::filesystem::path& antigen_path);

// Derives signal vectors, applies the mapping, and merges both logs into one
// timestamp-ordered stream. The merge is stable: a signal update precedes an
// antigen deposit carrying the same timestamp.
std::vector<TissueEvent> to_tissue_events(const Session& session,
                                          const SignalMaxima& maxima,
                                          const SignalMapping& mapping);

}  // namespace dca
