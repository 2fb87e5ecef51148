#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "dca/session.hpp"

namespace dca {

struct GeneratedSource {
    SessionKind kind = SessionKind::attack;
    std::uint64_t duration_s = 120;
    std::uint64_t seed = 1;
};

struct FileSource {
    std::filesystem::path signal_path;
    std::filesystem::path antigen_path;
    std::optional<std::filesystem::path> truth_path;
    std::optional<std::filesystem::path> maxima_path;
};

// One experiment: a signal mapping, an engine configuration, and a session
// analysed `repetitions` times with per-run seeds derived from the master
// engine seed. m4/m5 require per-cell antigen capacity 1.
struct ExperimentSpec {
    Mapping mapping = Mapping::m1;
    EngineConfig engine{};
    std::uint64_t repetitions = 3;
    std::variant<GeneratedSource, FileSource> source = GeneratedSource{};
    SignalMaxima maxima{};  // used when the source supplies no maxima file
    std::string out_dir;    // empty: caller decides where reports go

    void validate() const;
};

struct RunOutput {
    std::vector<PresentationRecord> log;
    McavReport mcav;
    RunStats stats;
    std::map<AntigenId, std::uint64_t> deposits;
    std::map<AntigenId, double> ratios;  // presented / deposited
};

struct McavSummaryRow {
    AntigenId antigen = 0;
    std::uint64_t runs_scored = 0;  // repetitions in which the id was presented
    double mean_mcav = 0.0;         // over the scored repetitions
    double stdev_mcav = 0.0;        // sample stdev; 0 when scored once
};

struct ExperimentReport {
    std::vector<RunOutput> runs;          // ordered by run index
    std::vector<McavSummaryRow> summary;  // per id, ordered by id
    std::map<AntigenId, Label> truth;     // empty when unknown
    std::vector<AccuracyRow> accuracy;    // sweep over mean mcav; empty without truth
};

// Executes the experiment. Each repetition owns its engine, tissue and log;
// run r uses seed derive_seed(engine.rng_seed, r), so per-run outputs do not
// depend on execution order. run_experiment fans repetitions out across
// OpenMP threads when available; run_experiment_serial is the reference
// implementation and produces identical reports.
ExperimentReport run_experiment(const ExperimentSpec& spec);
ExperimentReport run_experiment_serial(const ExperimentSpec& spec);

// One repetition in isolation (same per-run seed derivation).
RunOutput run_single(const ExperimentSpec& spec, std::uint64_t run_index);

// Experiment configuration as JSON. Loading rejects unknown keys and
// out-of-range values naming the offending key path; missing keys fall back
// to the default parameter set. Dumping materialises every default, so
// dump(load(dump(load(c)))) == dump(load(c)).
ExperimentSpec load_spec(const std::string& json_text);
ExperimentSpec load_spec_file(const std::filesystem::path& path);
std::string dump_spec(const ExperimentSpec& spec);

// Report artefacts (delimited text, deterministic bytes).
std::string presentations_csv(std::span<const PresentationRecord> records);
std::string mcav_csv(const McavReport& report);
std::string antigen_counts_csv(const RunOutput& run);  // deposited/presented/ratio per id
std::string run_stats_csv(std::span<const RunOutput> runs);
std::string mcav_summary_csv(std::span<const McavSummaryRow> rows);
std::string accuracy_csv(std::span<const AccuracyRow> rows);

// Every artefact of the report concatenated; byte-identical for identical
// specs.
std::string serialize_report(const ExperimentReport& report);

// Writes the full report set (per-run logs, mcav tables, antigen counts,
// run stats, mcav summary, accuracy table, effective config) under dir.
void write_report(const std::filesystem::path& dir, const ExperimentSpec& spec,
                  const ExperimentReport& report);

std::vector<PresentationRecord> read_presentation_log(const std::filesystem::path& path);
std::map<AntigenId, std::uint64_t> read_deposits(const std::filesystem::path& path);

}  // namespace dca
