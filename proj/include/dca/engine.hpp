#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "dca/rng.hpp"
#include "dca/tissue.hpp"
#include "dca/types.hpp"

namespace dca {

// One sampling agent. Signals are overwritten from the tissue every cycle;
// outputs accumulate until costimulation crosses the migration threshold.
struct DendriticCell {
    SignalVector signals{};
    std::vector<AntigenId> antigen;    // bounded by EngineConfig::antigen_capacity
    OutputVector cumulative{};
    double migration_threshold = 0.0;  // constant between resets
    std::uint64_t age = 0;             // cycles since creation/reset
};

struct EngineConfig {
    std::size_t population_size = 100;  // M
    std::size_t antigen_capacity = 50;  // N, per cell
    std::size_t sample_count = 1;       // Q, antigen sampled per cell per cycle
    std::size_t tissue_capacity = 500;  // K
    std::uint64_t max_cycles = 120;     // L
    double threshold_low = 0.3;         // migration thresholds drawn uniformly
    double threshold_high = 0.7;        //   from [low, high], redrawn on reset
    WeightMatrix weights = WeightMatrix::defaults();
    std::uint64_t rng_seed = 1;

    void validate() const;  // throws naming the violated bound
};

// One tissue-facing input event. Signal events overwrite the compartment
// signals; antigen events deposit one antigen instance.
struct TissueEvent {
    enum class Kind { signals, antigen };

    double timestamp = 0.0;  // virtual seconds; one cell cycle per second
    Kind kind = Kind::signals;
    SignalVector signals{};  // valid for Kind::signals
    AntigenId antigen = 0;   // valid for Kind::antigen

    static TissueEvent signal_update(double ts, const SignalVector& s);
    static TissueEvent antigen_deposit(double ts, AntigenId a);
};

struct CycleSummary {
    std::size_t migrations = 0;       // cells recycled this cycle (incl. silent)
    std::size_t antigen_sampled = 0;  // antigen pulled from the tissue store
};

struct RunStats {
    std::uint64_t cycles_run = 0;
    std::uint64_t migrations = 0;
    std::uint64_t silent_migrations = 0;  // migrated holding no antigen
    std::uint64_t presented = 0;          // presentation records emitted
    std::uint64_t drained = 0;            // subset of presented, emitted by the final drain
    std::uint64_t deposited = 0;          // antigen events applied to the tissue
    std::uint64_t sampled = 0;
    std::uint64_t dropped = 0;         // rejected by a full tissue store
    std::uint64_t discarded = 0;       // sampled but over cell capacity
    std::uint64_t residual_tissue = 0; // left in the store at termination
    std::uint64_t residual_cells = 0;  // left inside cells at termination
    std::uint64_t unapplied_events = 0;  // stream events beyond the cycle cap

    std::uint64_t unpresented() const { return residual_tissue + residual_cells; }

    // deposited == presented + dropped + discarded + residuals
    bool conserved() const;
};

// The population half of the update stage. Cells are processed in index
// order within a cycle: sampling mutates the shared store, so the order is
// part of the deterministic contract.
//
// Rng draw sequence, which reference simulations must mirror exactly:
//   construction     - one threshold draw per cell, in index order;
//   each cycle, cell - one index draw per antigen actually sampled, then one
//                      threshold draw if the cell migrates.
class DcPopulation {
public:
    DcPopulation(const EngineConfig& cfg, Rng& rng);

    // One cell cycle: sample, copy signals, accumulate outputs, migrate on
    // csm > threshold. A migrating cell emits one record per stored antigen
    // instance (mature context iff cumulative mat > semi) and is recycled
    // with a fresh threshold; a cell holding no antigen migrates silently.
    CycleSummary cycle(std::uint64_t cycle_index, TissueCompartment& tissue,
                       Rng& rng, std::vector<PresentationRecord>& sink);

    // Terminal flush: cells still holding antigen present it with their
    // current context, provided they accumulated any output at all. A cell
    // whose cumulative output is exactly zero has seen no signal evidence;
    // its antigen stays aboard and is reported as residual rather than
    // being presented under the degenerate tie context.
    void drain(std::uint64_t cycle_index, std::vector<PresentationRecord>& sink);

    const std::vector<DendriticCell>& cells() const { return cells_; }

    std::uint64_t migrations() const { return migrations_; }
    std::uint64_t silent_migrations() const { return silent_migrations_; }
    std::uint64_t presented() const { return presented_; }
    std::uint64_t drained() const { return drained_; }
    std::uint64_t discarded() const { return discarded_; }
    std::uint64_t residual_antigen() const;

private:
    void reset_cell(DendriticCell& cell, Rng& rng);

    EngineConfig cfg_;
    std::vector<DendriticCell> cells_;
    std::uint64_t migrations_ = 0;
    std::uint64_t silent_migrations_ = 0;
    std::uint64_t presented_ = 0;
    std::uint64_t drained_ = 0;
    std::uint64_t discarded_ = 0;
};

struct RunResult {
    RunStats stats;
    std::vector<PresentationRecord> log;
    std::map<AntigenId, std::uint64_t> deposits;  // per-id deposit attempts
};

// Replays a time-ordered event stream against a fresh tissue compartment and
// population at one cell cycle per second of virtual time. An event lands in
// the cycle its timestamp floors to. Cycling continues while events remain
// or the store holds antigen, capped at max_cycles; the population is then
// drained (drain records carry cycle == cycles_run).
//
// Fully deterministic: identical (cfg, events) give an identical log.
RunResult run_session(const EngineConfig& cfg, std::span<const TissueEvent> events);

}  // namespace dca
