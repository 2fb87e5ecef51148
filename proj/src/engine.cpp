#include "dca/engine.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dca {

void EngineConfig::validate() const {
    auto fail = [](const std::string& what) { throw std::invalid_argument(what); };
    if (population_size < 1) fail("population_size must be at least 1");
    if (antigen_capacity < 1) fail("antigen_capacity must be at least 1");
    if (sample_count < 1) fail("sample_count must be at least 1");
    if (tissue_capacity < 1) fail("tissue_capacity must be at least 1");
    if (max_cycles < 1) fail("max_cycles must be at least 1");
    if (!std::isfinite(threshold_low) || !std::isfinite(threshold_high))
        fail("threshold range must be finite");
    if (threshold_low <= 0.0) fail("threshold_low must be greater than 0");
    if (threshold_low > threshold_high)
        fail("threshold_low must not exceed threshold_high");
    weights.validate();
}

TissueEvent TissueEvent::signal_update(double ts, const SignalVector& s) {
    TissueEvent e;
    e.timestamp = ts;
    e.kind = Kind::signals;
    e.signals = s;
    return e;
}

TissueEvent TissueEvent::antigen_deposit(double ts, AntigenId a) {
    TissueEvent e;
    e.timestamp = ts;
    e.kind = Kind::antigen;
    e.antigen = a;
    return e;
}

bool RunStats::conserved() const {
    return deposited == presented + dropped + discarded + residual_tissue + residual_cells;
}

DcPopulation::DcPopulation(const EngineConfig& cfg, Rng& rng) : cfg_(cfg) {
    cfg_.validate();
    cells_.resize(cfg_.population_size);
    for (auto& cell : cells_) {
        cell.antigen.reserve(cfg_.antigen_capacity);
        cell.migration_threshold = uniform_in(rng, cfg_.threshold_low, cfg_.threshold_high);
    }
}

void DcPopulation::reset_cell(DendriticCell& cell, Rng& rng) {
    cell.signals = SignalVector{};
    cell.antigen.clear();
    cell.cumulative = OutputVector{};
    cell.age = 0;
    cell.migration_threshold = uniform_in(rng, cfg_.threshold_low, cfg_.threshold_high);
}

CycleSummary DcPopulation::cycle(std::uint64_t cycle_index, TissueCompartment& tissue,
                                 Rng& rng, std::vector<PresentationRecord>& sink) {
    CycleSummary summary;
    for (auto& cell : cells_) {
        const auto drawn = tissue.sample_antigen(cfg_.sample_count, rng);
        summary.antigen_sampled += drawn.size();
        for (AntigenId a : drawn) {
            if (cell.antigen.size() < cfg_.antigen_capacity)
                cell.antigen.push_back(a);
            else
                ++discarded_;
        }

        cell.signals = tissue.signals();
        cell.cumulative += transform(cell.signals, cfg_.weights);
        ++cell.age;

        if (cell.cumulative.csm > cell.migration_threshold) {
            if (cell.antigen.empty()) {
                ++silent_migrations_;
            } else {
                const Context ctx = presentation_context(cell.cumulative);
                for (AntigenId a : cell.antigen) {
                    sink.push_back(PresentationRecord{cycle_index, a, ctx});
                    ++presented_;
                }
            }
            ++migrations_;
            ++summary.migrations;
            reset_cell(cell, rng);
        }
    }
    return summary;
}

void DcPopulation::drain(std::uint64_t cycle_index, std::vector<PresentationRecord>& sink) {
    for (auto& cell : cells_) {
        if (cell.antigen.empty() || cell.cumulative.all_zero()) continue;
        const Context ctx = presentation_context(cell.cumulative);
        for (AntigenId a : cell.antigen) {
            sink.push_back(PresentationRecord{cycle_index, a, ctx});
            ++presented_;
            ++drained_;
        }
        cell.antigen.clear();
    }
}

std::uint64_t DcPopulation::residual_antigen() const {
    std::uint64_t total = 0;
    for (const auto& cell : cells_) total += cell.antigen.size();
    return total;
}

RunResult run_session(const EngineConfig& cfg, std::span<const TissueEvent> events) {
    cfg.validate();
    for (std::size_t i = 0; i + 1 < events.size(); ++i) {
        if (events[i + 1].timestamp < events[i].timestamp)
            throw std::invalid_argument("event stream not ordered by timestamp (index " +
                                        std::to_string(i + 1) + ")");
    }
    if (!events.empty() && events.front().timestamp < 0.0)
        throw std::invalid_argument("event timestamps must be non-negative");

    RunResult result;
    Rng rng(cfg.rng_seed);
    TissueCompartment tissue(cfg.tissue_capacity);
    DcPopulation population(cfg, rng);

    std::size_t next = 0;
    std::uint64_t cycle = 0;
    while (cycle < cfg.max_cycles && (next < events.size() || tissue.stored() > 0)) {
        // Events land in the cycle their timestamp floors to.
        while (next < events.size() &&
               events[next].timestamp < static_cast<double>(cycle + 1)) {
            const TissueEvent& e = events[next++];
            if (e.kind == TissueEvent::Kind::signals) {
                tissue.update_signals(e.signals);
            } else {
                tissue.deposit_antigen(e.antigen);
                ++result.deposits[e.antigen];
            }
        }
        population.cycle(cycle, tissue, rng, result.log);
        ++cycle;
    }
    population.drain(cycle, result.log);

    RunStats& stats = result.stats;
    stats.cycles_run = cycle;
    stats.migrations = population.migrations();
    stats.silent_migrations = population.silent_migrations();
    stats.presented = population.presented();
    stats.drained = population.drained();
    stats.deposited = tissue.deposited();
    stats.sampled = tissue.sampled();
    stats.dropped = tissue.dropped();
    stats.discarded = population.discarded();
    stats.residual_tissue = tissue.stored();
    stats.residual_cells = population.residual_antigen();
    stats.unapplied_events = events.size() - next;
    return result;
}

}  // namespace dca
