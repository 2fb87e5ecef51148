#pragma once

#include <cstdint>
#include <vector>

#include "dca/rng.hpp"
#include "dca/types.hpp"

namespace dca {

// Shared compartment between the input stream and the cell population: the
// current signal snapshot plus a bounded FIFO antigen store. Single writer;
// the engine serialises updates and cell cycles.
class TissueCompartment {
public:
    enum class Deposit { accepted, dropped };

    explicit TissueCompartment(std::size_t capacity);

    // Overwrites the current signals (no blending or decay). Rejects vectors
    // outside [0, 1].
    void update_signals(const SignalVector& s);
    const SignalVector& signals() const { return signals_; }

    // Appends when there is room; a full store drops the new antigen.
    Deposit deposit_antigen(AntigenId a);

    // Removes and returns up to q antigen chosen uniformly without
    // replacement. Sampled antigen leaves the store, so each deposited
    // instance reaches at most one cell. One rng draw per antigen returned.
    std::vector<AntigenId> sample_antigen(std::size_t q, Rng& rng);

    std::size_t capacity() const { return capacity_; }
    std::size_t stored() const { return store_.size(); }
    const std::vector<AntigenId>& store() const { return store_; }

    std::uint64_t deposited() const { return deposited_; }
    std::uint64_t dropped() const { return dropped_; }
    std::uint64_t sampled() const { return sampled_; }

    // deposited == sampled + dropped + currently stored
    bool conserved() const;

private:
    std::size_t capacity_;
    SignalVector signals_{};
    std::vector<AntigenId> store_;
    std::uint64_t deposited_ = 0;
    std::uint64_t dropped_ = 0;
    std::uint64_t sampled_ = 0;
};

}  // namespace dca
