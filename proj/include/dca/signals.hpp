#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "dca/types.hpp"

namespace dca {

// One per-second measurement row from the monitored host.
struct RawSample {
    double timestamp = 0.0;                 // seconds, non-decreasing
    double dest_unreachable_per_sec = 0.0;  // error rate -> pamp feature
    double packets_out_per_sec = 0.0;       // outbound rate -> danger feature

    friend bool operator==(const RawSample&, const RawSample&) = default;
};

struct AntigenEvent {
    double timestamp = 0.0;
    AntigenId antigen = 0;

    friend bool operator==(const AntigenEvent&, const AntigenEvent&) = default;
};

// Pre-defined ceilings normalising the derived features into [0, 1].
struct SignalMaxima {
    double max_pamp = 10.0;     // dest-unreachable errors per second
    double max_danger = 100.0;  // outbound packets per second
    double max_delta = 60.0;    // packet-rate change per second

    void validate() const;  // all ceilings strictly positive

    friend bool operator==(const SignalMaxima&, const SignalMaxima&) = default;
};

// Derives the four-signal vector from adjacent samples:
//   pamp   = min(errors / max_pamp, 1)
//   danger = min(packets / max_danger, 1)
//   safe   = 1 - min(|packet-rate change| / max_delta, 1)
//   inflammatory = 0
// The first sample of a stream has no observed change, so safe = 1.
// Rejects a sample that steps backwards in time.
SignalVector derive_signals(const RawSample& current,
                            const std::optional<RawSample>& previous,
                            const SignalMaxima& maxima);

// Named experiment presets. m1 is the hand-selected mapping; m2 swaps
// pamp and danger; m3 swaps pamp and safe; m4 is m1 with per-cell antigen
// capacity 1; m5 keeps pamp alone with capacity 1.
enum class Mapping { m1, m2, m3, m4, m5 };

Mapping mapping_from_string(const std::string& s);
const char* to_string(Mapping m);

// Routes the derived features {pamp, danger, safe} into signal slots.
// source[slot] names the feature feeding that slot; a disabled slot reads 0.
struct SignalMapping {
    std::array<std::size_t, 3> source = {0, 1, 2};
    std::array<bool, 3> enabled = {true, true, true};

    static SignalMapping identity();
    static SignalMapping swap_pamp_danger();
    static SignalMapping swap_pamp_safe();
    static SignalMapping pamp_only();
    static SignalMapping for_mapping(Mapping m);

    void validate() const;

    friend bool operator==(const SignalMapping&, const SignalMapping&) = default;
};

// Permutes/zeroes the three feature slots; inflammation passes through.
SignalVector apply_mapping(const SignalVector& s, const SignalMapping& m);

}  // namespace dca
