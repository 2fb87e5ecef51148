#include "dca/signals.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dca {

void SignalMaxima::validate() const {
    if (!(max_pamp > 0.0) || !(max_danger > 0.0) || !(max_delta > 0.0))
        throw std::invalid_argument("signal maxima must all be greater than 0");
    if (!std::isfinite(max_pamp) || !std::isfinite(max_danger) || !std::isfinite(max_delta))
        throw std::invalid_argument("signal maxima must be finite");
}

namespace {

double clamp_unit(double v) { return std::clamp(v, 0.0, 1.0); }

void check_sample(const RawSample& s) {
    if (!std::isfinite(s.timestamp) || !std::isfinite(s.dest_unreachable_per_sec) ||
        !std::isfinite(s.packets_out_per_sec))
        throw std::invalid_argument("raw sample contains a non-finite value");
    if (s.dest_unreachable_per_sec < 0.0 || s.packets_out_per_sec < 0.0)
        throw std::invalid_argument("raw sample rates must be non-negative");
}

}  // namespace

SignalVector derive_signals(const RawSample& current,
                            const std::optional<RawSample>& previous,
                            const SignalMaxima& maxima) {
    maxima.validate();
    check_sample(current);

    SignalVector s;
    s.pamp = clamp_unit(current.dest_unreachable_per_sec / maxima.max_pamp);
    s.danger = clamp_unit(current.packets_out_per_sec / maxima.max_danger);
    if (previous) {
        check_sample(*previous);
        if (current.timestamp < previous->timestamp)
            throw std::invalid_argument("raw sample timestamps must be non-decreasing");
        const double delta =
            std::abs(current.packets_out_per_sec - previous->packets_out_per_sec);
        s.safe = 1.0 - clamp_unit(delta / maxima.max_delta);
    } else {
        // No observed change yet: the stream opens fully safe.
        s.safe = 1.0;
    }
    s.inflammatory = 0.0;
    return s;
}

Mapping mapping_from_string(const std::string& s) {
    if (s == "M1" || s == "m1") return Mapping::m1;
    if (s == "M2" || s == "m2") return Mapping::m2;
    if (s == "M3" || s == "m3") return Mapping::m3;
    if (s == "M4" || s == "m4") return Mapping::m4;
    if (s == "M5" || s == "m5") return Mapping::m5;
    throw std::invalid_argument("unknown mapping '" + s + "' (expected M1..M5)");
}

const char* to_string(Mapping m) {
    switch (m) {
        case Mapping::m1: return "M1";
        case Mapping::m2: return "M2";
        case Mapping::m3: return "M3";
        case Mapping::m4: return "M4";
        case Mapping::m5: return "M5";
    }
    return "M1";
}

SignalMapping SignalMapping::identity() { return SignalMapping{}; }

SignalMapping SignalMapping::swap_pamp_danger() {
    SignalMapping m;
    m.source = {1, 0, 2};
    return m;
}

SignalMapping SignalMapping::swap_pamp_safe() {
    SignalMapping m;
    m.source = {2, 1, 0};
    return m;
}

SignalMapping SignalMapping::pamp_only() {
    SignalMapping m;
    m.enabled = {true, false, false};
    return m;
}

SignalMapping SignalMapping::for_mapping(Mapping m) {
    switch (m) {
        case Mapping::m1: return identity();
        case Mapping::m2: return swap_pamp_danger();
        case Mapping::m3: return swap_pamp_safe();
        case Mapping::m4: return identity();  // capacity change only
        case Mapping::m5: return pamp_only();
    }
    return identity();
}

void SignalMapping::validate() const {
    for (std::size_t slot = 0; slot < 3; ++slot) {
        if (enabled[slot] && source[slot] > 2)
            throw std::invalid_argument("signal mapping slot " + std::to_string(slot) +
                                        " names feature " + std::to_string(source[slot]) +
                                        "; features are 0..2");
    }
}

SignalVector apply_mapping(const SignalVector& s, const SignalMapping& m) {
    m.validate();
    const double features[3] = {s.pamp, s.danger, s.safe};
    SignalVector out;
    out.pamp = m.enabled[0] ? features[m.source[0]] : 0.0;
    out.danger = m.enabled[1] ? features[m.source[1]] : 0.0;
    out.safe = m.enabled[2] ? features[m.source[2]] : 0.0;
    out.inflammatory = s.inflammatory;
    return out;
}

}  // namespace dca
