#pragma once

#include <array>
#include <cstdint>

namespace dca {

// Antigen carries no structure: an opaque identifier for the entity being
// classified (a process id in the port-scan setting). Many instances may
// share one id; multiplicity is what the population samples.
using AntigenId = std::uint64_t;

// The four normalised input signal categories at one instant.
struct SignalVector {
    double pamp = 0.0;
    double danger = 0.0;
    double safe = 0.0;
    double inflammatory = 0.0;

    bool finite() const;
    bool valid() const;  // finite and every component in [0, 1]

    friend bool operator==(const SignalVector&, const SignalVector&) = default;
};

struct OutputVector {
    double csm = 0.0;   // costimulation: drives migration
    double semi = 0.0;  // semi-mature cytokine
    double mat = 0.0;   // mature cytokine

    OutputVector& operator+=(const OutputVector& rhs);
    bool all_zero() const;

    friend bool operator==(const OutputVector&, const OutputVector&) = default;
};

// Weights mapping signal categories to output cytokines. Row = output
// (csm, semi, mat), column = category (pamp, danger, safe). Inflammation has
// no weight column; it scales the finished outputs multiplicatively.
struct WeightMatrix {
    std::array<std::array<double, 3>, 3> w{};

    static WeightMatrix defaults();

    double abs_row_sum(std::size_t row) const;
    void validate() const;  // throws when a row normaliser would be zero

    friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;
};

// Fuses one signal snapshot into output cytokine values:
//
//   out_p = (sum_j w[p][j] * s_j) / (sum_j |w[p][j]|) * (1 + inflammatory)
//
// with j running over pamp/danger/safe. Inflammation amplifies the other
// signals and does nothing on its own. Outputs are not clamped: a negative
// mature value is how safe input suppresses maturation.
OutputVector transform(const SignalVector& signals, const WeightMatrix& weights);

enum class Context { semi_mature = 0, mature = 1 };

// mature wins only on strictly greater cumulative mature output; a tie is
// semi-mature.
Context presentation_context(const OutputVector& cumulative);

// One antigen instance presented by a migrating cell.
struct PresentationRecord {
    std::uint64_t cycle = 0;
    AntigenId antigen = 0;
    Context context = Context::semi_mature;

    friend bool operator==(const PresentationRecord&, const PresentationRecord&) = default;
};

}  // namespace dca
