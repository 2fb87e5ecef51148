#include "dca/types.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dca {

namespace {

constexpr const char* kOutputNames[3] = {"csm", "semi", "mat"};

bool in_unit(double v) { return v >= 0.0 && v <= 1.0; }

}  // namespace

bool SignalVector::finite() const {
    return std::isfinite(pamp) && std::isfinite(danger) && std::isfinite(safe) &&
           std::isfinite(inflammatory);
}

bool SignalVector::valid() const {
    return finite() && in_unit(pamp) && in_unit(danger) && in_unit(safe) &&
           in_unit(inflammatory);
}

OutputVector& OutputVector::operator+=(const OutputVector& rhs) {
    csm += rhs.csm;
    semi += rhs.semi;
    mat += rhs.mat;
    return *this;
}

bool OutputVector::all_zero() const { return csm == 0.0 && semi == 0.0 && mat == 0.0; }

WeightMatrix WeightMatrix::defaults() {
    WeightMatrix m;
    m.w = {{{2.0, 1.0, 2.0},    // csm
            {0.0, 0.0, 3.0},    // semi
            {2.0, 1.0, -3.0}}}; // mat
    return m;
}

double WeightMatrix::abs_row_sum(std::size_t row) const {
    double sum = 0.0;
    for (double v : w[row]) sum += std::abs(v);
    return sum;
}

void WeightMatrix::validate() const {
    for (std::size_t p = 0; p < 3; ++p) {
        for (double v : w[p]) {
            if (!std::isfinite(v))
                throw std::invalid_argument(std::string("weight row '") + kOutputNames[p] +
                                            "' contains a non-finite value");
        }
        if (abs_row_sum(p) <= 0.0)
            throw std::invalid_argument(std::string("weight row '") + kOutputNames[p] +
                                        "' has zero absolute sum; normaliser undefined");
    }
}

OutputVector transform(const SignalVector& signals, const WeightMatrix& weights) {
    if (!signals.finite())
        throw std::invalid_argument("transform: non-finite signal input");
    weights.validate();

    const double s[3] = {signals.pamp, signals.danger, signals.safe};
    const double amplification = 1.0 + signals.inflammatory;

    double out[3];
    for (std::size_t p = 0; p < 3; ++p) {
        double num = 0.0;
        for (std::size_t j = 0; j < 3; ++j) num += weights.w[p][j] * s[j];
        out[p] = num / weights.abs_row_sum(p) * amplification;
    }
    return OutputVector{out[0], out[1], out[2]};
}

Context presentation_context(const OutputVector& cumulative) {
    return cumulative.mat > cumulative.semi ? Context::mature : Context::semi_mature;
}

}  // namespace dca
