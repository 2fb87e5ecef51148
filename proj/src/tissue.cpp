#include "dca/tissue.hpp"

#include <stdexcept>

namespace dca {

TissueCompartment::TissueCompartment(std::size_t capacity) : capacity_(capacity) {
    if (capacity_ == 0)
        throw std::invalid_argument("tissue capacity must be at least 1");
    store_.reserve(capacity_);
}

void TissueCompartment::update_signals(const SignalVector& s) {
    if (!s.valid())
        throw std::invalid_argument("signal update outside [0,1] or non-finite");
    signals_ = s;
}

TissueCompartment::Deposit TissueCompartment::deposit_antigen(AntigenId a) {
    ++deposited_;
    if (store_.size() >= capacity_) {
        ++dropped_;
        return Deposit::dropped;
    }
    store_.push_back(a);
    return Deposit::accepted;
}

std::vector<AntigenId> TissueCompartment::sample_antigen(std::size_t q, Rng& rng) {
    std::vector<AntigenId> out;
    out.reserve(std::min(q, store_.size()));
    for (std::size_t i = 0; i < q && !store_.empty(); ++i) {
        const std::size_t idx = uniform_index(rng, store_.size());
        out.push_back(store_[idx]);
        store_.erase(store_.begin() + static_cast<std::ptrdiff_t>(idx));
        ++sampled_;
    }
    return out;
}

bool TissueCompartment::conserved() const {
    return deposited_ == sampled_ + dropped_ + store_.size();
}

}  // namespace dca
