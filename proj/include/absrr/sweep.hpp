#pragma once

#include "absrr/divisor.hpp"

#include <cstdint>
#include <vector>

namespace absrr {

/// Deterministic divisor grid for verification sweeps: every coprime
/// lambda = p/q with p, q <= lambda_max as an archimedean divisor, plus
/// every exponent pattern over the given primes paired with six fixed
/// multipliers and one multiplier drawn from the coprime list by index.
class SweepGrid {
public:
    static SweepGrid build(long lambda_max, std::vector<std::uint64_t> primes, int exp_min,
                           int exp_max);

    std::size_t size() const { return size_; }
    ArakelovDivisor divisor(std::size_t index) const;

    const std::vector<PosRational>& lambdas() const { return lambdas_; }

private:
    std::vector<PosRational> lambdas_;
    std::vector<PosRational> fixed_;
    std::vector<std::uint64_t> primes_;
    int exp_min_ = 0;
    int exp_max_ = 0;
    std::size_t patterns_ = 0;
    std::size_t size_ = 0;
};

}  // namespace absrr
