#include "absrr/sweep.hpp"

#include <numeric>
#include <stdexcept>

namespace absrr {

SweepGrid SweepGrid::build(long lambda_max, std::vector<std::uint64_t> primes, int exp_min,
                           int exp_max) {
    if (lambda_max < 1)
        throw std::invalid_argument("lambda_max must be >= 1");
    if (exp_min > exp_max)
        throw std::invalid_argument("empty exponent range");
    for (auto p : primes)
        if (!is_prime(p))
            throw std::invalid_argument("sweep prime " + std::to_string(p) + " is not prime");

    SweepGrid g;
    for (long p = 1; p <= lambda_max; ++p)
        for (long q = 1; q <= lambda_max; ++q)
            if (std::gcd(p, q) == 1)
                g.lambdas_.emplace_back(p, q);
    g.fixed_ = {PosRational(1, 1),          PosRational(3, 2), PosRational(1, 4),
                PosRational(8, 5),          PosRational(lambda_max, 1),
                PosRational(1, lambda_max)};
    g.primes_ = std::move(primes);
    g.exp_min_ = exp_min;
    g.exp_max_ = exp_max;

    std::size_t span = static_cast<std::size_t>(exp_max - exp_min + 1);
    g.patterns_ = 1;
    for (std::size_t i = 0; i < g.primes_.size(); ++i) {
        g.patterns_ *= span;
        if (g.patterns_ > 2000000)
            throw std::invalid_argument("sweep grid too large");
    }
    g.size_ = g.lambdas_.size() + g.patterns_ * (g.fixed_.size() + 1);
    if (g.size_ > 2000000)
        throw std::invalid_argument("sweep grid too large");
    return g;
}

ArakelovDivisor SweepGrid::divisor(std::size_t index) const {
    if (index < lambdas_.size())
        return ArakelovDivisor::archimedean(lambdas_[index]);
    std::size_t rest = index - lambdas_.size();
    const std::size_t per_pattern = fixed_.size() + 1;
    std::size_t pattern = rest / per_pattern;
    std::size_t which = rest % per_pattern;

    ArakelovDivisor::FinitePart finite;
    std::size_t span = static_cast<std::size_t>(exp_max_ - exp_min_ + 1);
    std::size_t code = pattern;
    for (auto p : primes_) {
        int e = exp_min_ + static_cast<int>(code % span);
        code /= span;
        if (e != 0)
            finite[p] = e;
    }
    PosRational lambda = which < fixed_.size()
                             ? fixed_[which]
                             : lambdas_[(index * 2654435761ULL) % lambdas_.size()];
    return ArakelovDivisor(std::move(finite), std::move(lambda));
}

}  // namespace absrr
