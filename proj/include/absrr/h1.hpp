#pragma once

#include "absrr/divisor.hpp"
#include "absrr/exact_arith.hpp"

#include <vector>

namespace absrr {

/// Reduction of a rational into [0, 1).
Rational circle_reduce(const Rational& x);

/// Translation-invariant circle distance: min(|x - y| mod 1, 1 - that).
Rational circle_distance(const Rational& x, const Rational& y);

/// Generating set for the circle with tolerance lambda: the negative
/// powers 3^(-1), ..., 3^(-m).
struct CircleGenSet {
    PosRational lambda;
    std::vector<Rational> generators;  // exact rationals in (0, 1)
    long m = 0;
};

/// Dimension of the circle with tolerance lambda: 0 for lambda >= 1/2,
/// otherwise the smallest k with 2 * lambda * 3^k >= 1.
long dim_u1(const PosRational& lambda);

/// The explicit cover {3^(-1), ..., 3^(-m)} with m = dim_u1(lambda); empty
/// (m = 0) when lambda >= 1/2. The result always passes
/// verify_circle_cover.
CircleGenSet circle_genset(const PosRational& lambda);

/// Exact decision of the two generating-set conditions on the circle:
/// (a) the generators are pairwise farther apart than lambda, and (b) the
/// closed lambda-balls around all 3^|F| coefficient sums cover the circle
/// (equivalently, no circular gap between consecutive sums exceeds
/// 2*lambda). Throws on |F| > 16 or duplicate generators mod 1.
bool verify_circle_cover(const PosRational& lambda, const std::vector<Rational>& gens);

/// dim H1 = dim of the circle at lambda = exp(deg D); invariant under
/// linear equivalence.
long dim_h1(const ArakelovDivisor& d);

}  // namespace absrr
