#pragma once

#include "absrr/divisor.hpp"
#include "absrr/exact_arith.hpp"

namespace absrr {

/// Odd extension of ceil_log3: the smallest k with 3^k >= q for q >= 1,
/// and -ceil_prime_log3(1/q) for q < 1 (0 at q = 1, where both branches
/// meet).
long ceil_prime_log3(const PosRational& q);

/// Membership of deg D in the exceptional open set L where the H0 formula
/// carries a -1 correction. Exact characterization: some integer k >= 0
/// has 3^k < 2*exp(deg D) < 3^k + 1, endpoints excluded.
bool in_exceptional_L(const PosRational& exp_deg);
int indicator_L(const ArakelovDivisor& d);  // 0 or 1

/// dim H0(D) - dim H1(D).
long euler_characteristic(const ArakelovDivisor& d);

/// Both sides of the index identity, computed along independent paths:
/// the Euler characteristic from the two dimension formulas, and
/// ceil'(log_3(2*exp deg D)) - 1_L from the degree alone. `consistent`
/// must always hold; a mismatch is an implementation defect, not a valid
/// output state.
struct RRReport {
    ArakelovDivisor divisor;
    PosRational exp_deg;
    long h0 = 0;
    long h1 = 0;
    long euler = 0;
    long rhs_ceil = 0;
    int in_L = 0;
    long rhs = 0;
    bool consistent = false;
};

RRReport rr_verify(const ArakelovDivisor& d);

/// Duality check against K = -2{2}: dim H0(K - D) must equal the dimension
/// of the module of characters bounded by 1/(4*lambda), and the degrees
/// must satisfy exp_deg(K - D) * exp_deg(D) = 1/4 exactly.
struct SerreReport {
    ArakelovDivisor divisor;
    PosRational lambda;                // exp(deg D)
    PosRational exp_deg_complement;    // exp(deg (K - D))
    long dim_h0_complement = 0;        // via the divisor path
    long dim_dual_characters = 0;      // via the character-bound path
    bool degree_relation_ok = false;
    bool consistent = false;
};

SerreReport serre_verify(const ArakelovDivisor& d);

/// Norm bound of the internal Hom between bounded real modules:
/// Hom(||.||_lambda, ||.||_mu) is carried by ||.||_(mu/lambda).
PosRational hom_bound(const PosRational& lambda, const PosRational& mu);

/// Partial sums of |L| = sum_{k>=0} log(1 + 3^(-k)), double precision,
/// with the geometric tail bound 3^(-k_max)/2.
struct LMeasure {
    double value = 0;
    double tail_bound = 0;
    int terms = 0;  // highest k included
};

LMeasure l_measure(int k_max);

}  // namespace absrr
