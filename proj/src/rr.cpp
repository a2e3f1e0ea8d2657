#include "absrr/rr.hpp"

#include "absrr/h0.hpp"
#include "absrr/h1.hpp"

#include <cmath>
#include <stdexcept>

namespace absrr {

long ceil_prime_log3(const PosRational& q) {
    if (q.value() >= 1)
        return ceil_log3(q);
    return -ceil_log3(q.reciprocal());
}

bool in_exceptional_L(const PosRational& exp_deg) {
    Rational twice = 2 * exp_deg.value();
    if (twice <= 1)
        return false;  // needs 3^k < 2*lambda with k >= 0
    long k = ceil_log3(PosRational(Rational(twice))) - 1;
    mpz_class pk = pow3_z(static_cast<unsigned long>(k));
    return Rational(pk) < twice && twice < Rational(pk + 1);
}

int indicator_L(const ArakelovDivisor& d) {
    return in_exceptional_L(d.exp_degree()) ? 1 : 0;
}

long euler_characteristic(const ArakelovDivisor& d) {
    return dim_h0(d) - dim_h1(d);
}

RRReport rr_verify(const ArakelovDivisor& d) {
    RRReport r;
    r.divisor = d;
    r.exp_deg = d.exp_degree();
    r.h0 = dim_h0(d);
    r.h1 = dim_h1(d);
    r.euler = r.h0 - r.h1;
    r.rhs_ceil = ceil_prime_log3(PosRational(Rational(2 * r.exp_deg.value())));
    r.in_L = in_exceptional_L(r.exp_deg) ? 1 : 0;
    r.rhs = r.rhs_ceil - r.in_L;
    r.consistent = r.euler == r.rhs;
    return r;
}

SerreReport serre_verify(const ArakelovDivisor& d) {
    SerreReport r;
    r.divisor = d;
    r.lambda = d.exp_degree();
    ArakelovDivisor complement = combine(ArakelovDivisor::canonical(), d, -1);
    r.exp_deg_complement = complement.exp_degree();
    r.dim_h0_complement = dim_h0(complement);
    // character bound 1/(4*lambda), reduced to the integer interval module
    PosRational bound = PosRational(Rational(1, 4)) / r.lambda;
    r.dim_dual_characters = dim_hzn(floor_rat(bound));
    r.degree_relation_ok = r.exp_deg_complement * r.lambda == PosRational(Rational(1, 4));
    r.consistent = r.degree_relation_ok && r.dim_h0_complement == r.dim_dual_characters;
    return r;
}

PosRational hom_bound(const PosRational& lambda, const PosRational& mu) {
    return mu / lambda;
}

LMeasure l_measure(int k_max) {
    if (k_max < 0)
        throw std::domain_error("l_measure requires k_max >= 0");
    LMeasure r;
    r.terms = k_max;
    double p = 1.0;
    for (int k = 0; k <= k_max; ++k) {
        r.value += std::log1p(p);
        p /= 3.0;
    }
    // log(1 + x) <= x gives tail <= sum_{k > k_max} 3^(-k) = 3^(-k_max)/2
    r.tail_bound = p * 3.0 / 2.0;
    return r;
}

}  // namespace absrr
