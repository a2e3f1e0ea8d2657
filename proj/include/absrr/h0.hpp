#pragma once

#include "absrr/divisor.hpp"
#include "absrr/exact_arith.hpp"

#include <optional>
#include <vector>

namespace absrr {

/// Which construction produced a generating set. The two special values
/// admit a minimal generating set whose element sum exceeds n; everywhere
/// else the construction keeps the sum equal to n.
enum class GenSetCase {
    Regular,          // n not exceptional: powers of 3, plus one extra element
    E_ell_zero,       // n = 1 + (3^m - 1)/2, m > 2
    E_ell_positive,   // n = 3^l + (3^m - 1)/2, 0 < l < m
    Special_n2,       // {1, 2}, sum 3 > 2
    Special_n5,       // {1, 2, 3}, sum 6 > 5
};

const char* to_string(GenSetCase c);

/// A candidate generating set for the interval module [-n, n], together
/// with its verification evidence. `surjective` and `mass_ok` are only
/// meaningful when `verified` is true: they are established by exhaustive
/// enumeration of all 3^|F| coefficient vectors, never assumed.
///   surjective: every x in [-n, n] is a signed subset sum within the mass
///               discipline (sum of |coefficient * element| <= n);
///   mass_ok:    the mass bound was never the sole obstruction (everything
///               reachable ignoring the bound is reachable within it).
struct GenSetReport {
    mpz_class n = 0;
    std::vector<mpz_class> generators;  // strictly increasing
    std::size_t cardinality = 0;
    mpz_class sum = 0;
    bool verified = false;
    bool surjective = false;
    bool mass_ok = false;
    GenSetCase special_case = GenSetCase::Regular;
};

/// Minimal generating cardinality of the interval module [-n, n]:
/// the smallest k with 3^k >= 2n + 1.
long dim_hzn(const mpz_class& n);

/// Membership in the exceptional set E = {3^l + (3^m - 1)/2 : 0 <= l < m},
/// where the generic generating-set construction needs repair.
struct ExceptionalE {
    long ell;
    long m;
};
std::optional<ExceptionalE> exceptional_e(const mpz_class& n);

/// The explicit minimal generating set for [-n, n]: powers of 3 topped up
/// by one extra element, with repairs on E and the two special values.
/// When `verify` is set (and n <= 10^6) the report carries exhaustive
/// verification evidence.
GenSetReport genset(const mpz_class& n, bool verify = true);

/// Exhaustively checks an arbitrary candidate set F (distinct, nonzero,
/// |f| <= n, possibly negative) against the interval module [-n, n].
/// Rejects |F| > 24 and n > 10^6.
GenSetReport verify_genset(long long n, const std::vector<long long>& gens);

/// dim H0 = dim of the interval module at n = floor(exp(deg D)); zero when
/// exp(deg D) < 1, invariant under linear equivalence.
long dim_h0(const ArakelovDivisor& d);

}  // namespace absrr
