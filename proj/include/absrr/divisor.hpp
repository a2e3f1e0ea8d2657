#pragma once

#include "absrr/exact_arith.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace absrr {

/// Deterministic Miller-Rabin over the full 64-bit range.
bool is_prime(std::uint64_t n);

/// A logarithmic quantity carried multiplicatively. The float is display
/// only; every decision uses the exact value.
struct LogValue {
    PosRational multiplicative;
    double approx;  // ln(multiplicative)

    static LogValue of(const PosRational& v);
};

/// Thrown when an element enumeration would be too large; carries the
/// exact cardinality instead.
class EnumerationGuardError : public std::runtime_error {
public:
    explicit EnumerationGuardError(mpz_class cardinality)
        : std::runtime_error("enumeration refused: " + cardinality.get_str() + " elements"),
          cardinality_(std::move(cardinality)) {}
    const mpz_class& cardinality() const { return cardinality_; }

private:
    mpz_class cardinality_;
};

/// Divisor on the compactified arithmetic spectrum: a finitely supported
/// map prime -> integer exponent plus a positive rational archimedean
/// multiplier lambda (= e^a). Immutable after construction.
class ArakelovDivisor {
public:
    using FinitePart = std::map<std::uint64_t, long>;

    /// Zero divisor (empty support, lambda = 1).
    ArakelovDivisor() = default;

    /// Validates that all keys are prime; zero exponents are pruned.
    ArakelovDivisor(FinitePart finite, PosRational lambda);

    /// K = -2{2}.
    static ArakelovDivisor canonical();

    /// Archimedean-only divisor with the given multiplier.
    static ArakelovDivisor archimedean(PosRational lambda);

    /// div(q) for q != 0: exponent -v_p(q) at each prime p dividing q,
    /// lambda = |q|. Its degree is exactly zero (product formula).
    static ArakelovDivisor principal(const Rational& q);

    const FinitePart& finite_part() const { return finite_; }
    const PosRational& arch_multiplier() const { return lambda_; }

    /// exp(deg D) = lambda * prod p^(a_p), exact.
    PosRational exp_degree() const;

    /// The linearly equivalent archimedean-only divisor: lambda' = exp(deg D).
    ArakelovDivisor reduce() const;

    /// m = prod p^(-a_p); the rationals integral at every finite place of D
    /// form exactly the lattice m*Z.
    PosRational lattice_generator() const;

    /// Enumerates {q in m*Z : |q| <= lambda}, sorted ascending. Throws
    /// EnumerationGuardError (carrying the cardinality) when
    /// exp(deg D) > 10^9.
    std::vector<Rational> h0_elements() const;

    /// 2*floor(exp(deg D)) + 1 (so 1 whenever exp(deg D) < 1).
    mpz_class h0_cardinality() const;

    /// Text form "p1:e1,p2:e2;lambda=p/q" (primes strictly increasing;
    /// finite part may be empty, e.g. ";lambda=3/2").
    static ArakelovDivisor parse(std::string_view spec);
    std::string render() const;

    bool operator==(const ArakelovDivisor&) const = default;

private:
    FinitePart finite_;
    PosRational lambda_;
};

/// Exponentwise combination: finite parts add (sign = +1) or subtract
/// (sign = -1), lambda multiplies or divides accordingly.
ArakelovDivisor combine(const ArakelovDivisor& d1, const ArakelovDivisor& d2, int sign);

}  // namespace absrr
