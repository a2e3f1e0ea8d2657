#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace absrr {

/// Signed exact rational, always canonical (lowest terms, positive
/// denominator). All arithmetic and comparisons are exact.
using Rational = mpq_class;

/// Builds a canonical rational from numerator/denominator. Throws
/// std::domain_error on zero denominator.
Rational make_rational(const mpz_class& num, const mpz_class& den);

/// Parses "p/q" or "p" (decimal digits, optional leading '-').
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
double to_double(const Rational& q);

/// Strictly positive exact rational: the multiplicative carrier for every
/// quantity stated additively as a logarithm (lambda = e^a, exp(deg D)).
/// Every decision reduces to exact comparisons of such values against
/// integer powers of 3; natural logs appear only in display output.
class PosRational {
public:
    /// Multiplicative identity.
    PosRational() : q_(1) {}

    /// Throws std::domain_error unless q > 0.
    explicit PosRational(const Rational& q);

    /// num/den, reduced. Throws std::domain_error unless the value is > 0.
    PosRational(const mpz_class& num, const mpz_class& den);

    /// Parses "p/q" or "p"; a sign or a zero value is rejected.
    static PosRational parse(std::string_view text);

    const Rational& value() const { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    PosRational operator*(const PosRational& rhs) const;
    PosRational operator/(const PosRational& rhs) const;
    PosRational reciprocal() const;

    /// Exact integer power (negative exponents invert).
    PosRational pow(long e) const;

    std::strong_ordering operator<=>(const PosRational& rhs) const;
    bool operator==(const PosRational& rhs) const { return q_ == rhs.q_; }

    std::string str() const { return to_string(q_); }
    double to_double() const;

private:
    Rational q_;  // invariant: canonical and > 0
};

/// 3^k for k >= 0, as an unbounded integer.
mpz_class pow3_z(unsigned long k);

/// 3^k for any sign of k.
PosRational pow3(long k);

/// The unique k with 3^(k-1) < q <= 3^k, i.e. the smallest k with 3^k >= q.
/// Decided purely by integer comparisons against powers of 3.
long ceil_log3(const PosRational& q);

/// Exact floor of a positive rational.
mpz_class floor_rat(const PosRational& q);

}  // namespace absrr
