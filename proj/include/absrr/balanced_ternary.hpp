#pragma once

#include "absrr/exact_arith.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace absrr {

/// Base-3 numeral with digits in {-1, 0, +1}, least-significant first.
/// Canonical form has no trailing zero digit; the empty vector encodes 0.
/// Digitwise addition with carries realizes integer addition (the carry at
/// each position stays in {-1, 0, +1}), and the lexicographic order on
/// digit vectors read from the most significant position coincides with the
/// integer order of the decoded values.
class BalancedTernary {
public:
    using Digit = std::int8_t;

    BalancedTernary() = default;  // zero

    /// Unique balanced-ternary representation of n.
    static BalancedTernary encode(const mpz_class& n);

    /// Validates digits (must be -1, 0 or +1) and strips trailing zeros.
    static BalancedTernary from_digits(std::vector<Digit> digits);

    /// Parses the textual form: characters over {T, 0, 1}, most-significant
    /// first, where T denotes -1 (e.g. 5 <-> "1TT"). "0" parses to zero.
    static BalancedTernary parse(std::string_view text);

    mpz_class decode() const;

    const std::vector<Digit>& digits() const { return digits_; }
    std::size_t size() const { return digits_.size(); }
    bool is_zero() const { return digits_.empty(); }

    /// Digitwise sum with carry propagation.
    BalancedTernary operator+(const BalancedTernary& rhs) const;

    /// Lexicographic comparison from the most significant digit after
    /// zero-padding to a common length; agrees with integer order.
    std::strong_ordering operator<=>(const BalancedTernary& rhs) const;
    bool operator==(const BalancedTernary& rhs) const { return digits_ == rhs.digits_; }

    /// Most-significant-first text over {T, 0, 1}; "0" for zero.
    std::string str() const;

private:
    std::vector<Digit> digits_;
};

/// Partial sum of the balanced-ternary expansion of x through digit index
/// -m, i.e. the multiple of 3^(-m) whose distance to x is at most
/// 3^(-m)/2. On an exact tie the kept prefix is the one leaving remainder
/// +3^(-m)/2 (the discarded tail is then all +1 digits), so
/// result = ceil(x * 3^m - 1/2) * 3^(-m).
Rational truncate_expand(const Rational& x, unsigned long m);

}  // namespace absrr
