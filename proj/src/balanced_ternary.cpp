#include "absrr/balanced_ternary.hpp"

#include <algorithm>
#include <stdexcept>

namespace absrr {

namespace {

void strip_trailing_zeros(std::vector<BalancedTernary::Digit>& digits) {
    while (!digits.empty() && digits.back() == 0)
        digits.pop_back();
}

}  // namespace

BalancedTernary BalancedTernary::encode(const mpz_class& n) {
    BalancedTernary result;
    mpz_class rest = n;
    while (rest != 0) {
        // balanced remainder: residue 2 becomes digit -1 with carry
        unsigned long r = mpz_fdiv_ui(rest.get_mpz_t(), 3);
        if (r == 2) {
            result.digits_.push_back(-1);
            rest += 1;
        } else {
            result.digits_.push_back(static_cast<Digit>(r));
            rest -= static_cast<long>(r);
        }
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), 3);
    }
    return result;
}

BalancedTernary BalancedTernary::from_digits(std::vector<Digit> digits) {
    for (Digit d : digits)
        if (d < -1 || d > 1)
            throw std::invalid_argument("balanced-ternary digit out of {-1,0,1}: " +
                                        std::to_string(int(d)));
    strip_trailing_zeros(digits);
    BalancedTernary result;
    result.digits_ = std::move(digits);
    return result;
}

BalancedTernary BalancedTernary::parse(std::string_view text) {
    if (text.empty())
        throw std::invalid_argument("empty balanced-ternary literal");
    std::vector<Digit> digits;
    digits.reserve(text.size());
    for (auto it = text.rbegin(); it != text.rend(); ++it) {
        switch (*it) {
            case 'T': digits.push_back(-1); break;
            case '0': digits.push_back(0); break;
            case '1': digits.push_back(1); break;
            default:
                throw std::invalid_argument(std::string("invalid balanced-ternary character '") +
                                            *it + "'");
        }
    }
    return from_digits(std::move(digits));
}

mpz_class BalancedTernary::decode() const {
    mpz_class value(0);
    for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
        value *= 3;
        value += static_cast<long>(*it);
    }
    return value;
}

BalancedTernary BalancedTernary::operator+(const BalancedTernary& rhs) const {
    const std::size_t n = std::max(digits_.size(), rhs.digits_.size());
    std::vector<Digit> out;
    out.reserve(n + 1);
    int carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        int s = carry;
        if (i < digits_.size()) s += digits_[i];
        if (i < rhs.digits_.size()) s += rhs.digits_[i];
        if (s > 1) {
            s -= 3;
            carry = 1;
        } else if (s < -1) {
            s += 3;
            carry = -1;
        } else {
            carry = 0;
        }
        out.push_back(static_cast<Digit>(s));
    }
    if (carry != 0)
        out.push_back(static_cast<Digit>(carry));
    strip_trailing_zeros(out);
    BalancedTernary result;
    result.digits_ = std::move(out);
    return result;
}

std::strong_ordering BalancedTernary::operator<=>(const BalancedTernary& rhs) const {
    const std::size_t n = std::max(digits_.size(), rhs.digits_.size());
    for (std::size_t i = n; i-- > 0;) {
        int a = i < digits_.size() ? digits_[i] : 0;
        int b = i < rhs.digits_.size() ? rhs.digits_[i] : 0;
        if (a != b)
            return a < b ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string BalancedTernary::str() const {
    if (digits_.empty())
        return "0";
    std::string out;
    out.reserve(digits_.size());
    for (auto it = digits_.rbegin(); it != digits_.rend(); ++it)
        out += (*it == -1 ? 'T' : (*it == 0 ? '0' : '1'));
    return out;
}

Rational truncate_expand(const Rational& x, unsigned long m) {
    mpz_class scale = pow3_z(m);
    // s = ceil(x * 3^m - 1/2): the numerator of (2*num*3^m - den) over 2*den
    mpz_class num = 2 * x.get_num() * scale - x.get_den();
    mpz_class den = 2 * x.get_den();
    mpz_class s;
    mpz_cdiv_q(s.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return make_rational(s, scale);
}

}  // namespace absrr
