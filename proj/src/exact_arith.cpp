#include "absrr/exact_arith.hpp"

#include <cctype>
#include <stdexcept>

namespace absrr {

namespace {

mpz_class parse_integer(std::string_view text, bool allow_sign) {
    if (text.empty())
        throw std::invalid_argument("empty integer literal");
    std::size_t i = 0;
    if (allow_sign && (text[0] == '-' || text[0] == '+'))
        i = 1;
    if (i == text.size())
        throw std::invalid_argument("integer literal has no digits");
    for (std::size_t j = i; j < text.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            throw std::invalid_argument("invalid character in integer literal: '" +
                                        std::string(text) + "'");
    return mpz_class(std::string(text));
}

}  // namespace

Rational make_rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text, true));
    mpz_class num = parse_integer(text.substr(0, slash), true);
    mpz_class den = parse_integer(text.substr(slash + 1), false);
    return make_rational(num, den);
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) {
    return q.get_d();
}

PosRational::PosRational(const Rational& q) : q_(q) {
    q_.canonicalize();
    if (q_ <= 0)
        throw std::domain_error("PosRational must be > 0, got " + absrr::to_string(q_));
}

PosRational::PosRational(const mpz_class& num, const mpz_class& den)
    : PosRational(make_rational(num, den)) {}

PosRational PosRational::parse(std::string_view text) {
    if (!text.empty() && (text[0] == '-' || text[0] == '+'))
        throw std::invalid_argument("PosRational literal must be unsigned: '" +
                                    std::string(text) + "'");
    return PosRational(parse_rational(text));
}

PosRational PosRational::operator*(const PosRational& rhs) const {
    return PosRational(Rational(q_ * rhs.q_));
}

PosRational PosRational::operator/(const PosRational& rhs) const {
    return PosRational(Rational(q_ / rhs.q_));
}

PosRational PosRational::reciprocal() const {
    return PosRational(make_rational(q_.get_den(), q_.get_num()));
}

PosRational PosRational::pow(long e) const {
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q_.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), q_.get_den().get_mpz_t(), k);
    return e < 0 ? PosRational(den, num) : PosRational(num, den);
}

std::strong_ordering PosRational::operator<=>(const PosRational& rhs) const {
    int c = mpq_cmp(q_.get_mpq_t(), rhs.q_.get_mpq_t());
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

double PosRational::to_double() const {
    return q_.get_d();
}

mpz_class pow3_z(unsigned long k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 3, k);
    return r;
}

PosRational pow3(long k) {
    mpz_class p = pow3_z(static_cast<unsigned long>(k < 0 ? -k : k));
    return k < 0 ? PosRational(1, p) : PosRational(p, 1);
}

long ceil_log3(const PosRational& q) {
    const mpz_class& num = q.value().get_num();
    const mpz_class& den = q.value().get_den();
    if (num > den) {
        // smallest k >= 0 with 3^k * den >= num
        long k = 0;
        mpz_class pw(1);
        while (pw * den < num) {
            pw *= 3;
            ++k;
        }
        return k;
    }
    // q <= 1: largest j >= 0 with 3^j <= 1/q, then k = -j
    long j = 0;
    mpz_class pw(1);
    while (pw * 3 * num <= den) {
        pw *= 3;
        ++j;
    }
    return -j;
}

mpz_class floor_rat(const PosRational& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.value().get_num().get_mpz_t(), q.value().get_den().get_mpz_t());
    return r;
}

}  // namespace absrr
