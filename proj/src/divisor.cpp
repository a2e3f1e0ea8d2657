#include "absrr/divisor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace absrr {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((u128(a) * b) % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// factorization support for principal divisors; inputs are guarded to the
// 64-bit range by the caller
u64 pollard_rho(u64 n) {
    if (n % 2 == 0)
        return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (mulmod(x, x, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n)
            return d;
    }
}

void factor_u64(u64 n, std::map<u64, long>& out) {
    for (u64 p : {2ull, 3ull, 5ull}) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    for (u64 p = 7; p <= 1000000 && p * p <= n; p += 2) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    while (n > 1) {
        if (is_prime(n)) {
            ++out[n];
            return;
        }
        u64 d = pollard_rho(n);
        factor_u64(d, out);
        n /= d;
    }
}

PosRational prime_power(u64 p, long e) {
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), p, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? PosRational(1, pw) : PosRational(pw, 1);
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2)
        return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0)
            return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    // these witnesses decide primality for all n < 3.3 * 10^24
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

LogValue LogValue::of(const PosRational& v) {
    double num = v.num().get_d();
    double den = v.den().get_d();
    double approx;
    if (std::isfinite(num) && std::isfinite(den) && num > 0 && den > 0) {
        approx = std::log(num) - std::log(den);
    } else {
        // huge operands: fall back on bit sizes
        approx = (mpz_sizeinbase(v.num().get_mpz_t(), 2) -
                  double(mpz_sizeinbase(v.den().get_mpz_t(), 2))) *
                 std::log(2.0);
    }
    return LogValue{v, approx};
}

ArakelovDivisor::ArakelovDivisor(FinitePart finite, PosRational lambda)
    : finite_(std::move(finite)), lambda_(std::move(lambda)) {
    for (auto it = finite_.begin(); it != finite_.end();) {
        if (it->second == 0) {
            it = finite_.erase(it);
            continue;
        }
        if (!is_prime(it->first))
            throw std::invalid_argument("divisor key " + std::to_string(it->first) +
                                        " is not prime");
        ++it;
    }
}

ArakelovDivisor ArakelovDivisor::canonical() {
    return ArakelovDivisor({{2, -2}}, PosRational());
}

ArakelovDivisor ArakelovDivisor::archimedean(PosRational lambda) {
    return ArakelovDivisor({}, std::move(lambda));
}

ArakelovDivisor ArakelovDivisor::principal(const Rational& q) {
    if (q == 0)
        throw std::domain_error("principal divisor of 0");
    mpz_class num = abs(q.get_num());
    mpz_class den = q.get_den();
    if (!num.fits_ulong_p() || !den.fits_ulong_p())
        throw std::invalid_argument("principal divisor argument too large to factor");

    FinitePart finite;
    std::map<u64, long> fnum, fden;
    factor_u64(num.get_ui(), fnum);
    factor_u64(den.get_ui(), fden);
    for (auto [p, e] : fnum)
        finite[p] -= e;  // a_p = -v_p(q)
    for (auto [p, e] : fden)
        finite[p] += e;
    return ArakelovDivisor(std::move(finite), PosRational(make_rational(num, den)));
}

PosRational ArakelovDivisor::exp_degree() const {
    PosRational r = lambda_;
    for (auto [p, e] : finite_)
        r = r * prime_power(p, e);
    return r;
}

ArakelovDivisor ArakelovDivisor::reduce() const {
    return archimedean(exp_degree());
}

PosRational ArakelovDivisor::lattice_generator() const {
    PosRational r;
    for (auto [p, e] : finite_)
        r = r * prime_power(p, -e);
    return r;
}

mpz_class ArakelovDivisor::h0_cardinality() const {
    return 2 * floor_rat(exp_degree()) + 1;
}

std::vector<Rational> ArakelovDivisor::h0_elements() const {
    PosRational ed = exp_degree();
    if (ed.value() > 1000000000)
        throw EnumerationGuardError(h0_cardinality());
    mpz_class bound = floor_rat(ed);  // |k| <= floor(lambda / m)
    Rational m = lattice_generator().value();
    std::vector<Rational> out;
    out.reserve(mpz_class(2 * bound + 1).get_ui());
    for (mpz_class k = -bound; k <= bound; ++k)
        out.push_back(Rational(k) * m);
    return out;
}

ArakelovDivisor ArakelovDivisor::parse(std::string_view spec) {
    auto semi = spec.find(';');
    if (semi == std::string_view::npos)
        throw std::invalid_argument("divisor spec missing ';' separator: '" + std::string(spec) +
                                    "'");
    std::string_view head = spec.substr(0, semi);
    std::string_view tail = spec.substr(semi + 1);
    constexpr std::string_view kLambda = "lambda=";
    if (tail.substr(0, kLambda.size()) != kLambda)
        throw std::invalid_argument("divisor spec at position " + std::to_string(semi + 1) +
                                    ": expected 'lambda='");
    PosRational lambda = PosRational::parse(tail.substr(kLambda.size()));

    FinitePart finite;
    u64 last_prime = 0;
    std::size_t pos = 0;
    while (pos < head.size()) {
        auto comma = head.find(',', pos);
        std::string_view entry =
            head.substr(pos, comma == std::string_view::npos ? head.size() - pos : comma - pos);
        auto colon = entry.find(':');
        if (colon == std::string_view::npos)
            throw std::invalid_argument("divisor spec at position " + std::to_string(pos) +
                                        ": expected 'prime:exponent'");
        Rational pq = parse_rational(entry.substr(0, colon));
        Rational eq = parse_rational(entry.substr(colon + 1));
        if (pq.get_den() != 1 || eq.get_den() != 1)
            throw std::invalid_argument("divisor spec at position " + std::to_string(pos) +
                                        ": prime and exponent must be integers");
        mpz_class p = pq.get_num();
        mpz_class e = eq.get_num();
        if (!p.fits_ulong_p() || !is_prime(p.get_ui()))
            throw std::invalid_argument("divisor spec at position " + std::to_string(pos) + ": " +
                                        p.get_str() + " is not prime");
        if (!e.fits_slong_p())
            throw std::invalid_argument("divisor spec at position " + std::to_string(pos) +
                                        ": exponent out of range");
        u64 prime = p.get_ui();
        if (prime <= last_prime)
            throw std::invalid_argument("divisor spec at position " + std::to_string(pos) +
                                        ": primes must be strictly increasing");
        last_prime = prime;
        finite[prime] = static_cast<long>(e.get_si());
        pos = comma == std::string_view::npos ? head.size() : comma + 1;
        if (comma != std::string_view::npos && pos == head.size())
            throw std::invalid_argument("divisor spec ends with a dangling ','");
    }
    return ArakelovDivisor(std::move(finite), std::move(lambda));
}

std::string ArakelovDivisor::render() const {
    std::string out;
    bool first = true;
    for (auto [p, e] : finite_) {
        if (!first)
            out += ',';
        out += std::to_string(p) + ":" + std::to_string(e);
        first = false;
    }
    out += ";lambda=" + lambda_.str();
    return out;
}

ArakelovDivisor combine(const ArakelovDivisor& d1, const ArakelovDivisor& d2, int sign) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("combine sign must be +1 or -1");
    ArakelovDivisor::FinitePart finite = d1.finite_part();
    for (auto [p, e] : d2.finite_part()) {
        finite[p] += sign * e;
        if (finite[p] == 0)
            finite.erase(p);
    }
    PosRational lambda = sign == 1 ? d1.arch_multiplier() * d2.arch_multiplier()
                                   : d1.arch_multiplier() / d2.arch_multiplier();
    return ArakelovDivisor(std::move(finite), std::move(lambda));
}

}  // namespace absrr
