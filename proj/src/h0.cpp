#include "absrr/h0.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace absrr {

namespace {

constexpr long kVerifyMaxN = 1000000;
constexpr std::size_t kVerifyMaxCard = 24;

// Values reachable as signed subset sums under the mass discipline;
// subtrees whose accumulated mass already exceeds n are pruned.
std::vector<std::uint8_t> coverage_with_mass(long long n, const std::vector<long long>& gens) {
    std::vector<std::uint8_t> hit(static_cast<std::size_t>(2 * n + 1), 0);
    std::function<void(std::size_t, long long, long long)> rec = [&](std::size_t idx,
                                                                     long long value,
                                                                     long long mass) {
        if (idx == gens.size()) {
            hit[static_cast<std::size_t>(value + n)] = 1;
            return;
        }
        long long g = gens[idx];
        long long w = g < 0 ? -g : g;
        rec(idx + 1, value, mass);
        if (mass + w <= n) {
            rec(idx + 1, value + g, mass + w);
            rec(idx + 1, value - g, mass + w);
        }
    };
    rec(0, 0, 0);
    return hit;
}

// Values in [-n, n] reachable ignoring the mass bound (diagnostic pass,
// run only when the disciplined cover fails); subtrees that cannot swing
// back into the window are pruned.
std::vector<std::uint8_t> coverage_any(long long n, const std::vector<long long>& gens) {
    std::vector<std::uint8_t> hit(static_cast<std::size_t>(2 * n + 1), 0);
    std::vector<long long> tail(gens.size() + 1, 0);  // total weight still to come
    for (std::size_t i = gens.size(); i-- > 0;)
        tail[i] = tail[i + 1] + (gens[i] < 0 ? -gens[i] : gens[i]);

    std::function<void(std::size_t, long long)> rec = [&](std::size_t idx, long long value) {
        long long swing = tail[idx];
        if (value > n + swing || value < -n - swing)
            return;
        if (idx == gens.size()) {
            if (value >= -n && value <= n)
                hit[static_cast<std::size_t>(value + n)] = 1;
            return;
        }
        rec(idx + 1, value);
        rec(idx + 1, value + gens[idx]);
        rec(idx + 1, value - gens[idx]);
    };
    rec(0, 0);
    return hit;
}

GenSetReport report_from_coverage(long long n, const std::vector<long long>& gens) {
    GenSetReport r;
    r.n = mpz_class(static_cast<long>(n));
    for (long long g : gens)
        r.generators.push_back(mpz_class(static_cast<long>(g)));
    std::sort(r.generators.begin(), r.generators.end());
    r.cardinality = gens.size();
    for (const auto& g : r.generators)
        r.sum += g;

    auto with_mass = coverage_with_mass(n, gens);
    r.verified = true;
    r.surjective = std::all_of(with_mass.begin(), with_mass.end(),
                               [](std::uint8_t b) { return b != 0; });
    r.mass_ok = true;
    if (!r.surjective) {
        // the bound is "the sole obstruction" for values reachable only
        // with overweight representations
        auto any = coverage_any(n, gens);
        for (std::size_t i = 0; i < any.size(); ++i)
            if (any[i] && !with_mass[i]) {
                r.mass_ok = false;
                break;
            }
    }
    return r;
}

}  // namespace

const char* to_string(GenSetCase c) {
    switch (c) {
        case GenSetCase::Regular: return "Regular";
        case GenSetCase::E_ell_zero: return "E_ell_zero";
        case GenSetCase::E_ell_positive: return "E_ell_positive";
        case GenSetCase::Special_n2: return "Special_n2";
        case GenSetCase::Special_n5: return "Special_n5";
    }
    return "?";
}

long dim_hzn(const mpz_class& n) {
    if (n < 0)
        throw std::domain_error("dim_hzn requires n >= 0");
    return ceil_log3(PosRational(2 * n + 1, 1));
}

std::optional<ExceptionalE> exceptional_e(const mpz_class& n) {
    if (n < 1)
        throw std::domain_error("exceptional_e requires n >= 1");
    // n = 3^l + (3^m - 1)/2 with l < m; 2n + 1 = 3^m + 2*3^l makes the
    // pair unique when it exists
    mpz_class q(0);  // (3^m - 1)/2
    mpz_class power(1);
    for (long m = 1;; ++m) {
        q += power;  // now (3^m - 1)/2
        power *= 3;
        if (q >= n)
            return std::nullopt;
        mpz_class rest = n - q;  // must be 3^l with l < m
        mpz_class pl(1);
        for (long ell = 0; ell < m; ++ell) {
            if (pl == rest)
                return ExceptionalE{ell, m};
            pl *= 3;
        }
    }
}

GenSetReport genset(const mpz_class& n, bool verify) {
    if (n < 0)
        throw std::domain_error("genset requires n >= 0");

    std::vector<mpz_class> gens;
    GenSetCase kind = GenSetCase::Regular;

    if (n == 2) {
        gens = {1, 2};
        kind = GenSetCase::Special_n2;
    } else if (n == 5) {
        gens = {1, 2, 3};
        kind = GenSetCase::Special_n5;
    } else if (n > 0) {
        auto e = exceptional_e(n);
        if (!e) {
            // largest m with 3^m <= 2n + 1; q = (3^m - 1)/2
            long m = 0;
            mpz_class power(1), q(0);
            while (power * 3 <= 2 * n + 1) {
                q += power;
                power *= 3;
                ++m;
            }
            mpz_class pw(1);
            for (long i = 0; i < m; ++i) {
                gens.push_back(pw);
                pw *= 3;
            }
            if (power < 2 * n + 1)
                gens.push_back(n - q);  // distinct from the powers since n is not in E
        } else if (e->ell == 0) {
            // n = 1 + (3^m - 1)/2, m > 2: replace the repeated 1 by {2, 3^(m-1) - 1}
            long m = e->m;
            mpz_class pw(1);
            for (long i = 0; i <= m - 2; ++i) {
                gens.push_back(pw);
                pw *= 3;
            }
            gens.push_back(2);
            gens.push_back(pow3_z(static_cast<unsigned long>(m - 1)) - 1);
        } else {
            // n = 3^l + (3^m - 1)/2, 0 < l < m: the doubled 3^l becomes 3^l -+ 1
            long m = e->m, ell = e->ell;
            mpz_class pw(1);
            for (long i = 0; i < m; ++i) {
                if (i != ell)
                    gens.push_back(pw);
                pw *= 3;
            }
            mpz_class pe = pow3_z(static_cast<unsigned long>(ell));
            gens.push_back(pe - 1);
            gens.push_back(pe + 1);
            kind = GenSetCase::E_ell_positive;
        }
        if (e && e->ell == 0)
            kind = GenSetCase::E_ell_zero;
    }

    std::sort(gens.begin(), gens.end());

    GenSetReport r;
    r.n = n;
    r.generators = gens;
    r.cardinality = gens.size();
    for (const auto& g : gens)
        r.sum += g;
    r.special_case = kind;

    if (verify) {
        if (n > kVerifyMaxN)
            throw std::invalid_argument("genset verification limited to n <= 10^6");
        std::vector<long long> flat;
        flat.reserve(gens.size());
        for (const auto& g : gens)
            flat.push_back(g.get_si());
        GenSetReport checked = verify_genset(n.get_si(), flat);
        r.verified = true;
        r.surjective = checked.surjective;
        r.mass_ok = checked.mass_ok;
    }
    return r;
}

GenSetReport verify_genset(long long n, const std::vector<long long>& gens) {
    if (n < 0)
        throw std::domain_error("verify_genset requires n >= 0");
    if (n > kVerifyMaxN)
        throw std::invalid_argument("verify_genset limited to n <= 10^6");
    if (gens.size() > kVerifyMaxCard)
        throw std::invalid_argument("verify_genset rejects more than 24 generators");
    std::vector<long long> sorted = gens;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("generators must be distinct");
    for (long long g : gens)
        if (g == 0 || g < -n || g > n)
            throw std::invalid_argument("generators must be nonzero and within [-n, n]");
    return report_from_coverage(n, gens);
}

long dim_h0(const ArakelovDivisor& d) {
    return dim_hzn(floor_rat(d.exp_degree()));
}

}  // namespace absrr
