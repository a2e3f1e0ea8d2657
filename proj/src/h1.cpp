#include "absrr/h1.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace absrr {

Rational circle_reduce(const Rational& x) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return x - Rational(fl);
}

Rational circle_distance(const Rational& x, const Rational& y) {
    Rational d = circle_reduce(x - y);
    Rational other = 1 - d;
    return d <= other ? d : other;
}

long dim_u1(const PosRational& lambda) {
    static const Rational half(1, 2);
    if (lambda.value() >= half)
        return 0;
    return ceil_log3(PosRational(lambda.den(), 2 * lambda.num()));  // 1/(2*lambda)
}

CircleGenSet circle_genset(const PosRational& lambda) {
    CircleGenSet out;
    out.lambda = lambda;
    out.m = dim_u1(lambda);
    for (long j = 1; j <= out.m; ++j)
        out.generators.push_back(make_rational(1, pow3_z(static_cast<unsigned long>(j))));
    return out;
}

bool verify_circle_cover(const PosRational& lambda, const std::vector<Rational>& gens) {
    if (gens.size() > 16)
        throw std::invalid_argument("verify_circle_cover rejects more than 16 generators");

    std::vector<Rational> reduced;
    reduced.reserve(gens.size());
    for (const auto& g : gens)
        reduced.push_back(circle_reduce(g));
    {
        auto sorted = reduced;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("circle generators must be distinct mod 1");
    }

    // condition 1: pairwise distances strictly above lambda
    for (std::size_t i = 0; i < reduced.size(); ++i)
        for (std::size_t j = i + 1; j < reduced.size(); ++j)
            if (circle_distance(reduced[i], reduced[j]) <= lambda.value())
                return false;

    // condition 2: the 3^|F| coefficient sums, sorted around the circle,
    // leave no gap above 2*lambda
    std::vector<Rational> points;
    points.reserve(1);
    std::function<void(std::size_t, Rational)> rec = [&](std::size_t idx, Rational acc) {
        if (idx == reduced.size()) {
            points.push_back(circle_reduce(acc));
            return;
        }
        rec(idx + 1, acc);
        rec(idx + 1, acc + reduced[idx]);
        rec(idx + 1, acc - reduced[idx]);
    };
    rec(0, Rational(0));
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    Rational two_lambda = 2 * lambda.value();
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
        if (points[i + 1] - points[i] > two_lambda)
            return false;
    Rational wrap = points.front() + 1 - points.back();
    return wrap <= two_lambda;
}

long dim_h1(const ArakelovDivisor& d) {
    return dim_u1(d.exp_degree());
}

}  // namespace absrr
