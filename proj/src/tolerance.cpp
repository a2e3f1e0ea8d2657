#include "absrr/tolerance.hpp"

#include <algorithm>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace absrr {

namespace {

constexpr std::size_t kMaxCarrier = 10000;

struct ElemHash {
    std::size_t operator()(const GroupElem& e) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (long long v : e) {
            h ^= static_cast<std::uint64_t>(v);
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

using ElemSet = std::unordered_set<GroupElem, ElemHash>;

bool mass_within(const ExtQ& total, const ExtQ& bound) {
    if (bound.infinite)
        return true;
    return total <= bound.value;
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<long long> moduli) : moduli_(std::move(moduli)) {
    for (long long m : moduli_)
        if (m < 0 || m == 1)
            throw std::invalid_argument("coordinate modulus must be 0 (integers) or >= 2");
}

bool FiniteAbelianGroup::is_finite() const {
    return std::all_of(moduli_.begin(), moduli_.end(), [](long long m) { return m > 0; });
}

mpz_class FiniteAbelianGroup::order() const {
    if (!is_finite())
        throw std::logic_error("order of an infinite group");
    mpz_class n(1);
    for (long long m : moduli_)
        n *= static_cast<long>(m);
    return n;
}

GroupElem FiniteAbelianGroup::zero() const {
    return GroupElem(moduli_.size(), 0);
}

GroupElem FiniteAbelianGroup::normalize(GroupElem x) const {
    if (x.size() != moduli_.size())
        throw std::invalid_argument("group element has wrong rank");
    for (std::size_t i = 0; i < x.size(); ++i)
        if (moduli_[i] != 0)
            x[i] = ((x[i] % moduli_[i]) + moduli_[i]) % moduli_[i];
    return x;
}

GroupElem FiniteAbelianGroup::add(const GroupElem& a, const GroupElem& b) const {
    GroupElem r(a);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += b[i];
    return normalize(std::move(r));
}

GroupElem FiniteAbelianGroup::sub(const GroupElem& a, const GroupElem& b) const {
    GroupElem r(a);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] -= b[i];
    return normalize(std::move(r));
}

GroupElem FiniteAbelianGroup::neg(const GroupElem& a) const {
    GroupElem r(a);
    for (long long& v : r)
        v = -v;
    return normalize(std::move(r));
}

std::vector<GroupElem> FiniteAbelianGroup::elements() const {
    if (!is_finite())
        throw std::logic_error("cannot enumerate an infinite group");
    mpz_class n = order();
    if (n > 100000)
        throw std::invalid_argument("group too large to enumerate");
    std::vector<GroupElem> out;
    out.reserve(n.get_ui());
    GroupElem cur = zero();
    while (true) {
        out.push_back(cur);
        std::size_t i = 0;
        for (; i < cur.size(); ++i) {
            if (++cur[i] < moduli_[i])
                break;
            cur[i] = 0;
        }
        if (i == cur.size())
            break;
    }
    return out;
}

FiniteToleranceModule::FiniteToleranceModule(FiniteAbelianGroup group,
                                             std::vector<GroupElem> carrier, ElemFn mass,
                                             ExtQ mass_bound, ElemFn cost, Rational tol,
                                             std::string name)
    : group_(std::move(group)),
      carrier_(std::move(carrier)),
      mass_(std::move(mass)),
      mass_bound_(std::move(mass_bound)),
      cost_(std::move(cost)),
      tol_(std::move(tol)),
      name_(std::move(name)) {
    if (carrier_.empty() || carrier_.size() > kMaxCarrier)
        throw std::invalid_argument("carrier size out of range [1, 10^4]");
    if (tol_ < 0)
        throw std::invalid_argument("tolerance must be nonnegative");
    if (!mass_bound_.infinite && mass_bound_.value < 0)
        throw std::invalid_argument("mass bound must be nonnegative");

    ElemSet seen;
    for (auto& x : carrier_) {
        x = group_.normalize(std::move(x));
        if (!seen.insert(x).second)
            throw std::invalid_argument("carrier contains duplicates");
    }
    if (!seen.count(group_.zero()))
        throw std::invalid_argument("carrier must contain the zero element");
    for (const auto& x : carrier_) {
        if (!seen.count(group_.neg(x)))
            throw std::invalid_argument("carrier must be closed under negation");
        ExtQ mx = mass_(x);
        if (!mx.infinite && mx.value < 0)
            throw std::invalid_argument("mass must be nonnegative");
        if (!(mx == mass_(group_.neg(x))))
            throw std::invalid_argument("mass(-x) must equal mass(x)");
    }
    if (!(cost_(group_.zero()) == ExtQ::of(0)))
        throw std::invalid_argument("cost(0) must be 0");
    // symmetry of the relation: cost(z) == cost(-z) on the reachable differences
    if (carrier_.size() <= 256) {
        for (const auto& x : carrier_)
            for (const auto& y : carrier_) {
                GroupElem d = group_.sub(x, y);
                if (!(cost_(d) == cost_(group_.neg(d))))
                    throw std::invalid_argument("cost must be symmetric");
            }
    } else {
        for (std::size_t i = 0; i < carrier_.size(); ++i) {
            const auto& x = carrier_[i];
            const auto& y = carrier_[(i * 31 + 7) % carrier_.size()];
            GroupElem d = group_.sub(x, y);
            if (!(cost_(d) == cost_(group_.neg(d))))
                throw std::invalid_argument("cost must be symmetric");
        }
    }
}

bool FiniteToleranceModule::related(const GroupElem& x, const GroupElem& y) const {
    return cost(group_.sub(x, y)) <= tol_;
}

bool FiniteToleranceModule::in_carrier(const GroupElem& x) const {
    GroupElem n = group_.normalize(x);
    return std::find(carrier_.begin(), carrier_.end(), n) != carrier_.end();
}

FiniteToleranceModule FiniteToleranceModule::hz_interval(long long n) {
    if (n < 0 || 2 * n + 1 > static_cast<long long>(kMaxCarrier))
        throw std::invalid_argument("interval bound out of range");
    FiniteAbelianGroup z({0});
    std::vector<GroupElem> carrier;
    carrier.reserve(static_cast<std::size_t>(2 * n + 1));
    for (long long v = -n; v <= n; ++v)
        carrier.push_back({v});
    ElemFn mass = [](const GroupElem& x) {
        return ExtQ::of(Rational(static_cast<long>(x[0] < 0 ? -x[0] : x[0])));
    };
    ElemFn cost = [](const GroupElem& x) { return x[0] == 0 ? ExtQ::of(0) : ExtQ::inf(); };
    FiniteToleranceModule m(z, std::move(carrier), std::move(mass),
                            ExtQ::of(Rational(static_cast<long>(n))),
                            std::move(cost), Rational(0), "hz_interval(" + std::to_string(n) + ")");
    m.mark_diagonal();
    return m;
}

FiniteToleranceModule FiniteToleranceModule::circle_cyclic(long long q, const Rational& lambda) {
    if (q < 2 || q > static_cast<long long>(kMaxCarrier))
        throw std::invalid_argument("cyclic order out of range");
    FiniteAbelianGroup g({q});
    std::vector<GroupElem> carrier;
    carrier.reserve(static_cast<std::size_t>(q));
    for (long long v = 0; v < q; ++v)
        carrier.push_back({v});
    ElemFn mass = [](const GroupElem&) { return ExtQ::of(0); };
    ElemFn cost = [q](const GroupElem& x) {
        long long r = ((x[0] % q) + q) % q;
        long long d = std::min(r, q - r);
        return ExtQ::of(make_rational(mpz_class(static_cast<long>(d)), mpz_class(static_cast<long>(q))));
    };
    return FiniteToleranceModule(g, std::move(carrier), std::move(mass), ExtQ::inf(),
                                 std::move(cost), lambda,
                                 "circle(Z/" + std::to_string(q) + ")");
}

GroupHom GroupHom::identity(const FiniteAbelianGroup& g) {
    return GroupHom{g, g, [](const GroupElem& x) { return x; }};
}

GroupHom GroupHom::reduction(const FiniteAbelianGroup& domain, const FiniteAbelianGroup& codomain) {
    if (domain.rank() != codomain.rank())
        throw std::invalid_argument("reduction requires equal ranks");
    for (std::size_t i = 0; i < domain.rank(); ++i) {
        long long md = domain.moduli()[i], mc = codomain.moduli()[i];
        if (md == 0 || mc == 0 || md % mc != 0)
            throw std::invalid_argument("each codomain modulus must divide the domain modulus");
    }
    auto codom = codomain;
    return GroupHom{domain, codomain,
                    [codom](const GroupElem& x) { return codom.normalize(x); }};
}

FiniteToleranceModule pullback(const FiniteToleranceModule& m, const GroupHom& p) {
    if (!(p.codomain == m.group()))
        throw std::invalid_argument("hom codomain does not match the module's group");
    if (!p.domain.is_finite() || !p.codomain.is_finite())
        throw std::invalid_argument("pullback requires finite groups");
    auto domain_elems = p.domain.elements();

    ElemSet image;
    for (const auto& x : domain_elems)
        image.insert(p.codomain.normalize(p.map(x)));
    if (mpz_class(static_cast<long>(image.size())) != p.codomain.order())
        throw std::invalid_argument("pullback requires a surjective homomorphism");

    ElemSet target_carrier;
    for (const auto& c : m.carrier())
        target_carrier.insert(c);
    std::vector<GroupElem> carrier;
    for (const auto& x : domain_elems)
        if (target_carrier.count(p.codomain.normalize(p.map(x))))
            carrier.push_back(x);

    auto pm = p.map;
    auto target = std::make_shared<FiniteToleranceModule>(m);
    ElemFn mass = [target, pm](const GroupElem& x) { return target->mass(pm(x)); };
    ElemFn cost = [target, pm](const GroupElem& x) { return target->cost(pm(x)); };
    return FiniteToleranceModule(p.domain, std::move(carrier), std::move(mass), m.mass_bound(),
                                 std::move(cost), m.tol(), "pullback(" + m.name() + ")");
}

namespace {

// ---- generic search machinery ----------------------------------------

struct Candidate {
    GroupElem rep;        // canonical representative of {f, -f}
    ExtQ mass;
    bool self_inverse;    // f == -f, multiplicity capped at 1
};

// signed symmetric view used to order representatives ("positive half")
std::vector<long long> signed_view(const FiniteAbelianGroup& g, const GroupElem& x) {
    GroupElem n = g.normalize(x);
    std::vector<long long> v(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) {
        long long m = g.moduli()[i];
        v[i] = (m != 0 && 2 * n[i] > m) ? n[i] - m : n[i];
    }
    return v;
}

std::vector<Candidate> collect_candidates(const FiniteToleranceModule& m) {
    const auto& g = m.group();
    ElemSet taken;
    std::vector<std::pair<std::vector<long long>, Candidate>> keyed;
    for (const auto& x : m.carrier()) {
        if (x == g.zero())
            continue;
        ExtQ mx = m.mass(x);
        if (!m.mass_bound().infinite && !mass_within(mx, m.mass_bound()))
            continue;  // can never take part in a sum
        GroupElem nx = g.normalize(x);
        GroupElem negx = g.neg(nx);
        GroupElem rep = signed_view(g, nx) >= signed_view(g, negx) ? nx : negx;
        if (!taken.insert(rep).second)
            continue;
        keyed.push_back({signed_view(g, rep), Candidate{rep, mx, rep == g.neg(rep)}});
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Candidate> out;
    out.reserve(keyed.size());
    for (auto& kv : keyed)
        out.push_back(std::move(kv.second));
    return out;
}

// Extended-rational running mass (infinite masses never enter sums here:
// candidates with infinite mass are filtered when the bound is finite, and
// an infinite bound accepts everything).
struct MassAcc {
    Rational total = Rational(0);
};

// Enumerate all coefficient sums of the slot elements under the mass
// discipline; returns the distinct normalized sums that land in the carrier.
std::vector<GroupElem> admissible_sums(const FiniteToleranceModule& m,
                                       const std::vector<GroupElem>& slots,
                                       const ElemSet& carrier_set) {
    const auto& g = m.group();
    std::vector<ExtQ> masses;
    masses.reserve(slots.size());
    for (const auto& f : slots)
        masses.push_back(m.mass(f));

    ElemSet seen;
    std::vector<GroupElem> sums;
    GroupElem acc = g.zero();
    Rational mass_acc(0);

    auto emit = [&](const GroupElem& v) {
        GroupElem n = g.normalize(v);
        if (carrier_set.count(n) && seen.insert(n).second)
            sums.push_back(n);
    };

    std::function<void(std::size_t, GroupElem, Rational)> rec =
        [&](std::size_t idx, GroupElem value, Rational mass_total) {
            if (idx == slots.size()) {
                emit(value);
                return;
            }
            rec(idx + 1, value, mass_total);
            bool mass_ok;
            Rational next_mass = mass_total;
            if (m.mass_bound().infinite) {
                mass_ok = true;
            } else if (masses[idx].infinite) {
                mass_ok = false;
            } else {
                next_mass += masses[idx].value;
                mass_ok = next_mass <= m.mass_bound().value;
            }
            if (!mass_ok)
                return;
            rec(idx + 1, g.add(value, slots[idx]), next_mass);
            rec(idx + 1, g.sub(value, slots[idx]), next_mass);
        };
    rec(0, acc, mass_acc);
    return sums;
}

// targets ordered by descending mass so failures surface early
std::vector<std::size_t> target_order(const FiniteToleranceModule& m) {
    std::vector<std::size_t> order(m.carrier().size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::vector<ExtQ> masses;
    masses.reserve(order.size());
    for (const auto& x : m.carrier())
        masses.push_back(m.mass(x));
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const ExtQ& ma = masses[a];
        const ExtQ& mb = masses[b];
        if (ma.infinite != mb.infinite)
            return ma.infinite;
        if (!ma.infinite && ma.value != mb.value)
            return ma.value > mb.value;
        return false;
    });
    return order;
}

bool covers_targets(const FiniteToleranceModule& m, const std::vector<GroupElem>& sums,
                    const std::vector<std::size_t>& order) {
    if (m.diagonal()) {
        ElemSet sum_set(sums.begin(), sums.end());
        for (std::size_t i : order)
            if (!sum_set.count(m.carrier()[i]))
                return false;
        return true;
    }
    for (std::size_t i : order) {
        const GroupElem& x = m.carrier()[i];
        bool hit = false;
        for (const auto& y : sums)
            if (m.related(x, y)) {
                hit = true;
                break;
            }
        if (!hit)
            return false;
    }
    return true;
}

// Condition 1 over the sign class of a multiset: only the coefficient
// product of a slot pair matters (cost is symmetric), so admissible sign
// assignments form a parity-constraint problem. Returns the signs of a
// satisfying assignment, or nullopt.
std::optional<std::vector<int>> resolve_condition1(const FiniteToleranceModule& m,
                                                   const std::vector<GroupElem>& slots) {
    const auto& g = m.group();
    const std::size_t k = slots.size();
    // forced[i][j]: 0 = free, +1 / -1 = required product, 2 = impossible
    std::vector<std::vector<int>> forced(k, std::vector<int>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            bool same_related = slots[i] == slots[j] || m.related(slots[i], slots[j]);
            bool opp_related = m.related(slots[i], g.neg(slots[j]));
            if (same_related && opp_related)
                return std::nullopt;
            if (same_related)
                forced[i][j] = -1;  // must take opposite signs
            else if (opp_related)
                forced[i][j] = +1;  // must take equal signs
        }
    std::vector<int> sign(k, 0);
    for (std::size_t root = 0; root < k; ++root) {
        if (sign[root] != 0)
            continue;
        sign[root] = +1;
        std::vector<std::size_t> queue{root};
        while (!queue.empty()) {
            std::size_t i = queue.back();
            queue.pop_back();
            for (std::size_t j = 0; j < k; ++j) {
                int f = i < j ? forced[i][j] : (i > j ? forced[j][i] : 0);
                if (f == 0)
                    continue;
                int want = sign[i] * f;
                if (sign[j] == 0) {
                    sign[j] = want;
                    queue.push_back(j);
                } else if (sign[j] != want) {
                    return std::nullopt;
                }
            }
        }
    }
    return sign;
}

// ---- specialized path: interval carrier with the diagonal relation ----

bool interval_covers(long long n, const std::vector<long long>& values,
                     std::vector<std::uint8_t>& scratch) {
    const std::size_t width = static_cast<std::size_t>(2 * n + 1);
    if (scratch.size() < width)
        scratch.assign(width, 0);
    std::fill(scratch.begin(), scratch.begin() + width, 0);

    std::function<void(std::size_t, long long, long long)> rec = [&](std::size_t idx,
                                                                     long long value,
                                                                     long long mass) {
        if (idx == values.size()) {
            scratch[static_cast<std::size_t>(value + n)] = 1;
            return;
        }
        rec(idx + 1, value, mass);
        long long next = mass + values[idx];
        if (next <= n) {
            rec(idx + 1, value + values[idx], next);
            rec(idx + 1, value - values[idx], next);
        }
    };
    rec(0, 0, 0);

    for (long long v = n; v >= 0; --v)
        if (!scratch[static_cast<std::size_t>(n + v)] || !scratch[static_cast<std::size_t>(n - v)])
            return false;
    return true;
}

// the fast path additionally requires the exact interval shape:
// mass(x) = |x| with the bound equal to the interval radius
bool is_interval_diagonal(const FiniteToleranceModule& m) {
    if (!m.diagonal() || m.group().rank() != 1 || m.group().moduli()[0] != 0)
        return false;
    if (m.mass_bound().infinite)
        return false;
    long long radius = 0;
    for (const auto& x : m.carrier())
        radius = std::max(radius, x[0] < 0 ? -x[0] : x[0]);
    if (m.mass_bound().value != Rational(static_cast<long>(radius)))
        return false;
    for (const auto& x : m.carrier()) {
        ExtQ mx = m.mass(x);
        if (mx.infinite || mx.value != Rational(static_cast<long>(x[0] < 0 ? -x[0] : x[0])))
            return false;
    }
    return true;
}

}  // namespace

bool is_generating_set(const FiniteToleranceModule& m, const std::vector<GroupElem>& gens) {
    const auto& g = m.group();
    std::vector<GroupElem> norm;
    norm.reserve(gens.size());
    for (const auto& x : gens)
        norm.push_back(g.normalize(x));
    for (std::size_t i = 0; i < norm.size(); ++i)
        for (std::size_t j = i + 1; j < norm.size(); ++j) {
            if (norm[i] == norm[j])
                return false;  // not a set
            if (m.related(norm[i], norm[j]))
                return false;  // condition 1
        }
    ElemSet carrier_set(m.carrier().begin(), m.carrier().end());
    auto sums = admissible_sums(m, norm, carrier_set);
    return covers_targets(m, sums, target_order(m));
}

BruteForceResult dim_bruteforce(const FiniteToleranceModule& m, int max_card) {
    if (max_card < 0 || max_card > 24)
        throw std::invalid_argument("max_card out of range [0, 24]");

    auto candidates = collect_candidates(m);
    const auto order = target_order(m);
    ElemSet carrier_set(m.carrier().begin(), m.carrier().end());
    const bool fast_interval = is_interval_diagonal(m);

    long long interval_n = 0;
    std::vector<std::uint8_t> scratch;
    if (fast_interval) {
        for (const auto& x : m.carrier())
            interval_n = std::max(interval_n, x[0]);
    }

    std::vector<int> chosen;
    BruteForceResult result;

    std::function<bool(std::size_t, int)> rec = [&](std::size_t min_idx, int remaining) -> bool {
        if (remaining == 0) {
            std::vector<GroupElem> slots;
            slots.reserve(chosen.size());
            for (int idx : chosen)
                slots.push_back(candidates[static_cast<std::size_t>(idx)].rep);

            if (fast_interval) {
                // condition 1 is distinctness here; a doubled entry encodes
                // the pair {f, -f}, always a valid set for f != 0
                std::vector<long long> values;
                values.reserve(slots.size());
                for (const auto& s : slots)
                    values.push_back(s[0]);
                if (!interval_covers(interval_n, values, scratch))
                    return false;
                std::vector<GroupElem> witness;
                for (std::size_t i = 0; i < chosen.size(); ++i) {
                    bool doubled = i + 1 < chosen.size() && chosen[i + 1] == chosen[i];
                    witness.push_back({values[i]});
                    if (doubled) {
                        witness.push_back({-values[i + 1]});
                        ++i;
                    }
                }
                result.generators = std::move(witness);
                return true;
            }

            auto signs = resolve_condition1(m, slots);
            if (!signs)
                return false;
            auto sums = admissible_sums(m, slots, carrier_set);
            if (!covers_targets(m, sums, order))
                return false;
            std::vector<GroupElem> witness;
            witness.reserve(slots.size());
            for (std::size_t i = 0; i < slots.size(); ++i)
                witness.push_back((*signs)[i] > 0 ? slots[i] : m.group().neg(slots[i]));
            result.generators = std::move(witness);
            return true;
        }
        for (std::size_t i = min_idx; i < candidates.size(); ++i) {
            int used = 0;
            for (auto it = chosen.rbegin(); it != chosen.rend() && *it == static_cast<int>(i); ++it)
                ++used;
            int cap = candidates[i].self_inverse ? 1 : 2;
            if (used >= cap)
                continue;
            chosen.push_back(static_cast<int>(i));
            if (rec(i, remaining - 1))
                return true;
            chosen.pop_back();
        }
        return false;
    };

    for (int k = 0; k <= max_card; ++k) {
        chosen.clear();
        if (rec(0, k)) {
            result.dimension = k;
            return result;
        }
    }
    return result;
}

long oracle_dim_hzn(long long n) {
    if (n < 0 || n > 50)
        throw std::invalid_argument("oracle_dim_hzn supports 0 <= n <= 50");
    auto m = FiniteToleranceModule::hz_interval(n);
    auto r = dim_bruteforce(m, 10);
    if (!r.dimension)
        throw std::logic_error("oracle search exhausted without a generating set");
    return *r.dimension;
}

}  // namespace absrr
