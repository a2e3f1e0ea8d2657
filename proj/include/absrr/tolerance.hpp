#pragma once

#include "absrr/exact_arith.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace absrr {

/// Nonnegative rational extended with +infinity (for masses/costs of
/// elements that never take part in a sum).
struct ExtQ {
    bool infinite = false;
    Rational value = Rational(0);

    static ExtQ inf() { return ExtQ{true, Rational(0)}; }
    static ExtQ of(const Rational& v) { return ExtQ{false, v}; }
    static ExtQ of(long v) { return ExtQ{false, Rational(v)}; }

    bool operator<=(const Rational& bound) const { return !infinite && value <= bound; }
    bool operator==(const ExtQ& rhs) const {
        return infinite == rhs.infinite && (infinite || value == rhs.value);
    }
};

/// Element of a product of cyclic groups (coordinate modulus 0 means an
/// unbounded integer coordinate).
using GroupElem = std::vector<long long>;

class FiniteAbelianGroup {
public:
    explicit FiniteAbelianGroup(std::vector<long long> moduli);

    std::size_t rank() const { return moduli_.size(); }
    const std::vector<long long>& moduli() const { return moduli_; }
    bool is_finite() const;
    mpz_class order() const;  // finite groups only

    GroupElem zero() const;
    GroupElem normalize(GroupElem x) const;  // residues into [0, m)
    GroupElem add(const GroupElem& a, const GroupElem& b) const;
    GroupElem sub(const GroupElem& a, const GroupElem& b) const;
    GroupElem neg(const GroupElem& a) const;

    /// All elements, lexicographic by coordinate. Finite groups only.
    std::vector<GroupElem> elements() const;

    bool operator==(const FiniteAbelianGroup&) const = default;

private:
    std::vector<long long> moduli_;
};

using ElemFn = std::function<ExtQ(const GroupElem&)>;

/// Finite carrier with a mass discipline and a tolerance relation.
/// Sums of carrier elements exist only while the accumulated mass stays
/// within mass_bound; two elements are related when cost(x - y) <= tol,
/// cost being symmetric with cost(0) = 0 (checked at construction, so the
/// relation is reflexive and symmetric).
class FiniteToleranceModule {
public:
    FiniteToleranceModule(FiniteAbelianGroup group, std::vector<GroupElem> carrier,
                          ElemFn mass, ExtQ mass_bound, ElemFn cost, Rational tol,
                          std::string name = "");

    const FiniteAbelianGroup& group() const { return group_; }
    const std::vector<GroupElem>& carrier() const { return carrier_; }
    const ExtQ& mass_bound() const { return mass_bound_; }
    const Rational& tol() const { return tol_; }
    const std::string& name() const { return name_; }

    ExtQ mass(const GroupElem& x) const { return mass_(group_.normalize(x)); }
    ExtQ cost(const GroupElem& x) const { return cost_(group_.normalize(x)); }
    bool related(const GroupElem& x, const GroupElem& y) const;
    bool in_carrier(const GroupElem& x) const;

    /// Marks the relation as the diagonal (equality); enables a hash-set
    /// fast path in the coverage check. Semantics are unchanged.
    void mark_diagonal() { diagonal_ = true; }
    bool diagonal() const { return diagonal_; }

    /// [-n, n] in Z with mass |x|, mass bound n, diagonal relation.
    static FiniteToleranceModule hz_interval(long long n);

    /// Z/q with the circle metric cost d(x, 0) = min(r, q - r)/q, tolerance
    /// lambda, no mass discipline.
    static FiniteToleranceModule circle_cyclic(long long q, const Rational& lambda);

private:
    FiniteAbelianGroup group_;
    std::vector<GroupElem> carrier_;
    ElemFn mass_;
    ExtQ mass_bound_;
    ElemFn cost_;
    Rational tol_;
    std::string name_;
    bool diagonal_ = false;
};

struct GroupHom {
    FiniteAbelianGroup domain;
    FiniteAbelianGroup codomain;
    std::function<GroupElem(const GroupElem&)> map;

    static GroupHom identity(const FiniteAbelianGroup& g);
    /// Componentwise reduction; every codomain modulus must divide the
    /// matching domain modulus.
    static GroupHom reduction(const FiniteAbelianGroup& domain,
                              const FiniteAbelianGroup& codomain);
};

/// Relation, mass and carrier transported through a surjective hom:
/// (x, y) related upstairs iff (p(x), p(y)) related downstairs.
/// Throws std::invalid_argument when p is not surjective.
FiniteToleranceModule pullback(const FiniteToleranceModule& m, const GroupHom& p);

struct BruteForceResult {
    std::optional<long> dimension;          // nullopt = no generating set found
    std::vector<GroupElem> generators;      // witness as an actual signed subset
};

/// Checks whether the given signed elements form a generating set: pairwise
/// distinct and non-related, and every carrier element is related to some
/// coefficient sum that exists under the mass discipline.
bool is_generating_set(const FiniteToleranceModule& m, const std::vector<GroupElem>& gens);

/// Minimal generating-set cardinality by exhaustive search, cardinality by
/// cardinality. Candidates are multisets of positive representatives
/// (multiplicity 2 encodes the pair {f, -f}), enumerated lexicographically;
/// the first success is returned together with a signed witness.
BruteForceResult dim_bruteforce(const FiniteToleranceModule& m, int max_card);

/// Minimal generating cardinality of the interval module [-n, n] by brute
/// force; the independent oracle for the closed-form dimension. n <= 50.
long oracle_dim_hzn(long long n);

}  // namespace absrr
