#pragma once

#include <vector>

#include "hyperlab/ring.hpp"
#include "hyperlab/verdict.hpp"

namespace hyperlab {

/// A hyperideal handle. Integer-carrier ideals are exactly the sets dZ and
/// are stored by their canonical generator d >= 0 (d = 0 is {0}); ideals of
/// the finite families are stored as explicit element sets, validated to be
/// additive subgroups absorbing every hyperproduct.
class Ideal {
public:
    static Ideal principal_multiple(i64 d);
    static Ideal explicit_set(const Ring& r, ElementSet s);

    bool principal() const { return principal_; }
    i64 generator() const;
    const ElementSet& elements() const;

    bool operator==(const Ideal&) const = default;
    bool operator<(const Ideal& other) const;

private:
    Ideal() = default;
    bool principal_ = true;
    i64 generator_ = 0;
    ElementSet elements_;
};

bool compatible(const Ring& r, const Ideal& i);
void require_compatible(const Ring& r, const Ideal& i);

bool ideal_contains(const Ring& r, const Ideal& i, i64 x);
bool ideal_subset(const Ring& r, const Ideal& a, const Ideal& b);
bool is_whole_ring(const Ring& r, const Ideal& i);

/// Hyperideal test for an explicit subset of a finite carrier. Failure
/// witnesses are the lexicographically least offending (x,y) with x-y
/// escaping, or (r,x) with r∘x escaping.
Verdict is_hyperideal(const Ring& r, const ElementSet& s);

Ideal ideal_sum(const Ring& r, const Ideal& a, const Ideal& b);
Ideal ideal_intersect(const Ring& r, const Ideal& a, const Ideal& b);

/// Ideal product AB: all finite sums of pairwise hyperproducts. Closed form
/// gcd(K)*d*e*Z for the integer family; additive-closure fixpoint otherwise.
Ideal ideal_product(const Ring& r, const Ideal& a, const Ideal& b);

struct RadicalResult {
    Ideal ideal = Ideal::principal_multiple(0);
    /// (element, exponent) samples: hpower(element, exponent) lies inside the
    /// input ideal; re-verifiable with hyperring-core operations alone.
    std::vector<std::pair<i64, i64>> certificates;
};

RadicalResult radical(const Ring& r, const Ideal& i);
/// Just the radical ideal, certificates dropped.
Ideal radical_ideal(const Ring& r, const Ideal& i);

/// Smallest hyperideal containing a.
Ideal principal_ideal(const Ring& r, i64 a);
/// Hyperideal generated by 0: {0} for the scaled families, the defining
/// coset subgroup J for the coset family.
Ideal zero_ideal(const Ring& r);

/// Full hyperideal lattice of a finite-carrier ring (includes the whole
/// ring), sorted by ascending size then element order.
std::vector<Ideal> all_ideals(const Ring& r);

/// "12Z" for principal handles, "{0,2,4}" for explicit ones.
std::string render(const Ideal& i);
nlohmann::ordered_json ideal_to_json(const Ideal& i);
Ideal ideal_from_json(const Ring& r, const nlohmann::json& spec);

namespace detail {
/// Closure of s under addition mod n (subgroup closure in Z_n).
ElementSet additive_closure(ElementSet s, i64 n);
std::vector<std::pair<i64, int>> factorize(i64 m);
/// Multiplier-product sets mod m: S_1 = K mod m, S_{t+1} = S_t * K mod m.
ElementSet multiplier_products_mod(const Ring& r, i64 m, i64 t);
}  // namespace detail

}  // namespace hyperlab
