#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "hyperlab/elements.hpp"

namespace hyperlab {

enum class Family { IntegerScaled, ModularScaled, ModularCoset };

std::string family_name(Family f);

/// One of three parametric hyperring families over either the integers or
/// the residues mod n:
///
///   IntegerScaled  carrier Z,   x∘y = { k*x*y : k in K },    0 not in K
///   ModularScaled  carrier Z_n, x∘y = { k*x*y mod n : k in K }
///   ModularCoset   carrier Z_n, x∘y = { x*y + j mod n : j in J }, J a subgroup
///
/// Structural invariants are validated at construction; they are exactly the
/// conditions under which the hyperring axioms hold for these shapes, and
/// check_axioms() re-verifies that claim instance by instance.
class Ring {
public:
    /// The trivial integer ring x∘y = {xy}; placeholder value, the factories
    /// below build the interesting ones.
    Ring() : multipliers_{1} {}

    static Ring integer_scaled(std::vector<i64> multipliers);
    static Ring modular_scaled(i64 modulus, std::vector<i64> multipliers);
    static Ring modular_coset(i64 modulus, std::vector<i64> coset);

    Family family() const { return family_; }
    bool finite() const { return family_ != Family::IntegerScaled; }
    /// Modulus of the finite families; throws for IntegerScaled.
    i64 modulus() const;
    const ElementSet& multipliers() const { return multipliers_; }
    const ElementSet& coset() const { return coset_; }

    bool in_carrier(i64 x) const {
        return finite() ? (x >= 0 && x < modulus_) : true;
    }
    void require_in_carrier(i64 x) const;

    /// A hyperring is proper when it is not a plain ring, i.e. some product
    /// set has more than one element.
    bool proper() const;

    bool operator==(const Ring& other) const = default;

    std::string render() const;

private:
    Family family_ = Family::IntegerScaled;
    i64 modulus_ = 0;          // finite families only
    ElementSet multipliers_;   // scaled families
    ElementSet coset_;         // coset family
};

/// x∘y for single elements. Always nonempty; canonical (sorted) order.
ElementSet hmul(const Ring& r, i64 a, i64 b);

/// A∘B = union of a∘b over a in A, b in B. Operands must be nonempty.
ElementSet hset_product(const Ring& r, const ElementSet& a, const ElementSet& b);

/// a^n as a set: {a} for n = 1, a^(n-1) ∘ a for n > 1. n = 0 is rejected
/// (these rings need not have a multiplicative identity).
ElementSet hpower(const Ring& r, i64 a, i64 n);

struct AxiomReport {
    bool associative = false;
    bool distributive_inclusion = false;
    bool strongly_distributive = false;
    bool absorbing_zero = false;
    bool commutative = false;

    // Witness triple (a,b,c) per failed axiom; absorbing-zero and
    // commutativity use the first one or two slots.
    std::optional<std::array<i64, 3>> assoc_counterexample;
    std::optional<std::array<i64, 3>> distr_counterexample;
    std::optional<std::array<i64, 3>> strong_counterexample;
    std::optional<std::array<i64, 3>> zero_counterexample;
    std::optional<std::array<i64, 3>> comm_counterexample;

    bool all_hyperring_axioms() const {
        return associative && distributive_inclusion && absorbing_zero && commutative;
    }
};

/// Exhaustive over the carrier for the finite families; for IntegerScaled a
/// symmetric window [-window, window] is scanned (the scaled families are
/// associative and distributive identically in the multipliers, so a window
/// failure would indicate a bug rather than a large counterexample).
AxiomReport check_axioms(const Ring& r, i64 window = 25);

nlohmann::ordered_json ring_to_json(const Ring& r);
Ring ring_from_json(const nlohmann::json& spec);
nlohmann::ordered_json axiom_report_to_json(const AxiomReport& rep);

namespace detail {
i64 mul_checked(i64 a, i64 b);
inline i64 mod_reduce(i64 x, i64 n) {
    i64 v = x % n;
    return v < 0 ? v + n : v;
}
}  // namespace detail

}  // namespace hyperlab
