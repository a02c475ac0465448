#pragma once

#include "hyperlab/ideal.hpp"

namespace hyperlab {

/// R/J together with the coset labeling. For all three families the cosets
/// of J are labeled by residues mod label_modulus, and the projection is
/// x -> x mod label_modulus.
struct Quotient {
    Ring ring;
    i64 label_modulus = 0;
    Ideal modulus_ideal = Ideal::principal_multiple(0);
};

/// Builds R/J with the coset product (a+J)*(b+J) = { c+J : c in a∘b },
/// realized inside the same three families:
///   integer K by mZ (m >= 2)      -> modular_scaled(m, K mod m)
///   modular_scaled(n,K) by <d>    -> modular_scaled(d, K mod d)
///   modular_coset(n,J0) by J      -> modular_coset(d, J0 mod d)
/// The construction is cross-checked: labeling is a bijection on cosets, the
/// labeled product of every pair matches the constructed hyperoperation, and
/// the constructed ring passes check_axioms.
Quotient quotient_ring(const Ring& r, const Ideal& j);

/// Good homomorphisms: identity, quotient projections, and compositions.
/// All constructible maps here are onto and additive with f(x∘y) = f(x)∘f(y)
/// setwise; validate_good re-verifies that on demand.
class Hom {
public:
    static Hom identity(const Ring& r);
    static Hom projection(const Ring& source, const Ideal& j);
    static Hom compose(const Hom& outer, const Hom& inner);

    const Ring& source() const { return source_; }
    const Ring& target() const { return target_; }
    i64 apply(i64 x) const;
    std::string render() const;

    struct Step {
        Ring source;
        Ring target;
        i64 label_modulus;
        Ideal modulus_ideal;
    };
    const std::vector<Step>& steps() const { return steps_; }

private:
    Hom() = default;
    Ring source_, target_;
    std::vector<Step> steps_;  // empty = identity
};

/// Exhaustive on finite sources, windowed on the integer carrier.
bool validate_good(const Hom& f, i64 window = 100);

/// Preimage of the zero hyperideal of the target.
Ideal kernel(const Hom& f);

/// Elementwise image, validated as a hyperideal of the target (images under
/// onto good homomorphisms always are).
Ideal image_ideal(const Hom& f, const Ideal& i);

/// Elementwise preimage; always a hyperideal of the source.
Ideal preimage_ideal(const Hom& f, const Ideal& i);

}  // namespace hyperlab
