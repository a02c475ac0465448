#include "hyperlab/morphism.hpp"

#include <numeric>

namespace hyperlab {

using detail::mod_reduce;

Quotient quotient_ring(const Ring& r, const Ideal& j) {
    require_compatible(r, j);
    Quotient q;
    q.modulus_ideal = j;

    switch (r.family()) {
        case Family::IntegerScaled: {
            const i64 m = j.generator();
            if (m < 2)
                throw std::invalid_argument(
                    "quotient_ring: integer quotients need a modulus >= 2 (0Z gives an "
                    "infinite quotient, 1Z a trivial one)");
            std::vector<i64> k;
            for (i64 mult : r.multipliers()) k.push_back(mod_reduce(mult, m));
            q.ring = Ring::modular_scaled(m, std::move(k));
            q.label_modulus = m;
            break;
        }
        case Family::ModularScaled:
        case Family::ModularCoset: {
            const i64 n = r.modulus();
            i64 d = n;
            for (i64 x : j.elements()) d = std::gcd(d, x);
            if (d < 2)
                throw std::invalid_argument("quotient_ring: quotient by the whole ring is trivial");
            if (r.family() == Family::ModularScaled) {
                std::vector<i64> k;
                for (i64 mult : r.multipliers()) k.push_back(mod_reduce(mult, d));
                q.ring = Ring::modular_scaled(d, std::move(k));
            } else {
                std::vector<i64> image_coset;
                for (i64 c : r.coset()) image_coset.push_back(mod_reduce(c, d));
                q.ring = Ring::modular_coset(d, std::move(image_coset));
            }
            q.label_modulus = d;
            break;
        }
    }

    // Faithfulness: the labeled image of every source product must equal the
    // constructed hyperoperation on the labels. For the integer family one
    // period of representatives suffices (all conditions are mod m).
    const i64 reps = r.finite() ? r.modulus() : q.label_modulus;
    for (i64 a = 0; a < reps; ++a)
        for (i64 b = 0; b < reps; ++b) {
            ElementSet labeled;
            for (i64 c : hmul(r, a, b)) labeled.insert(mod_reduce(c, q.label_modulus));
            if (labeled != hmul(q.ring, mod_reduce(a, q.label_modulus),
                                mod_reduce(b, q.label_modulus)))
                throw std::logic_error("quotient_ring: coset product mismatch at (" +
                                       std::to_string(a) + "," + std::to_string(b) + ")");
        }
    AxiomReport axioms = check_axioms(q.ring);
    if (!axioms.all_hyperring_axioms())
        throw std::logic_error("quotient_ring: constructed ring fails the hyperring axioms");
    return q;
}

Hom Hom::identity(const Ring& r) {
    Hom f;
    f.source_ = r;
    f.target_ = r;
    return f;
}

Hom Hom::projection(const Ring& source, const Ideal& j) {
    Quotient q = quotient_ring(source, j);
    Hom f;
    f.source_ = source;
    f.target_ = q.ring;
    f.steps_.push_back(Step{source, q.ring, q.label_modulus, j});
    return f;
}

Hom Hom::compose(const Hom& outer, const Hom& inner) {
    if (!(inner.target_ == outer.source_))
        throw std::invalid_argument("Hom::compose: inner target does not match outer source");
    Hom f;
    f.source_ = inner.source_;
    f.target_ = outer.target_;
    f.steps_ = inner.steps_;
    f.steps_.insert(f.steps_.end(), outer.steps_.begin(), outer.steps_.end());
    return f;
}

i64 Hom::apply(i64 x) const {
    source_.require_in_carrier(x);
    for (const Step& s : steps_) x = mod_reduce(x, s.label_modulus);
    return x;
}

std::string Hom::render() const {
    if (steps_.empty()) return "identity on " + source_.render();
    std::string s = source_.render();
    for (const Step& st : steps_) s += " ->/" + hyperlab::render(st.modulus_ideal);
    return s;
}

bool validate_good(const Hom& f, i64 window) {
    const Ring& src = f.source();
    const Ring& dst = f.target();
    const i64 lo = src.finite() ? 0 : -window;
    const i64 hi = src.finite() ? src.modulus() - 1 : window;
    const i64 n = dst.finite() ? dst.modulus() : 0;
    for (i64 x = lo; x <= hi; ++x)
        for (i64 y = lo; y <= hi; ++y) {
            i64 sum = src.finite() ? mod_reduce(x + y, src.modulus()) : x + y;
            i64 mapped_sum = n > 0 ? mod_reduce(f.apply(x) + f.apply(y), n)
                                   : f.apply(x) + f.apply(y);
            if (f.apply(sum) != mapped_sum) return false;
            ElementSet image;
            for (i64 c : hmul(src, x, y)) image.insert(f.apply(c));
            if (image != hmul(dst, f.apply(x), f.apply(y))) return false;
        }
    return true;
}

namespace {

Ideal image_through_step(const Hom::Step& s, const Ideal& i) {
    if (s.source.family() == Family::IntegerScaled) {
        const i64 m = s.label_modulus;
        const i64 g = std::gcd(i.generator(), m);  // >= 1 since m >= 2
        ElementSet out;
        for (i64 x = 0; x < m; x += g) out.insert(x);
        return Ideal::explicit_set(s.target, std::move(out));
    }
    ElementSet out;
    for (i64 x : i.elements()) out.insert(mod_reduce(x, s.label_modulus));
    return Ideal::explicit_set(s.target, std::move(out));
}

Ideal preimage_through_step(const Hom::Step& s, const Ideal& i) {
    if (s.source.family() == Family::IntegerScaled) {
        i64 d = s.label_modulus;
        for (i64 x : i.elements()) d = std::gcd(d, x);
        return Ideal::principal_multiple(d);
    }
    ElementSet out;
    for (i64 x = 0; x < s.source.modulus(); ++x)
        if (i.elements().contains(mod_reduce(x, s.label_modulus))) out.insert(x);
    return Ideal::explicit_set(s.source, std::move(out));
}

}  // namespace

Ideal image_ideal(const Hom& f, const Ideal& i) {
    require_compatible(f.source(), i);
    Ideal acc = i;
    for (const Hom::Step& s : f.steps()) acc = image_through_step(s, acc);
    return acc;
}

Ideal preimage_ideal(const Hom& f, const Ideal& i) {
    require_compatible(f.target(), i);
    Ideal acc = i;
    for (auto it = f.steps().rbegin(); it != f.steps().rend(); ++it)
        acc = preimage_through_step(*it, acc);
    return acc;
}

Ideal kernel(const Hom& f) { return preimage_ideal(f, zero_ideal(f.target())); }

}  // namespace hyperlab
