#include "hyperlab/ring.hpp"

#include <array>

namespace hyperlab {

std::string family_name(Family f) {
    switch (f) {
        case Family::IntegerScaled: return "integer_scaled";
        case Family::ModularScaled: return "modular_scaled";
        case Family::ModularCoset:  return "modular_coset";
    }
    return "?";
}

namespace detail {

i64 mul_checked(i64 a, i64 b) {
    i64 out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("hyperlab: integer product overflows 64 bits");
    return out;
}

}  // namespace detail

Ring Ring::integer_scaled(std::vector<i64> multipliers) {
    Ring r;
    r.family_ = Family::IntegerScaled;
    r.multipliers_ = ElementSet(std::move(multipliers));
    if (r.multipliers_.empty())
        throw std::invalid_argument("integer_scaled: multiplier set must be nonempty");
    if (r.multipliers_.contains(0))
        throw std::invalid_argument("integer_scaled: 0 is not a valid multiplier");
    return r;
}

Ring Ring::modular_scaled(i64 modulus, std::vector<i64> multipliers) {
    Ring r;
    r.family_ = Family::ModularScaled;
    r.modulus_ = modulus;
    r.multipliers_ = ElementSet(std::move(multipliers));
    if (modulus < 2)
        throw std::invalid_argument("modular_scaled: modulus must be >= 2");
    if (r.multipliers_.empty())
        throw std::invalid_argument("modular_scaled: multiplier set must be nonempty");
    for (i64 k : r.multipliers_)
        if (k < 0 || k >= modulus)
            throw std::invalid_argument("modular_scaled: multiplier outside 0..n-1");
    return r;
}

Ring Ring::modular_coset(i64 modulus, std::vector<i64> coset) {
    Ring r;
    r.family_ = Family::ModularCoset;
    r.modulus_ = modulus;
    r.coset_ = ElementSet(std::move(coset));
    if (modulus < 2)
        throw std::invalid_argument("modular_coset: modulus must be >= 2");
    if (!r.coset_.contains(0))
        throw std::invalid_argument("modular_coset: coset must contain 0");
    for (i64 j : r.coset_) {
        if (j < 0 || j >= modulus)
            throw std::invalid_argument("modular_coset: coset element outside 0..n-1");
        for (i64 j2 : r.coset_)
            if (!r.coset_.contains(detail::mod_reduce(j + j2, modulus)))
                throw std::invalid_argument(
                    "modular_coset: coset is not closed under addition mod n");
    }
    return r;
}

i64 Ring::modulus() const {
    if (!finite())
        throw std::logic_error("modulus() on an integer-carrier ring");
    return modulus_;
}

void Ring::require_in_carrier(i64 x) const {
    if (!in_carrier(x))
        throw std::invalid_argument("element " + std::to_string(x) +
                                    " outside carrier of " + render());
}

bool Ring::proper() const {
    switch (family_) {
        case Family::IntegerScaled:
            return multipliers_.size() >= 2;
        case Family::ModularCoset:
            return coset_.size() >= 2;
        case Family::ModularScaled:
            for (i64 a = 0; a < modulus_; ++a)
                for (i64 b = a; b < modulus_; ++b)
                    if (hmul(*this, a, b).size() >= 2) return true;
            return false;
    }
    return false;
}

std::string Ring::render() const {
    switch (family_) {
        case Family::IntegerScaled:
            return "integer_scaled K=" + multipliers_.render();
        case Family::ModularScaled:
            return "modular_scaled n=" + std::to_string(modulus_) +
                   " K=" + multipliers_.render();
        case Family::ModularCoset:
            return "modular_coset n=" + std::to_string(modulus_) +
                   " J=" + coset_.render();
    }
    return "?";
}

ElementSet hmul(const Ring& r, i64 a, i64 b) {
    r.require_in_carrier(a);
    r.require_in_carrier(b);
    std::vector<i64> out;
    switch (r.family()) {
        case Family::IntegerScaled: {
            i64 ab = detail::mul_checked(a, b);
            out.reserve(r.multipliers().size());
            for (i64 k : r.multipliers()) out.push_back(detail::mul_checked(k, ab));
            break;
        }
        case Family::ModularScaled: {
            i64 n = r.modulus();
            i64 ab = detail::mod_reduce(a * b, n);
            out.reserve(r.multipliers().size());
            for (i64 k : r.multipliers()) out.push_back(detail::mod_reduce(k * ab, n));
            break;
        }
        case Family::ModularCoset: {
            i64 n = r.modulus();
            i64 ab = detail::mod_reduce(a * b, n);
            out.reserve(r.coset().size());
            for (i64 j : r.coset()) out.push_back(detail::mod_reduce(ab + j, n));
            break;
        }
    }
    return ElementSet(std::move(out));
}

ElementSet hset_product(const Ring& r, const ElementSet& a, const ElementSet& b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("hset_product: empty operand");
    ElementSet out;
    for (i64 x : a)
        for (i64 y : b) out.merge(hmul(r, x, y));
    return out;
}

ElementSet hpower(const Ring& r, i64 a, i64 n) {
    if (n < 1)
        throw std::invalid_argument("hpower: exponent must be >= 1");
    r.require_in_carrier(a);
    ElementSet acc = ElementSet::single(a);
    for (i64 i = 1; i < n; ++i) acc = hset_product(r, acc, ElementSet::single(a));
    return acc;
}

namespace {

// A+B elementwise, reduced mod n when n > 0.
ElementSet sum_set(const ElementSet& a, const ElementSet& b, i64 n) {
    ElementSet out;
    for (i64 x : a)
        for (i64 y : b) out.insert(n > 0 ? detail::mod_reduce(x + y, n) : x + y);
    return out;
}

}  // namespace

AxiomReport check_axioms(const Ring& r, i64 window) {
    AxiomReport rep;
    rep.associative = rep.distributive_inclusion = rep.strongly_distributive = true;
    rep.absorbing_zero = rep.commutative = true;

    const bool finite = r.finite();
    const i64 lo = finite ? 0 : -window;
    const i64 hi = finite ? r.modulus() - 1 : window;
    const i64 n = finite ? r.modulus() : 0;

    for (i64 a = lo; a <= hi; ++a) {
        ElementSet a0 = hmul(r, a, 0);
        if (rep.absorbing_zero && (!a0.contains(0) || a0 != hmul(r, 0, a))) {
            rep.absorbing_zero = false;
            rep.zero_counterexample = {{a, 0, 0}};
        }
        for (i64 b = lo; b <= hi; ++b) {
            if (rep.commutative && hmul(r, a, b) != hmul(r, b, a)) {
                rep.commutative = false;
                rep.comm_counterexample = {{a, b, 0}};
            }
            for (i64 c = lo; c <= hi; ++c) {
                ElementSet ab_c = hset_product(r, hmul(r, a, b), ElementSet::single(c));
                ElementSet a_bc = hset_product(r, ElementSet::single(a), hmul(r, b, c));
                if (rep.associative && ab_c != a_bc) {
                    rep.associative = false;
                    rep.assoc_counterexample = {{a, b, c}};
                }
                i64 bc_sum = finite ? detail::mod_reduce(b + c, n) : b + c;
                ElementSet left = hmul(r, a, bc_sum);
                ElementSet right = sum_set(hmul(r, a, b), hmul(r, a, c), n);
                if (rep.distributive_inclusion && !left.subset_of(right)) {
                    rep.distributive_inclusion = false;
                    rep.distr_counterexample = {{a, b, c}};
                }
                if (rep.strongly_distributive && left != right) {
                    rep.strongly_distributive = false;
                    rep.strong_counterexample = {{a, b, c}};
                }
            }
        }
    }
    return rep;
}

nlohmann::ordered_json ring_to_json(const Ring& r) {
    nlohmann::ordered_json j;
    j["family"] = family_name(r.family());
    switch (r.family()) {
        case Family::IntegerScaled:
            j["multipliers"] = r.multipliers().values();
            break;
        case Family::ModularScaled:
            j["modulus"] = r.modulus();
            j["multipliers"] = r.multipliers().values();
            break;
        case Family::ModularCoset:
            j["modulus"] = r.modulus();
            j["coset"] = r.coset().values();
            break;
    }
    return j;
}

Ring ring_from_json(const nlohmann::json& spec) {
    if (!spec.is_object() || !spec.contains("family"))
        throw std::invalid_argument("ring spec: expected an object with a \"family\" field");
    std::string fam = spec.at("family").get<std::string>();
    auto ints = [&](const char* key) {
        if (!spec.contains(key))
            throw std::invalid_argument(std::string("ring spec: missing \"") + key + "\"");
        return spec.at(key).get<std::vector<i64>>();
    };
    if (fam == "integer_scaled") return Ring::integer_scaled(ints("multipliers"));
    if (fam == "modular_scaled")
        return Ring::modular_scaled(spec.at("modulus").get<i64>(), ints("multipliers"));
    if (fam == "modular_coset")
        return Ring::modular_coset(spec.at("modulus").get<i64>(), ints("coset"));
    throw std::invalid_argument("ring spec: unknown family \"" + fam + "\"");
}

nlohmann::ordered_json axiom_report_to_json(const AxiomReport& rep) {
    nlohmann::ordered_json j;
    auto put = [&](const char* name, bool ok, const std::optional<std::array<i64, 3>>& cex) {
        j[name]["holds"] = ok;
        if (cex) j[name]["counterexample"] = *cex;
    };
    put("associative", rep.associative, rep.assoc_counterexample);
    put("distributive_inclusion", rep.distributive_inclusion, rep.distr_counterexample);
    put("strongly_distributive", rep.strongly_distributive, rep.strong_counterexample);
    put("absorbing_zero", rep.absorbing_zero, rep.zero_counterexample);
    put("commutative", rep.commutative, rep.comm_counterexample);
    return j;
}

}  // namespace hyperlab
