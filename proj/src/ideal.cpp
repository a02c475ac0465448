#include "hyperlab/ideal.hpp"

#include <map>
#include <numeric>

namespace hyperlab {

namespace detail {

ElementSet additive_closure(ElementSet s, i64 n) {
    s.insert(0);
    bool grew = true;
    while (grew) {
        grew = false;
        ElementSet next = s;
        for (i64 x : s)
            for (i64 y : s) next.insert(mod_reduce(x + y, n));
        if (next != s) {
            s = std::move(next);
            grew = true;
        }
    }
    return s;
}

std::vector<std::pair<i64, int>> factorize(i64 m) {
    std::vector<std::pair<i64, int>> out;
    for (i64 p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

ElementSet multiplier_products_mod(const Ring& r, i64 m, i64 t) {
    ElementSet s{mod_reduce(1, m)};
    for (i64 i = 0; i < t; ++i) {
        ElementSet next;
        for (i64 x : s)
            for (i64 k : r.multipliers()) next.insert(mod_reduce(x * mod_reduce(k, m), m));
        s = std::move(next);
    }
    return s;
}

namespace {

bool divides(i64 d, i64 x) { return d == 0 ? x == 0 : x % d == 0; }

i64 pow_mod(i64 base, i64 exp, i64 m) {
    base = mod_reduce(base, m);
    i64 acc = mod_reduce(1, m);
    for (i64 i = 0; i < exp; ++i) acc = mod_reduce(acc * base, m);
    return acc;
}

}  // namespace
}  // namespace detail

Ideal Ideal::principal_multiple(i64 d) {
    Ideal i;
    i.principal_ = true;
    i.generator_ = d < 0 ? -d : d;
    return i;
}

Ideal Ideal::explicit_set(const Ring& r, ElementSet s) {
    Verdict v = is_hyperideal(r, s);
    if (!v.holds())
        throw std::invalid_argument("not a hyperideal of " + r.render() + ": " +
                                    s.render() + " (" + witness_render(v.witness) + ")");
    Ideal i;
    i.principal_ = false;
    i.elements_ = std::move(s);
    return i;
}

i64 Ideal::generator() const {
    if (!principal_) throw std::logic_error("generator() on an explicit-set ideal");
    return generator_;
}

const ElementSet& Ideal::elements() const {
    if (principal_) throw std::logic_error("elements() on a principal ideal");
    return elements_;
}

bool Ideal::operator<(const Ideal& other) const {
    if (principal_ != other.principal_) return principal_;
    if (principal_) return generator_ < other.generator_;
    if (elements_.size() != other.elements_.size())
        return elements_.size() < other.elements_.size();
    return elements_ < other.elements_;
}

bool compatible(const Ring& r, const Ideal& i) {
    if (i.principal()) return r.family() == Family::IntegerScaled;
    if (r.family() == Family::IntegerScaled) return false;
    for (i64 x : i.elements())
        if (!r.in_carrier(x)) return false;
    return true;
}

void require_compatible(const Ring& r, const Ideal& i) {
    if (!compatible(r, i))
        throw std::invalid_argument("ideal " + render(i) + " does not belong to " + r.render());
}

bool ideal_contains(const Ring& r, const Ideal& i, i64 x) {
    require_compatible(r, i);
    r.require_in_carrier(x);
    return i.principal() ? detail::divides(i.generator(), x) : i.elements().contains(x);
}

bool ideal_subset(const Ring& r, const Ideal& a, const Ideal& b) {
    require_compatible(r, a);
    require_compatible(r, b);
    if (a.principal()) return detail::divides(b.generator(), a.generator());
    return a.elements().subset_of(b.elements());
}

bool is_whole_ring(const Ring& r, const Ideal& i) {
    require_compatible(r, i);
    if (i.principal()) return i.generator() == 1;
    return static_cast<i64>(i.elements().size()) == r.modulus();
}

Verdict is_hyperideal(const Ring& r, const ElementSet& s) {
    if (s.empty()) throw std::invalid_argument("is_hyperideal: empty set");
    if (!r.finite())
        throw std::invalid_argument(
            "is_hyperideal: integer-carrier ideals are the principal handles dZ");
    const i64 n = r.modulus();
    for (i64 x : s) r.require_in_carrier(x);
    for (i64 x : s)
        for (i64 y : s)
            if (!s.contains(detail::mod_reduce(x - y, n)))
                return Verdict::fail(DiffWitness{x, y});
    for (i64 a = 0; a < n; ++a)
        for (i64 x : s) {
            ElementSet prod = hmul(r, a, x);
            if (!prod.subset_of(s)) return Verdict::fail(AbsorbWitness{a, x, std::move(prod)});
        }
    return Verdict::ok();
}

Ideal ideal_sum(const Ring& r, const Ideal& a, const Ideal& b) {
    require_compatible(r, a);
    require_compatible(r, b);
    if (a.principal()) return Ideal::principal_multiple(std::gcd(a.generator(), b.generator()));
    ElementSet out;
    for (i64 x : a.elements())
        for (i64 y : b.elements()) out.insert(detail::mod_reduce(x + y, r.modulus()));
    return Ideal::explicit_set(r, std::move(out));
}

Ideal ideal_intersect(const Ring& r, const Ideal& a, const Ideal& b) {
    require_compatible(r, a);
    require_compatible(r, b);
    if (a.principal()) return Ideal::principal_multiple(std::lcm(a.generator(), b.generator()));
    return Ideal::explicit_set(r, a.elements().set_intersection(b.elements()));
}

Ideal ideal_product(const Ring& r, const Ideal& a, const Ideal& b) {
    require_compatible(r, a);
    require_compatible(r, b);
    if (a.principal()) {
        i64 g = 0;
        for (i64 k : r.multipliers()) g = std::gcd(g, k < 0 ? -k : k);
        return Ideal::principal_multiple(
            detail::mul_checked(g, detail::mul_checked(a.generator(), b.generator())));
    }
    ElementSet products;
    for (i64 x : a.elements())
        for (i64 y : b.elements()) products.merge(hmul(r, x, y));
    return Ideal::explicit_set(r, detail::additive_closure(std::move(products), r.modulus()));
}

namespace {

// Least n with hpower(x, n) inside mZ; the p-adic bound makes n <= emax+1
// sufficient whenever membership holds at all.
i64 member_exponent(const Ring& r, i64 m, i64 x, i64 emax) {
    for (i64 n = 1; n <= emax + 1; ++n) {
        i64 xn = detail::pow_mod(x, n, m);
        bool all_zero = true;
        for (i64 kappa : detail::multiplier_products_mod(r, m, n - 1))
            if (detail::mod_reduce(kappa * xn, m) != 0) {
                all_zero = false;
                break;
            }
        if (all_zero) return n;
    }
    return -1;
}

}  // namespace

RadicalResult radical(const Ring& r, const Ideal& i) {
    require_compatible(r, i);
    RadicalResult out;
    if (i.principal()) {
        const i64 m = i.generator();
        if (m == 0) {
            // No multiplier is zero and the integers have no zero divisors,
            // so only 0 has a power set collapsing to {0}.
            out.ideal = Ideal::principal_multiple(0);
            out.certificates = {{0, 1}};
            return out;
        }
        i64 rad = 1;
        i64 emax = 1;
        for (auto [p, e] : detail::factorize(m)) {
            if (e > emax) emax = e;
            bool coprime_multiplier = false;
            for (i64 k : r.multipliers())
                if (k % p != 0) {
                    coprime_multiplier = true;
                    break;
                }
            if (coprime_multiplier) rad *= p;
        }
        out.ideal = Ideal::principal_multiple(rad);
        ElementSet samples{rad, 2 * rad, 3 * rad, m};
        for (i64 x : samples) {
            i64 n = member_exponent(r, m, x, emax);
            if (n < 0)
                throw std::logic_error("radical: valuation generator " + std::to_string(rad) +
                                       " has a member without a bounded exponent");
            out.certificates.emplace_back(x, n);
        }
        return out;
    }

    // Finite carrier: decide membership of each x by running the power-set
    // sequence {x}, {x}∘x, ... until it lands inside I or revisits a set.
    const ElementSet& target = i.elements();
    ElementSet members;
    for (i64 x = 0; x < r.modulus(); ++x) {
        ElementSet power = ElementSet::single(x);
        std::map<ElementSet, i64> seen;
        for (i64 n = 1;; ++n) {
            if (power.subset_of(target)) {
                members.insert(x);
                out.certificates.emplace_back(x, n);
                break;
            }
            if (seen.count(power)) break;
            seen.emplace(power, n);
            power = hset_product(r, power, ElementSet::single(x));
        }
    }
    out.ideal = Ideal::explicit_set(r, std::move(members));
    return out;
}

Ideal radical_ideal(const Ring& r, const Ideal& i) { return radical(r, i).ideal; }

Ideal principal_ideal(const Ring& r, i64 a) {
    r.require_in_carrier(a);
    if (!r.finite()) return Ideal::principal_multiple(a);
    const i64 n = r.modulus();
    ElementSet s = detail::additive_closure(ElementSet{a}, n);
    for (;;) {
        ElementSet grown = s;
        for (i64 q = 0; q < n; ++q)
            for (i64 x : s) grown.merge(hmul(r, q, x));
        grown = detail::additive_closure(std::move(grown), n);
        if (grown == s) break;
        s = std::move(grown);
    }
    return Ideal::explicit_set(r, std::move(s));
}

Ideal zero_ideal(const Ring& r) { return principal_ideal(r, 0); }

std::vector<Ideal> all_ideals(const Ring& r) {
    if (!r.finite())
        throw std::invalid_argument("all_ideals: infinite lattice over the integer carrier");
    const i64 n = r.modulus();
    std::vector<Ideal> out;
    for (i64 d = 1; d <= n; ++d) {
        if (n % d) continue;
        ElementSet s;
        for (i64 x = 0; x < n; x += d) s.insert(x);
        if (is_hyperideal(r, s).holds()) out.push_back(Ideal::explicit_set(r, std::move(s)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string render(const Ideal& i) {
    return i.principal() ? std::to_string(i.generator()) + "Z" : i.elements().render();
}

nlohmann::ordered_json ideal_to_json(const Ideal& i) {
    nlohmann::ordered_json j;
    if (i.principal())
        j["principal"] = i.generator();
    else
        j["elements"] = i.elements().values();
    return j;
}

Ideal ideal_from_json(const Ring& r, const nlohmann::json& spec) {
    if (!spec.is_object())
        throw std::invalid_argument("ideal spec: expected {\"principal\": d} or {\"elements\": [...]}");
    if (spec.contains("principal")) {
        if (r.family() != Family::IntegerScaled)
            throw std::invalid_argument("ideal spec: principal handles require the integer family");
        return Ideal::principal_multiple(spec.at("principal").get<i64>());
    }
    if (spec.contains("elements")) {
        if (!r.finite())
            throw std::invalid_argument("ideal spec: element lists require a finite carrier");
        return Ideal::explicit_set(r, ElementSet(spec.at("elements").get<std::vector<i64>>()));
    }
    throw std::invalid_argument("ideal spec: expected \"principal\" or \"elements\"");
}

}  // namespace hyperlab
