#include "hyperlab/classify.hpp"

#include <map>

namespace hyperlab {

// ---------------------------------------------------------------------------
// Verdict / witness rendering (declared in verdict.hpp)

std::string status_name(Status s) {
    switch (s) {
        case Status::Holds: return "true";
        case Status::Fails: return "false";
        case Status::NotProper: return "not_proper";
    }
    return "?";
}

nlohmann::ordered_json witness_to_json(const Witness& w) {
    using J = nlohmann::ordered_json;
    return std::visit(
        [](const auto& v) -> J {
            using T = std::decay_t<decltype(v)>;
            J j;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return nullptr;
            } else if constexpr (std::is_same_v<T, PairWitness>) {
                j["kind"] = "pair";
                j["x"] = v.x;
                j["y"] = v.y;
                j["product"] = v.product.values();
            } else if constexpr (std::is_same_v<T, TripleWitness>) {
                j["kind"] = "triple";
                j["a"] = v.a;
                j["b"] = v.b;
                j["c"] = v.c;
                j["abc"] = v.abc.values();
                j["ab"] = v.ab.values();
                j["bc"] = v.bc.values();
                j["ac"] = v.ac.values();
            } else if constexpr (std::is_same_v<T, ProductWitness>) {
                j["kind"] = "product";
                j["factors"] = v.factors;
                j["value"] = v.value.values();
            } else if constexpr (std::is_same_v<T, UnionWitness>) {
                j["kind"] = "union";
                j["meets"] = witness_to_json(Witness{v.meets});
                j["escapes"] = witness_to_json(Witness{v.escapes});
                j["union"] = v.combined.values();
            } else if constexpr (std::is_same_v<T, AbsorbWitness>) {
                j["kind"] = "absorption";
                j["r"] = v.r;
                j["x"] = v.x;
                j["product"] = v.product.values();
            } else if constexpr (std::is_same_v<T, DiffWitness>) {
                j["kind"] = "difference";
                j["x"] = v.x;
                j["y"] = v.y;
            }
            return j;
        },
        w);
}

nlohmann::ordered_json verdict_to_json(const Verdict& v) {
    nlohmann::ordered_json j;
    j["holds"] = v.holds();
    if (v.not_proper()) j["status"] = "not_proper";
    if (v.fails()) j["witness"] = witness_to_json(v.witness);
    return j;
}

std::string witness_render(const Witness& w) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return "";
            } else if constexpr (std::is_same_v<T, PairWitness>) {
                return "x=" + std::to_string(v.x) + " y=" + std::to_string(v.y) +
                       " x*y=" + v.product.render();
            } else if constexpr (std::is_same_v<T, TripleWitness>) {
                return "a=" + std::to_string(v.a) + " b=" + std::to_string(v.b) +
                       " c=" + std::to_string(v.c) + " a*b*c=" + v.abc.render() +
                       " a*b=" + v.ab.render() + " b*c=" + v.bc.render() +
                       " a*c=" + v.ac.render();
            } else if constexpr (std::is_same_v<T, ProductWitness>) {
                std::string s = "product ";
                for (std::size_t i = 0; i < v.factors.size(); ++i) {
                    if (i) s += "*";
                    s += std::to_string(v.factors[i]);
                }
                return s + " = " + v.value.render();
            } else if constexpr (std::is_same_v<T, UnionWitness>) {
                return witness_render(Witness{v.meets}) + " and " +
                       witness_render(Witness{v.escapes}) + " union " + v.combined.render();
            } else if constexpr (std::is_same_v<T, AbsorbWitness>) {
                return "r=" + std::to_string(v.r) + " x=" + std::to_string(v.x) +
                       " r*x=" + v.product.render();
            } else if constexpr (std::is_same_v<T, DiffWitness>) {
                return "x=" + std::to_string(v.x) + " y=" + std::to_string(v.y) +
                       " with x-y escaping";
            }
            return "";
        },
        w);
}

// ---------------------------------------------------------------------------
// Shared residue/membership machinery

namespace {

using detail::mod_reduce;

// Membership tests for one (ring, ideal) pair, arranged so the quantifier
// sweeps run on plain integers. For the integer family the quantified
// variables range over residues mod m and every test is a divisibility.
struct Scope {
    const Ring* ring;
    bool principal;
    i64 gen = 0;       // principal: v in I iff gen | v
    i64 rad_gen = 0;   // generator of the radical (principal only)
    i64 n = 0;         // carrier size for finite families
    std::vector<char> in_ideal;
    std::vector<char> in_radical;

    Scope(const Ring& r, const Ideal& i, bool need_radical) : ring(&r) {
        principal = i.principal();
        if (principal) {
            gen = i.generator();
            if (need_radical) rad_gen = radical_ideal(r, i).generator();
        } else {
            n = r.modulus();
            in_ideal.assign(n, 0);
            for (i64 x : i.elements()) in_ideal[x] = 1;
            if (need_radical) {
                in_radical.assign(n, 0);
                Ideal rad = radical_ideal(r, i);
                for (i64 x : rad.elements()) in_radical[x] = 1;
            }
        }
    }

    i64 domain() const { return principal ? gen : n; }

    bool member(i64 v) const {
        if (principal) return gen == 0 ? v == 0 : v % gen == 0;
        return in_ideal[mod_reduce(v, n)];
    }
    bool radical_member(i64 v) const {
        if (principal) return rad_gen == 0 ? v == 0 : v % rad_gen == 0;
        return in_radical[mod_reduce(v, n)];
    }

    // x∘y ⊆ I (or ⊆ sqrt I)
    bool pair_in(i64 x, i64 y, bool radical) const {
        const Ring& r = *ring;
        if (r.family() == Family::ModularCoset) {
            i64 xy = mod_reduce(x * y, n);
            for (i64 j : r.coset())
                if (!(radical ? in_radical[mod_reduce(xy + j, n)] : in_ideal[mod_reduce(xy + j, n)]))
                    return false;
            return true;
        }
        for (i64 k : r.multipliers()) {
            i64 v = k * x * y;
            if (!(radical ? radical_member(v) : member(v))) return false;
        }
        return true;
    }

    // x∘y∘z ⊆ I
    bool triple_in(i64 x, i64 y, i64 z) const {
        const Ring& r = *ring;
        if (r.family() == Family::ModularCoset) {
            i64 xy = mod_reduce(x * y, n);
            for (i64 j1 : r.coset()) {
                i64 u = mod_reduce((xy + j1) * z, n);
                for (i64 j2 : r.coset())
                    if (!in_ideal[mod_reduce(u + j2, n)]) return false;
            }
            return true;
        }
        for (i64 k1 : r.multipliers())
            for (i64 k2 : r.multipliers())
                if (!member(k1 * k2 * x * y * z)) return false;
        return true;
    }
};

TripleWitness make_triple_witness(const Ring& r, i64 a, i64 b, i64 c) {
    ElementSet ab = hmul(r, a, b);
    return TripleWitness{a,
                         b,
                         c,
                         hset_product(r, ab, ElementSet::single(c)),
                         ab,
                         hmul(r, b, c),
                         hmul(r, a, c)};
}

}  // namespace

// ---------------------------------------------------------------------------
// Prime / primary

namespace {

Verdict pair_condition_scan(const Ring& r, const Ideal& i, bool radical_on_second,
                            sweep::Mode mode) {
    require_compatible(r, i);
    if (is_whole_ring(r, i)) return Verdict::improper();
    Scope sc(r, i, radical_on_second);
    if (sc.principal && sc.gen == 0) {
        // x∘y ⊆ {0} forces k*x*y = 0 for every nonzero k, hence x = 0 or
        // y = 0; the integers have no zero divisors.
        return Verdict::ok();
    }
    const i64 m = sc.domain();
    i64 idx = sweep::first_match(m * m, mode, [&](i64 t) {
        auto [x, y] = sweep::decode_pair(t, m);
        if (!sc.pair_in(x, y, false)) return false;
        if (sc.member(x)) return false;
        return radical_on_second ? !sc.radical_member(y) : !sc.member(y);
    });
    if (idx < 0) return Verdict::ok();
    auto [x, y] = sweep::decode_pair(idx, m);
    return Verdict::fail(PairWitness{x, y, hmul(r, x, y)});
}

}  // namespace

Verdict is_prime(const Ring& r, const Ideal& i, sweep::Mode mode) {
    return pair_condition_scan(r, i, false, mode);
}

Verdict is_primary(const Ring& r, const Ideal& i, sweep::Mode mode) {
    return pair_condition_scan(r, i, true, mode);
}

// ---------------------------------------------------------------------------
// 2-absorbing / 2-absorbing primary

namespace {

Verdict triple_condition_scan(const Ring& r, const Ideal& i, bool radical_pairs,
                              sweep::Mode mode) {
    require_compatible(r, i);
    if (is_whole_ring(r, i)) return Verdict::improper();
    Scope sc(r, i, radical_pairs);
    if (sc.principal && sc.gen == 0) {
        // a∘b∘c ⊆ {0} forces abc = 0; the factor that vanishes makes one of
        // the pair products {0}.
        return Verdict::ok();
    }
    const i64 m = sc.domain();
    i64 idx = sweep::first_match(m * m * m, mode, [&](i64 t) {
        auto abc = sweep::decode_triple(t, m);
        i64 a = abc[0], b = abc[1], c = abc[2];
        if (!sc.triple_in(a, b, c)) return false;
        if (sc.pair_in(a, b, false)) return false;
        if (sc.pair_in(b, c, radical_pairs)) return false;
        if (sc.pair_in(a, c, radical_pairs)) return false;
        return true;
    });
    if (idx < 0) return Verdict::ok();
    auto abc = sweep::decode_triple(idx, m);
    return Verdict::fail(make_triple_witness(r, abc[0], abc[1], abc[2]));
}

}  // namespace

Verdict is_two_absorbing(const Ring& r, const Ideal& i, sweep::Mode mode) {
    return triple_condition_scan(r, i, false, mode);
}

Verdict is_two_absorbing_primary(const Ring& r, const Ideal& i, sweep::Mode mode) {
    return triple_condition_scan(r, i, true, mode);
}

// ---------------------------------------------------------------------------
// C-ideals and C_u-ideals

ProductTrace ProductTrace::compute(const Ring& r, i64 modulus) {
    if (modulus < 1) throw std::invalid_argument("ProductTrace: modulus must be >= 1");
    ProductTrace tr;
    tr.modulus = modulus;
    std::map<ElementSet, i64> seen;  // set -> 1-based position
    ElementSet s = detail::multiplier_products_mod(r, modulus, 1);
    for (;;) {
        auto it = seen.find(s);
        if (it != seen.end()) {
            tr.preperiod = it->second - 1;
            tr.period = static_cast<i64>(tr.sets.size()) + 1 - it->second;
            return tr;
        }
        seen.emplace(s, static_cast<i64>(tr.sets.size()) + 1);
        tr.sets.push_back(s);
        ElementSet next;
        for (i64 x : s)
            for (i64 k : r.multipliers())
                next.insert(mod_reduce(x * mod_reduce(k, modulus), modulus));
        s = std::move(next);
    }
}

namespace {

// Integer product sets of t multipliers (as integers, not residues).
ElementSet multiplier_products_int(const Ring& r, i64 t) {
    ElementSet s{1};
    for (i64 i = 0; i < t; ++i) {
        ElementSet next;
        for (i64 x : s)
            for (i64 k : r.multipliers()) next.insert(detail::mul_checked(x, k));
        s = std::move(next);
    }
    return s;
}

ProductWitness scaled_product_witness(const Ring& r, i64 base, i64 t) {
    ProductWitness w;
    w.factors.assign(static_cast<std::size_t>(t) + 1, 1);
    w.factors[0] = base;
    ElementSet value;
    for (i64 kappa : multiplier_products_int(r, t))
        value.insert(detail::mul_checked(kappa, base));
    w.value = value;
    return w;
}

}  // namespace

Verdict is_c_ideal(const Ring& r, const Ideal& i) {
    require_compatible(r, i);
    if (i.principal()) {
        const i64 m = i.generator();
        if (m == 0) return Verdict::ok();  // a product meets {0} only by being {0}
        if (m == 1) return Verdict::ok();
        ProductTrace tr = ProductTrace::compute(r, m);
        for (i64 t = 1; t <= static_cast<i64>(tr.sets.size()); ++t) {
            const ElementSet& s = tr.sets[t - 1];
            for (i64 base = 1; base < m; ++base) {
                bool any_zero = false, any_nonzero = false;
                for (i64 kappa : s) {
                    if (mod_reduce(kappa * base, m) == 0) any_zero = true;
                    else any_nonzero = true;
                }
                if (any_zero && any_nonzero)
                    return Verdict::fail(scaled_product_witness(r, base, t));
            }
        }
        return Verdict::ok();
    }

    // Finite carrier: breadth-first over reachable product value sets.
    const i64 n = r.modulus();
    const ElementSet& target = i.elements();
    std::map<ElementSet, bool> visited;
    std::vector<ProductWitness> frontier;
    for (i64 a = 0; a < n; ++a)
        for (i64 b = 0; b < n; ++b) {
            ElementSet v = hmul(r, a, b);
            if (visited.emplace(v, true).second)
                frontier.push_back(ProductWitness{{a, b}, std::move(v)});
        }
    while (!frontier.empty()) {
        std::vector<ProductWitness> next;
        for (const ProductWitness& p : frontier) {
            if (p.value.intersects(target) && !p.value.subset_of(target))
                return Verdict::fail(p);
            for (i64 c = 0; c < n; ++c) {
                ElementSet v = hset_product(r, p.value, ElementSet::single(c));
                if (visited.emplace(v, true).second) {
                    ProductWitness q;
                    q.factors = p.factors;
                    q.factors.push_back(c);
                    q.value = std::move(v);
                    next.push_back(std::move(q));
                }
            }
        }
        frontier = std::move(next);
    }
    return Verdict::ok();
}

Verdict is_cu_ideal(const Ring& r, const Ideal& i) {
    require_compatible(r, i);

    // Because 0∘0 lies inside every hyperideal, a union containing any
    // product that escapes I already meets I; so the class condition
    // collapses to: every product of two or more elements is contained in I.
    // Containment of all depth-2 products propagates to all depths by
    // absorption.
    auto escaping_pair = [&]() -> std::optional<ProductWitness> {
        if (i.principal()) {
            const i64 m = i.generator();
            if (m == 1) return std::nullopt;
            // representatives 1..max(m,1): a residue 0 factor is witnessed
            // by the nonzero representative m itself
            const i64 hi = m == 0 ? 1 : m;
            for (i64 a = 1; a <= hi; ++a)
                for (i64 b = 1; b <= hi; ++b) {
                    ElementSet v = hmul(r, a, b);
                    bool contained = true;
                    for (i64 e : v)
                        if (!(m == 0 ? e == 0 : e % m == 0)) {
                            contained = false;
                            break;
                        }
                    if (!contained) return ProductWitness{{a, b}, std::move(v)};
                }
            return std::nullopt;
        }
        const i64 n = r.modulus();
        for (i64 a = 0; a < n; ++a)
            for (i64 b = 0; b < n; ++b) {
                ElementSet v = hmul(r, a, b);
                if (!v.subset_of(i.elements())) return ProductWitness{{a, b}, std::move(v)};
            }
        return std::nullopt;
    };

    auto escape = escaping_pair();
    if (!escape) return Verdict::ok();

    auto meets = [&](const ElementSet& v) {
        for (i64 e : v)
            if (i.principal() ? (i.generator() == 0 ? e == 0 : e % i.generator() == 0)
                              : i.elements().contains(e))
                return true;
        return false;
    };
    if (meets(escape->value)) return Verdict::fail(*escape);

    // The escaping product misses I entirely; pair it with the first product
    // that meets I at a nonzero element (falling back to 0∘0).
    ProductWitness meeting;
    bool found = false;
    if (i.principal()) {
        const i64 m = i.generator();
        const i64 hi = m == 0 ? 1 : m;
        for (i64 a = 1; a <= hi && !found; ++a)
            for (i64 b = 1; b <= hi && !found; ++b) {
                ElementSet v = hmul(r, a, b);
                for (i64 e : v)
                    if (e != 0 && (m == 0 ? false : e % m == 0)) {
                        meeting = ProductWitness{{a, b}, v};
                        found = true;
                        break;
                    }
            }
    } else {
        const i64 n = r.modulus();
        for (i64 a = 0; a < n && !found; ++a)
            for (i64 b = 0; b < n && !found; ++b) {
                ElementSet v = hmul(r, a, b);
                for (i64 e : v)
                    if (e != 0 && i.elements().contains(e)) {
                        meeting = ProductWitness{{a, b}, v};
                        found = true;
                        break;
                    }
            }
    }
    if (!found) meeting = ProductWitness{{0, 0}, hmul(r, 0, 0)};

    UnionWitness w;
    w.combined = meeting.value.set_union(escape->value);
    w.meets = std::move(meeting);
    w.escapes = std::move(*escape);
    return Verdict::fail(std::move(w));
}

// ---------------------------------------------------------------------------
// Minimal primes

std::vector<Ideal> minimal_primes(const Ring& r, const Ideal& i, sweep::Mode mode) {
    require_compatible(r, i);
    if (is_prime(r, i, mode).holds()) return {i};

    std::vector<Ideal> primes;
    if (i.principal()) {
        const i64 m = i.generator();
        if (m == 1) return {};  // the whole ring has no proper primes above it
        if (m == 0)
            throw std::logic_error("minimal_primes: the zero ideal here is already prime");
        for (i64 d = 2; d <= m; ++d)
            if (m % d == 0 && is_prime(r, Ideal::principal_multiple(d), mode).holds())
                primes.push_back(Ideal::principal_multiple(d));
    } else {
        for (const Ideal& cand : all_ideals(r))
            if (ideal_subset(r, i, cand) && is_prime(r, cand, mode).holds())
                primes.push_back(cand);
    }

    std::vector<Ideal> minimal;
    for (const Ideal& p : primes) {
        bool has_smaller = false;
        for (const Ideal& q : primes)
            if (!(q == p) && ideal_subset(r, q, p)) {
                has_smaller = true;
                break;
            }
        if (!has_smaller) minimal.push_back(p);
    }
    std::sort(minimal.begin(), minimal.end());
    return minimal;
}

// ---------------------------------------------------------------------------
// Aggregate + witness replay

Classification classify_all(const Ring& r, const Ideal& i, sweep::Mode mode) {
    Classification c;
    c.proper = !is_whole_ring(r, i);
    c.prime = is_prime(r, i, mode);
    c.primary = is_primary(r, i, mode);
    c.two_absorbing = is_two_absorbing(r, i, mode);
    c.two_absorbing_primary = is_two_absorbing_primary(r, i, mode);
    c.c_ideal = is_c_ideal(r, i);
    c.cu_ideal = is_cu_ideal(r, i);
    c.radical = radical_ideal(r, i);
    c.min_primes = minimal_primes(r, i, mode);
    return c;
}

bool known_predicate(const std::string& key) {
    return key == "prime" || key == "primary" || key == "2a" || key == "2ap" || key == "c" ||
           key == "cu";
}

Verdict run_predicate(const std::string& key, const Ring& r, const Ideal& i, sweep::Mode mode) {
    if (key == "prime") return is_prime(r, i, mode);
    if (key == "primary") return is_primary(r, i, mode);
    if (key == "2a") return is_two_absorbing(r, i, mode);
    if (key == "2ap") return is_two_absorbing_primary(r, i, mode);
    if (key == "c") return is_c_ideal(r, i);
    if (key == "cu") return is_cu_ideal(r, i);
    throw std::invalid_argument("unknown predicate \"" + key + "\"");
}

ElementSet product_of_factors(const Ring& r, const std::vector<i64>& factors) {
    if (factors.empty()) throw std::invalid_argument("product_of_factors: no factors");
    ElementSet acc = ElementSet::single(factors[0]);
    for (std::size_t k = 1; k < factors.size(); ++k)
        acc = hset_product(r, acc, ElementSet::single(factors[k]));
    return acc;
}

namespace {

bool set_inside(const Ring& r, const Ideal& i, const ElementSet& s) {
    for (i64 v : s)
        if (!ideal_contains(r, i, r.finite() ? mod_reduce(v, r.modulus()) : v)) return false;
    return true;
}

bool set_meets(const Ring& r, const Ideal& i, const ElementSet& s) {
    for (i64 v : s)
        if (ideal_contains(r, i, r.finite() ? mod_reduce(v, r.modulus()) : v)) return true;
    return false;
}

}  // namespace

bool witness_confirms(const Ring& r, const Ideal& i, const std::string& predicate,
                      const Witness& w) {
    if (predicate == "prime" || predicate == "primary") {
        const auto* pw = std::get_if<PairWitness>(&w);
        if (!pw) return false;
        ElementSet prod = hmul(r, pw->x, pw->y);
        if (prod != pw->product || !set_inside(r, i, prod)) return false;
        if (ideal_contains(r, i, pw->x)) return false;
        const Ideal second = predicate == "primary" ? radical_ideal(r, i) : i;
        return !ideal_contains(r, second, pw->y);
    }
    if (predicate == "2a" || predicate == "2ap") {
        const auto* tw = std::get_if<TripleWitness>(&w);
        if (!tw) return false;
        ElementSet ab = hmul(r, tw->a, tw->b);
        ElementSet bc = hmul(r, tw->b, tw->c);
        ElementSet ac = hmul(r, tw->a, tw->c);
        ElementSet abc = hset_product(r, ab, ElementSet::single(tw->c));
        if (ab != tw->ab || bc != tw->bc || ac != tw->ac || abc != tw->abc) return false;
        if (!set_inside(r, i, abc)) return false;
        const Ideal pair_target = predicate == "2ap" ? radical_ideal(r, i) : i;
        return !set_inside(r, i, ab) && !set_inside(r, pair_target, bc) &&
               !set_inside(r, pair_target, ac);
    }
    if (predicate == "c") {
        const auto* pw = std::get_if<ProductWitness>(&w);
        if (!pw || pw->factors.size() < 2) return false;
        ElementSet v = product_of_factors(r, pw->factors);
        return v == pw->value && set_meets(r, i, v) && !set_inside(r, i, v);
    }
    if (predicate == "cu") {
        if (const auto* pw = std::get_if<ProductWitness>(&w)) {
            if (pw->factors.size() < 2) return false;
            ElementSet v = product_of_factors(r, pw->factors);
            return v == pw->value && set_meets(r, i, v) && !set_inside(r, i, v);
        }
        const auto* uw = std::get_if<UnionWitness>(&w);
        if (!uw || uw->meets.factors.size() < 2 || uw->escapes.factors.size() < 2) return false;
        if (product_of_factors(r, uw->meets.factors) != uw->meets.value) return false;
        if (product_of_factors(r, uw->escapes.factors) != uw->escapes.value) return false;
        if (uw->combined != uw->meets.value.set_union(uw->escapes.value)) return false;
        return set_meets(r, i, uw->combined) && !set_inside(r, i, uw->combined);
    }
    if (predicate == "hyperideal") {
        if (const auto* aw = std::get_if<AbsorbWitness>(&w))
            return hmul(r, aw->r, aw->x) == aw->product && !set_inside(r, i, aw->product);
        if (const auto* dw = std::get_if<DiffWitness>(&w))
            return !ideal_contains(r, i, mod_reduce(dw->x - dw->y, r.modulus()));
        return false;
    }
    throw std::invalid_argument("witness_confirms: unknown predicate \"" + predicate + "\"");
}

nlohmann::ordered_json classification_to_json(const Ring& r, const Classification& c) {
    nlohmann::ordered_json j;
    j["ring"] = ring_to_json(r);
    j["proper_ideal"] = c.proper;
    j["verdicts"]["prime"] = verdict_to_json(c.prime);
    j["verdicts"]["primary"] = verdict_to_json(c.primary);
    j["verdicts"]["2a"] = verdict_to_json(c.two_absorbing);
    j["verdicts"]["2ap"] = verdict_to_json(c.two_absorbing_primary);
    j["verdicts"]["c"] = verdict_to_json(c.c_ideal);
    j["verdicts"]["cu"] = verdict_to_json(c.cu_ideal);
    j["radical"] = render(c.radical);
    nlohmann::ordered_json primes = nlohmann::ordered_json::array();
    for (const Ideal& p : c.min_primes) primes.push_back(render(p));
    j["minimal_primes"] = primes;
    return j;
}

}  // namespace hyperlab
