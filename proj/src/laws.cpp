#include "hyperlab/laws.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>

namespace hyperlab {

nlohmann::ordered_json GridSpec::to_json() const {
    nlohmann::ordered_json j;
    j["dmax"] = dmax;
    j["modulus_cap"] = modulus_cap;
    j["multiplier_sets"] = multiplier_sets;
    j["include_modular"] = include_modular;
    j["seed"] = seed;
    if (ring_override) j["ring"] = ring_to_json(*ring_override);
    return j;
}

std::vector<Ring> default_modular_rings() {
    return {
        Ring::modular_scaled(6, {1, 2, 3, 4, 5}),
        Ring::modular_scaled(4, {0, 2}),
        Ring::modular_scaled(8, {2, 4}),
        Ring::modular_scaled(12, {2, 3}),
        Ring::modular_coset(12, {0, 6}),
        Ring::modular_coset(8, {0, 4}),
        Ring::modular_coset(9, {0, 3, 6}),
        Ring::modular_coset(16, {0, 8}),
    };
}

namespace {

std::vector<Ring> grid_rings(const GridSpec& g) {
    if (g.ring_override) return {*g.ring_override};
    std::vector<Ring> out;
    for (const auto& k : g.multiplier_sets) out.push_back(Ring::integer_scaled(k));
    if (g.include_modular)
        for (Ring& r : default_modular_rings()) out.push_back(std::move(r));
    return out;
}

std::vector<Ring> grid_coset_rings(const GridSpec& g) {
    std::vector<Ring> out;
    for (const Ring& r : grid_rings(g)) {
        if (r.family() != Family::ModularCoset) continue;
        out.push_back(r);
    }
    if (g.ring_override && out.empty())
        throw std::invalid_argument(
            "law requires a strongly distributive (modular_coset) ring; got " +
            g.ring_override->render());
    return out;
}

std::vector<Ideal> grid_ideals(const Ring& r, const GridSpec& g) {
    if (!r.finite()) {
        std::vector<Ideal> out;
        for (i64 d = 0; d <= g.dmax; ++d) out.push_back(Ideal::principal_multiple(d));
        return out;
    }
    return all_ideals(r);
}

std::vector<Ideal> grid_proper_ideals(const Ring& r, const GridSpec& g) {
    std::vector<Ideal> out;
    for (Ideal& i : grid_ideals(r, g))
        if (!is_whole_ring(r, i)) out.push_back(std::move(i));
    return out;
}

std::vector<Hom> grid_homs(const Ring& r, const GridSpec& g) {
    std::vector<Hom> out = {Hom::identity(r)};
    if (!r.finite()) {
        for (i64 m : {4, 6, 8, 9, 10, 12, 15, 16})
            out.push_back(Hom::projection(r, Ideal::principal_multiple(m)));
        // one genuine composition: reduce mod 12, then collapse the subgroup
        // generated by 6 (overall Z -> Z_6)
        Hom inner = Hom::projection(r, Ideal::principal_multiple(12));
        Ideal mid = Ideal::explicit_set(inner.target(), ElementSet{0, 6});
        out.push_back(Hom::compose(Hom::projection(inner.target(), mid), inner));
        return out;
    }
    (void)g;
    for (const Ideal& j : all_ideals(r)) {
        if (static_cast<i64>(j.elements().size()) == r.modulus()) continue;  // whole ring
        out.push_back(Hom::projection(r, j));
    }
    return out;
}

bool hset_in(const Ring& r, const Ideal& i, const ElementSet& s) {
    for (i64 v : s)
        if (!ideal_contains(r, i, r.finite() ? detail::mod_reduce(v, r.modulus()) : v))
            return false;
    return true;
}

std::string inst(const Ring& r, const std::string& rest) { return r.render() + " " + rest; }

struct RunCtx {
    const GridSpec& grid;
    LawReport& rep;

    void instance() { ++rep.instances; }
    bool premise(bool ok) {
        if (ok) ++rep.premises_satisfied;
        return ok;
    }
    void violation(std::string instance_name, nlohmann::ordered_json witness) {
        rep.violations.push_back({std::move(instance_name), std::move(witness)});
    }
    void companion(std::string witness_name) {
        rep.companion_found = true;
        rep.companion_witnesses.push_back(std::move(witness_name));
    }
    std::mt19937_64 rng(const std::string& salt) const {
        return std::mt19937_64(grid.seed ^ std::hash<std::string>{}(rep.law + "|" + salt));
    }
};

// Deterministic sampler of carrier elements, biased toward ideal members so
// that containment premises actually fire.
i64 sample_element(std::mt19937_64& rng, const Ring& r, const Ideal& i, const GridSpec& g) {
    if (r.finite()) {
        if (rng() % 2 == 0) {
            const auto& mem = i.elements().values();
            return mem[rng() % mem.size()];
        }
        return static_cast<i64>(rng() % r.modulus());
    }
    const i64 window = 3 * g.dmax + 1;
    i64 raw = static_cast<i64>(rng() % (2 * window + 1)) - window;
    if (rng() % 2 == 0 && i.generator() > 0) {
        i64 span = std::max<i64>(1, window / i.generator());
        raw = i.generator() * (static_cast<i64>(rng() % (2 * span + 1)) - span);
    }
    return raw;
}

ElementSet sample_set(std::mt19937_64& rng, const Ring& r, const Ideal& i, const GridSpec& g,
                      std::size_t max_size) {
    ElementSet out;
    std::size_t count = 1 + rng() % max_size;
    for (std::size_t k = 0; k < count; ++k) out.insert(sample_element(rng, r, i, g));
    return out;
}

// --------------------------------------------------------------------------
// Individual laws

void law_absorb_pair(RunCtx& ctx, bool primary_form) {
    // prime I: aJ ⊆ I and a ∉ I force J ⊆ I; primary I forces J ⊆ √I.
    for (const Ring& r : grid_rings(ctx.grid)) {
        for (const Ideal& i : grid_proper_ideals(r, ctx.grid)) {
            Verdict v = primary_form ? is_primary(r, i) : is_prime(r, i);
            if (!v.holds()) continue;
            Ideal target = primary_form ? radical_ideal(r, i) : i;
            auto rng = ctx.rng(inst(r, render(i)));
            for (int s = 0; s < 60; ++s) {
                ctx.instance();
                i64 a = sample_element(rng, r, i, ctx.grid);
                ElementSet j = sample_set(rng, r, i, ctx.grid, 4);
                bool prem = !ideal_contains(r, i, r.finite() ? detail::mod_reduce(a, r.modulus()) : a);
                for (i64 x : j) {
                    if (!prem) break;
                    prem = hset_in(r, i, hmul(r, a, x));
                }
                if (!ctx.premise(prem)) continue;
                bool concl = true;
                for (i64 x : j)
                    if (!ideal_contains(r, target, x)) {
                        concl = false;
                        break;
                    }
                if (!concl)
                    ctx.violation(inst(r, "I=" + render(i)),
                                  {{"a", a}, {"J", j.values()}});
            }
        }
    }
}

void law_L2_1(RunCtx& ctx) { law_absorb_pair(ctx, false); }
void law_L2_2(RunCtx& ctx) { law_absorb_pair(ctx, true); }

void law_P2_3(RunCtx& ctx) {
    // prime I: AB ⊆ I forces A ⊆ I or B ⊆ I.
    for (const Ring& r : grid_rings(ctx.grid)) {
        for (const Ideal& i : grid_proper_ideals(r, ctx.grid)) {
            if (!is_prime(r, i).holds()) continue;
            auto rng = ctx.rng(inst(r, render(i)));
            for (int s = 0; s < 60; ++s) {
                ctx.instance();
                ElementSet a = sample_set(rng, r, i, ctx.grid, 3);
                ElementSet b = sample_set(rng, r, i, ctx.grid, 3);
                if (!ctx.premise(hset_in(r, i, hset_product(r, a, b)))) continue;
                auto inside = [&](const ElementSet& s) {
                    for (i64 x : s)
                        if (!ideal_contains(r, i, x)) return false;
                    return true;
                };
                if (!inside(a) && !inside(b))
                    ctx.violation(inst(r, "I=" + render(i)),
                                  {{"A", a.values()}, {"B", b.values()}});
            }
        }
    }
}

void law_P2_5(RunCtx& ctx) {
    // a prime hyperideal is its own unique minimal prime
    for (const Ring& r : grid_rings(ctx.grid)) {
        for (const Ideal& i : grid_proper_ideals(r, ctx.grid)) {
            ctx.instance();
            if (!ctx.premise(is_prime(r, i).holds())) continue;
            auto mp = minimal_primes(r, i);
            if (mp.size() != 1 || !(mp[0] == i)) {
                nlohmann::ordered_json got = nlohmann::ordered_json::array();
                for (const Ideal& p : mp) got.push_back(render(p));
                ctx.violation(inst(r, "P=" + render(i)), {{"minimal_primes", got}});
            }
        }
    }
}

void law_P2_7(RunCtx& ctx) {
    // radical of products and intersections; Rad(I) ⊆ Rad(Rad(I))
    for (const Ring& r : grid_rings(ctx.grid)) {
        std::vector<Ideal> ideals = grid_ideals(r, ctx.grid);
        for (const Ideal& i : ideals) {
            ctx.instance();
            ctx.premise(true);
            Ideal rad = radical_ideal(r, i);
            if (!ideal_subset(r, rad, radical_ideal(r, rad)))
                ctx.violation(inst(r, "I=" + render(i)), {{"part", "rad_of_rad"}});
        }
        // tuple part: all pairs plus a pruned triple set
        std::vector<std::vector<const Ideal*>> tuples;
        for (const Ideal& a : ideals)
            for (const Ideal& b : ideals) tuples.push_back({&a, &b});
        std::vector<const Ideal*> coarse;
        for (const Ideal& a : ideals)
            if (!r.finite() ? (a.generator() % 6 == 0 || a.generator() < 12) : true)
                coarse.push_back(&a);
        for (std::size_t x = 0; x < coarse.size(); ++x)
            for (std::size_t y = x; y < coarse.size(); ++y)
                for (std::size_t z = y; z < coarse.size(); ++z)
                    tuples.push_back({coarse[x], coarse[y], coarse[z]});
        for (const auto& tup : tuples) {
            ctx.instance();
            ctx.premise(true);
            Ideal prod = *tup[0];
            Ideal inter = *tup[0];
            Ideal radmeet = radical_ideal(r, *tup[0]);
            for (std::size_t k = 1; k < tup.size(); ++k) {
                prod = ideal_product(r, prod, *tup[k]);
                inter = ideal_intersect(r, inter, *tup[k]);
                radmeet = ideal_intersect(r, radmeet, radical_ideal(r, *tup[k]));
            }
            Ideal lhs = radical_ideal(r, prod);
            Ideal mid = radical_ideal(r, inter);
            if (!(lhs == mid) || !(mid == radmeet)) {
                std::string text;
                for (const Ideal* t : tup) text += (text.empty() ? "" : ",") + render(*t);
                ctx.violation(inst(r, "tuple=(" + text + ")"),
                              {{"rad_product", render(lhs)},
                               {"rad_intersection", render(mid)},
                               {"intersection_of_radicals", render(radmeet)}});
            }
        }
    }
}

void law_P2_8(RunCtx& ctx) {
    // f(√I) ⊆ √(f(I)) for onto good homomorphisms
    for (const Ring& r : grid_rings(ctx.grid)) {
        for (const Hom& f : grid_homs(r, ctx.grid)) {
            for (const Ideal& i : grid_ideals(r, ctx.grid)) {
                ctx.instance();
                ctx.premise(true);
                Ideal lhs = image_ideal(f, radical_ideal(r, i));
                Ideal rhs = radical_ideal(f.target(), image_ideal(f, i));
                if (!ideal_subset(f.target(), lhs, rhs))
                    ctx.violation(inst(r, "I=" + render(i) + " f=" + f.render()),
                                  {{"image_of_radical", render(lhs)},
                                   {"radical_of_image", render(rhs)}});
            }
        }
    }
}

void law_P2_9(RunCtx& ctx) {
    // √(f⁻¹(J)) = f⁻¹(√J)
    for (const Ring& r : grid_rings(ctx.grid)) {
        for (const Hom& f : grid_homs(r, ctx.grid)) {
            for (const Ideal& j : grid_ideals(f.target(), ctx.grid)) {
                ctx.instance();
                ctx.premise(true);
                Ideal lhs = radical_ideal(r, preimage_ideal(f, j));
                Ideal rhs = preimage_ideal(f, radical_ideal(f.target(), j));
                if (!(lhs == rhs))
                    ctx.violation(inst(r, "J=" + render(j) + " f=" + f.render()),
                                  {{"radical_of_preimage", render(lhs)},
                                   {"preimage_of_radical", render(rhs)}});
            }
        }
    }
}

void law_hom_image_preimage(RunCtx& ctx, const std::string& key) {
    // part 1: the image of a proper C_u ideal with the matching class and
    //         Kerf ⊆ I keeps the class; part 2: preimages always keep it.
    for (const Ring& r : grid_rings(ctx.grid)) {
        std::vector<Hom> homs = grid_homs(r, ctx.grid);
        for (const Ideal& i : grid_proper_ideals(r, ctx.grid)) {
            bool base = run_predicate(key, r, i).holds() && is_cu_ideal(r, i).holds();
            for (const Hom& f : homs) {
                ctx.instance();
                if (!ctx.premise(base && ideal_subset(r, kernel(f), i))) continue;
                Ideal img = image_ideal(f, i);
                Verdict v = run_predicate(key, f.target(), img);
                if (!v.holds())
                    ctx.violation(inst(r, "I=" + render(i) + " f=" + f.render()),
                                  {{"part", "image"},
                                   {"image", render(img)},
                                   {"witness", witness_to_json(v.witness)}});
            }
        }
        for (const Hom& f : homs) {
            for (const Ideal& j : grid_proper_ideals(f.target(), ctx.grid)) {
                ctx.instance();
                if (!ctx.premise(run_predicate(key, f.target(), j).holds())) continue;
                Ideal pre = preimage_ideal(f, j);
                Verdict v = run_predicate(key, r, pre);
                if (!v.holds())
                    ctx.violation(inst(r, "J=" + render(j) + " f=" + f.render()),
                                  {{"part", "preimage"},
                                   {"preimage", render(pre)},
                                   {"witness", witness_to_json(v.witness)}});
            }
        }
    }
}

void law_T2_13(RunCtx& ctx) { law_hom_image_preimage(ctx, "prime"); }
void law_T2_14(RunCtx& ctx) { law_hom_image_preimage(ctx, "primary"); }

void law_T3_5(RunCtx& ctx) {
    // √I prime forces I 2-absorbing primary; companion: 2AP ideals whose
    // radical fails primality
    for (const Ring& r : grid_rings(ctx.grid)) {
        int found = 0;
        for (const Ideal& i : grid_proper_ideals(r, ctx.grid)) {
            ctx.instance();
            Ideal rad = radical_ideal(r, i);
            Verdict rad_prime = is_prime(r, rad);
            if (ctx.premise(rad_prime.holds())) {
                Verdict v = is_two_absorbing_primary(r, i);
                if (!v.holds())
                    ctx.violation(inst(r, "I=" + render(i)),
                                  {{"witness", witness_to_json(v.witness)}});
            } else if (rad_prime.fails() && found < 3 &&
                       is_two_absorbing_primary(r, i).holds()) {
                ++found;
                ctx.companion(inst(r, "I=" + render(i) + " radical=" + render(rad)));
            }
        }
        if (!ctx.rep.companion_found) ctx.rep.companion_found = false;
    }
}

void law_T3_8(RunCtx& ctx) {
    // equal-radical 2AP ideals: the intersection is 2AP with the same
    // radical; companion: unequal radicals where the intersection fails
    for (const Ring& r : grid_rings(ctx.grid)) {
        std::vector<Ideal> ideals = grid_proper_ideals(r, ctx.grid);
        std::map<Ideal, bool> ap;
        std::map<Ideal, Ideal> rad;
        for (const Ideal& i : ideals) {
            ap.emplace(i, is_two_absorbing_primary(r, i).holds());
            rad.emplace(i, radical_ideal(r, i));
        }
        auto within_cap = [&](const Ideal& inter) {
            return !inter.principal() || inter.generator() <= ctx.grid.modulus_cap;
        };
        std::map<i64, bool> inter_ap;  // by principal generator
        auto inter_is_2ap = [&](const Ideal& inter) {
            if (!inter.principal()) return is_two_absorbing_primary(r, inter).holds();
            auto it = inter_ap.find(inter.generator());
            if (it == inter_ap.end())
                it = inter_ap.emplace(inter.generator(),
                                      is_two_absorbing_primary(r, inter).holds()).first;
            return it->second;
        };
        for (std::size_t x = 0; x < ideals.size(); ++x)
            for (std::size_t y = x; y < ideals.size(); ++y) {
                Ideal inter = ideal_intersect(r, ideals[x], ideals[y]);
                if (!within_cap(inter)) continue;
                ctx.instance();
                if (!ctx.premise(ap.at(ideals[x]) && ap.at(ideals[y]) &&
                                 rad.at(ideals[x]) == rad.at(ideals[y])))
                    continue;
                bool ok = inter_is_2ap(inter) &&
                          radical_ideal(r, inter) == rad.at(ideals[x]);
                if (!ok)
                    ctx.violation(
                        inst(r, "I1=" + render(ideals[x]) + " I2=" + render(ideals[y])),
                        {{"intersection", render(inter)}});
            }
        // companion search, cheapest intersections first
        std::vector<std::pair<i64, std::pair<std::size_t, std::size_t>>> pairs;
        for (std::size_t x = 0; x < ideals.size(); ++x)
            for (std::size_t y = x + 1; y < ideals.size(); ++y) {
                if (!ap.at(ideals[x]) || !ap.at(ideals[y])) continue;
                if (rad.at(ideals[x]) == rad.at(ideals[y])) continue;
                Ideal inter = ideal_intersect(r, ideals[x], ideals[y]);
                if (!within_cap(inter)) continue;
                i64 cost = inter.principal() ? inter.generator()
                                             : static_cast<i64>(inter.elements().size());
                pairs.push_back({cost, {x, y}});
            }
        std::sort(pairs.begin(), pairs.end());
        int found = 0;
        for (const auto& [cost, xy] : pairs) {
            if (found >= 3) break;
            const Ideal& a = ideals[xy.first];
            const Ideal& b = ideals[xy.second];
            Ideal inter = ideal_intersect(r, a, b);
            if (!inter_is_2ap(inter)) {
                ++found;
                ctx.companion(inst(r, "I1=" + render(a) + " I2=" + render(b) +
                                          " intersection=" + render(inter)));
            }
        }
        if (!ctx.rep.companion_found) ctx.rep.companion_found = false;
    }
}

void law_L3_10(RunCtx& ctx) {
    // intersections of two primes are 2-absorbing; companion: 2-absorbing
    // ideals that are not prime
    for (const Ring& r : grid_rings(ctx.grid)) {
        std::vector<Ideal> primes;
        for (const Ideal& i : grid_proper_ideals(r, ctx.grid))
            if (is_prime(r, i).holds()) primes.push_back(i);
        for (std::size_t x = 0; x < primes.size(); ++x)
            for (std::size_t y = x; y < primes.size(); ++y) {
                Ideal inter = ideal_intersect(r, primes[x], primes[y]);
                if (inter.principal() && inter.generator() > ctx.grid.modulus_cap) continue;
                ctx.instance();
                ctx.premise(true);
                Verdict v = is_two_absorbing(r, inter);
                if (!v.holds())
                    ctx.violation(
                        inst(r, "P1=" + render(primes[x]) + " P2=" + render(primes[y])),
                        {{"intersection", render(inter)},
                         {"witness", witness_to_json(v.witness)}});
            }
        int found = 0;
        for (const Ideal& i : grid_proper_ideals(r, ctx.grid)) {
            if (found >= 3) break;
            if (is_two_absorbing(r, i).holds() && is_prime(r, i).fails()) {
                ++found;
                ctx.companion(inst(r, "I=" + render(i)));
            }
        }
        if (!ctx.rep.companion_found) ctx.rep.companion_found = false;
    }
}

void law_T3_12(RunCtx& ctx) {
    // two primary C-ideals: intersection and product are 2AP; companion:
    // triples of primary C-ideals whose triple intersection fails
    for (const Ring& r : grid_rings(ctx.grid)) {
        std::vector<Ideal> pc;
        for (const Ideal& i : grid_proper_ideals(r, ctx.grid))
            if (is_primary(r, i).holds() && is_c_ideal(r, i).holds()) pc.push_back(i);
        auto capped = [&](const Ideal& i) {
            return !i.principal() || i.generator() <= ctx.grid.modulus_cap;
        };
        for (std::size_t x = 0; x < pc.size(); ++x)
            for (std::size_t y = x; y < pc.size(); ++y) {
                Ideal inter = ideal_intersect(r, pc[x], pc[y]);
                Ideal prod = ideal_product(r, pc[x], pc[y]);
                if (!capped(inter) || !capped(prod)) continue;
                ctx.instance();
                ctx.premise(true);
                Verdict vi = is_two_absorbing_primary(r, inter);
                Verdict vp = is_two_absorbing_primary(r, prod);
                if (!vi.holds() || !vp.holds())
                    ctx.violation(inst(r, "I=" + render(pc[x]) + " J=" + render(pc[y])),
                                  {{"intersection", render(inter)},
                                   {"intersection_2ap", vi.holds()},
                                   {"product", render(prod)},
                                   {"product_2ap", vp.holds()}});
            }
        int found = 0;
        for (std::size_t x = 0; x < pc.size() && found < 3; ++x)
            for (std::size_t y = x + 1; y < pc.size() && found < 3; ++y)
                for (std::size_t z = y + 1; z < pc.size() && found < 3; ++z) {
                    Ideal inter =
                        ideal_intersect(r, ideal_intersect(r, pc[x], pc[y]), pc[z]);
                    if (!capped(inter)) continue;
                    if (!is_two_absorbing_primary(r, inter).holds()) {
                        ++found;
                        ctx.companion(inst(r, "I1=" + render(pc[x]) + " I2=" + render(pc[y]) +
                                                  " I3=" + render(pc[z]) +
                                                  " intersection=" + render(inter)));
                    }
                }
        if (!ctx.rep.companion_found) ctx.rep.companion_found = false;
    }
}

void law_T3_14(RunCtx& ctx) {
    // preimages of 2AP ideals are 2AP
    for (const Ring& r : grid_rings(ctx.grid)) {
        for (const Hom& f : grid_homs(r, ctx.grid)) {
            for (const Ideal& j : grid_proper_ideals(f.target(), ctx.grid)) {
                ctx.instance();
                if (!ctx.premise(is_two_absorbing_primary(f.target(), j).holds())) continue;
                Ideal pre = preimage_ideal(f, j);
                Verdict v = is_two_absorbing_primary(r, pre);
                if (!v.holds())
                    ctx.violation(inst(r, "J=" + render(j) + " f=" + f.render()),
                                  {{"preimage", render(pre)},
                                   {"witness", witness_to_json(v.witness)}});
            }
        }
    }
}

void law_T3_15(RunCtx& ctx) {
    // images of 2AP C_u-ideals containing the kernel are 2AP
    for (const Ring& r : grid_rings(ctx.grid)) {
        std::vector<Hom> homs = grid_homs(r, ctx.grid);
        for (const Ideal& i : grid_proper_ideals(r, ctx.grid)) {
            bool base = is_cu_ideal(r, i).holds() &&
                        is_two_absorbing_primary(r, i).holds();
            for (const Hom& f : homs) {
                ctx.instance();
                if (!ctx.premise(base && ideal_subset(r, kernel(f), i))) continue;
                Ideal img = image_ideal(f, i);
                Verdict v = is_two_absorbing_primary(f.target(), img);
                if (!v.holds())
                    ctx.violation(inst(r, "I=" + render(i) + " f=" + f.render()),
                                  {{"image", render(img)},
                                   {"witness", witness_to_json(v.witness)}});
            }
        }
    }
}

void law_C3_16(RunCtx& ctx) {
    // I/J is 2AP in R/J for a 2AP C_u-ideal I containing J; the projection
    // kernel is re-derived and must equal J
    for (const Ring& r : grid_rings(ctx.grid)) {
        for (const Ideal& i : grid_proper_ideals(r, ctx.grid)) {
            bool base = is_cu_ideal(r, i).holds() &&
                        is_two_absorbing_primary(r, i).holds();
            for (const Ideal& j : grid_ideals(r, ctx.grid)) {
                if (r.finite()) {
                    if (static_cast<i64>(j.elements().size()) == r.modulus()) continue;
                } else if (j.generator() < 2 || j.generator() > 16) {
                    continue;  // keep quotient carriers small
                }
                ctx.instance();
                if (!ctx.premise(base && ideal_subset(r, j, i))) continue;
                Hom f = Hom::projection(r, j);
                if (!(kernel(f) == j)) {
                    ctx.violation(inst(r, "I=" + render(i) + " J=" + render(j)),
                                  {{"kernel", render(kernel(f))}});
                    continue;
                }
                Ideal img = image_ideal(f, i);
                Verdict v = is_two_absorbing_primary(f.target(), img);
                if (!v.holds())
                    ctx.violation(inst(r, "I=" + render(i) + " J=" + render(j)),
                                  {{"I_mod_J", render(img)},
                                   {"witness", witness_to_json(v.witness)}});
            }
        }
    }
}

void law_L3_17(RunCtx& ctx) {
    // strongly distributive rings: abJ ⊆ I with ab ⊄ I forces aJ or bJ
    // inside √I
    for (const Ring& r : grid_coset_rings(ctx.grid)) {
        std::vector<Ideal> lattice = all_ideals(r);
        const i64 n = r.modulus();
        for (const Ideal& i : lattice) {
            if (static_cast<i64>(i.elements().size()) == n) continue;
            if (!is_two_absorbing_primary(r, i).holds()) continue;
            Ideal rad = radical_ideal(r, i);
            for (const Ideal& j : lattice) {
                const ElementSet& js = j.elements();
                for (i64 a = 0; a < n; ++a)
                    for (i64 b = 0; b < n; ++b) {
                        ctx.instance();
                        ElementSet ab = hmul(r, a, b);
                        bool prem = !hset_in(r, i, ab) &&
                                    hset_in(r, i, hset_product(r, ab, js));
                        if (!ctx.premise(prem)) continue;
                        ElementSet aj = hset_product(r, ElementSet::single(a), js);
                        ElementSet bj = hset_product(r, ElementSet::single(b), js);
                        if (!hset_in(r, rad, aj) && !hset_in(r, rad, bj))
                            ctx.violation(inst(r, "I=" + render(i) + " J=" + render(j)),
                                          {{"a", a}, {"b", b}});
                    }
            }
        }
    }
}

void law_T3_18(RunCtx& ctx) {
    // strongly distributive rings: elementwise 2AP coincides with the
    // ideal-triple condition over the full hyperideal lattice, both ways
    for (const Ring& r : grid_coset_rings(ctx.grid)) {
        if (!check_axioms(r).strongly_distributive)
            throw std::invalid_argument("T3.18: ring is not strongly distributive: " +
                                        r.render());
        std::vector<Ideal> lattice = all_ideals(r);
        const std::size_t L = lattice.size();
        std::vector<std::vector<Ideal>> pair_product(L, std::vector<Ideal>());
        for (std::size_t x = 0; x < L; ++x)
            for (std::size_t y = 0; y < L; ++y)
                pair_product[x].push_back(ideal_product(r, lattice[x], lattice[y]));
        for (const Ideal& i : lattice) {
            if (static_cast<i64>(i.elements().size()) == r.modulus()) continue;
            ctx.instance();
            ctx.premise(true);
            bool element_level = is_two_absorbing_primary(r, i).holds();
            Ideal rad = radical_ideal(r, i);
            bool ideal_level = true;
            std::array<std::size_t, 3> bad{};
            for (std::size_t x = 0; x < L && ideal_level; ++x)
                for (std::size_t y = 0; y < L && ideal_level; ++y)
                    for (std::size_t z = 0; z < L && ideal_level; ++z) {
                        Ideal triple = ideal_product(r, pair_product[x][y], lattice[z]);
                        if (!ideal_subset(r, triple, i)) continue;
                        if (ideal_subset(r, pair_product[x][y], i)) continue;
                        if (ideal_subset(r, pair_product[y][z], rad)) continue;
                        if (ideal_subset(r, pair_product[x][z], rad)) continue;
                        ideal_level = false;
                        bad = {x, y, z};
                    }
            if (element_level != ideal_level)
                ctx.violation(inst(r, "I=" + render(i)),
                              {{"element_level", element_level},
                               {"ideal_level", ideal_level},
                               {"ideal_triple",
                                ideal_level
                                    ? nlohmann::ordered_json()
                                    : nlohmann::ordered_json::array({render(lattice[bad[0]]),
                                                                     render(lattice[bad[1]]),
                                                                     render(lattice[bad[2]])})}});
        }
    }
}

struct LawEntry {
    LawInfo info;
    void (*run)(RunCtx&);
};

const std::vector<LawEntry>& law_table() {
    static const std::vector<LawEntry> table = {
        {{"L2.1", "aJ inside a prime ideal with a outside forces J inside", false, false, ""},
         law_L2_1},
        {{"L2.2", "aJ inside a primary ideal with a outside forces J inside the radical",
          false, false, ""},
         law_L2_2},
        {{"P2.3", "AB inside a prime ideal forces A or B inside", false, false, ""}, law_P2_3},
        {{"P2.5", "a prime ideal is its own unique minimal prime", false, false, ""}, law_P2_5},
        {{"P2.7", "radicals of products, intersections, and iterated radicals", false, false,
          ""},
         law_P2_7},
        {{"P2.8", "image of the radical lies in the radical of the image", false, false, ""},
         law_P2_8},
        {{"P2.9", "radical of a preimage equals the preimage of the radical", false, false, ""},
         law_P2_9},
        {{"T2.13", "prime C_u-ideals push forward; primes pull back", false, false, ""},
         law_T2_13},
        {{"T2.14", "primary C_u-ideals push forward; primaries pull back", false, false, ""},
         law_T2_14},
        {{"T3.5", "prime radical forces 2-absorbing primary", false, true,
          "2AP ideals whose radical is not prime"},
         law_T3_5},
        {{"T3.8", "equal-radical 2AP intersections stay 2AP", false, true,
          "unequal radicals where the intersection fails 2AP"},
         law_T3_8},
        {{"L3.10", "intersections of two primes are 2-absorbing", false, true,
          "2-absorbing ideals that are not prime"},
         law_L3_10},
        {{"T3.12", "intersections and products of two primary C-ideals are 2AP", false, true,
          "three primary C-ideals whose intersection fails 2AP"},
         law_T3_12},
        {{"T3.14", "preimages of 2AP ideals are 2AP", false, false, ""}, law_T3_14},
        {{"T3.15", "images of 2AP C_u-ideals above the kernel are 2AP", false, false, ""},
         law_T3_15},
        {{"C3.16", "I/J is 2AP for 2AP C_u-ideals I containing J", false, false, ""},
         law_C3_16},
        {{"L3.17", "abJ inside I with ab outside forces aJ or bJ into the radical", true,
          false, ""},
         law_L3_17},
        {{"T3.18", "elementwise 2AP equals the ideal-triple condition", true, false, ""},
         law_T3_18},
    };
    return table;
}

}  // namespace

const std::vector<LawInfo>& law_registry() {
    static const std::vector<LawInfo> infos = [] {
        std::vector<LawInfo> out;
        for (const LawEntry& e : law_table()) out.push_back(e.info);
        return out;
    }();
    return infos;
}

const LawInfo* find_law(const std::string& id) {
    for (const LawInfo& info : law_registry())
        if (info.id == id) return &info;
    return nullptr;
}

LawReport run_law(const std::string& id, const GridSpec& grid) {
    for (const LawEntry& e : law_table()) {
        if (e.info.id != id) continue;
        if (grid.ring_override && e.info.strongly_distributive_only &&
            grid.ring_override->family() != Family::ModularCoset)
            throw std::invalid_argument("law " + id +
                                        " requires a strongly distributive ring");
        LawReport rep;
        rep.law = id;
        rep.grid = grid.to_json();
        RunCtx ctx{grid, rep};
        auto start = std::chrono::steady_clock::now();
        e.run(ctx);
        rep.wall_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
        return rep;
    }
    throw std::invalid_argument("unknown law id \"" + id + "\"");
}

std::vector<LawReport> run_all_laws(const GridSpec& grid) {
    std::vector<LawReport> out;
    for (const LawInfo& info : law_registry()) out.push_back(run_law(info.id, grid));
    return out;
}

nlohmann::ordered_json law_report_to_json(const LawReport& rep) {
    nlohmann::ordered_json j;
    j["law"] = rep.law;
    j["grid"] = rep.grid;
    j["instances"] = rep.instances;
    j["premises_satisfied"] = rep.premises_satisfied;
    nlohmann::ordered_json vs = nlohmann::ordered_json::array();
    for (const Violation& v : rep.violations)
        vs.push_back({{"instance", v.instance}, {"witness", v.witness}});
    j["violations"] = vs;
    if (rep.companion_found.has_value()) {
        j["companion_found"] = *rep.companion_found;
        j["companion_witnesses"] = rep.companion_witnesses;
    } else {
        j["companion_found"] = nullptr;
    }
    return j;
}

std::string law_report_render(const LawReport& rep) {
    std::string s = "law " + rep.law + ": instances=" + std::to_string(rep.instances) +
                    " premises=" + std::to_string(rep.premises_satisfied) +
                    " violations=" + std::to_string(rep.violations.size());
    if (rep.companion_found.has_value())
        s += std::string(" companion=") + (*rep.companion_found ? "found" : "MISSING");
    for (const Violation& v : rep.violations)
        s += "\n  VIOLATION " + v.instance + " " + v.witness.dump();
    for (const std::string& w : rep.companion_witnesses) s += "\n  companion: " + w;
    return s;
}

std::vector<SeparatingExample> find_separating(const std::string& holds_key,
                                               const std::string& fails_key,
                                               const GridSpec& grid) {
    if (!known_predicate(holds_key) || !known_predicate(fails_key))
        throw std::invalid_argument("unknown predicate pair (" + holds_key + ", " + fails_key +
                                    ")");
    std::vector<SeparatingExample> out;
    bool any_instance = false;
    for (const Ring& r : grid_rings(grid)) {
        for (const Ideal& i : grid_ideals(r, grid)) {
            any_instance = true;
            Verdict pass = run_predicate(holds_key, r, i);
            if (!pass.holds()) continue;
            Verdict fail = run_predicate(fails_key, r, i);
            if (fail.fails()) out.push_back({r, i, fail});
        }
    }
    if (!any_instance) throw std::invalid_argument("empty grid");
    return out;
}

nlohmann::ordered_json separating_to_json(const std::string& holds_key,
                                          const std::string& fails_key, const GridSpec& grid,
                                          const std::vector<SeparatingExample>& found) {
    nlohmann::ordered_json j;
    j["holds"] = holds_key;
    j["fails"] = fails_key;
    j["grid"] = grid.to_json();
    nlohmann::ordered_json matches = nlohmann::ordered_json::array();
    for (const SeparatingExample& s : found)
        matches.push_back({{"ring", ring_to_json(s.ring)},
                           {"ideal", render(s.ideal)},
                           {"witness", witness_to_json(s.failing.witness)}});
    j["matches"] = matches;
    return j;
}

// --------------------------------------------------------------------------
// Published example claims, re-derived instead of trusted

const std::vector<ExampleClaim>& example_claims() {
    static const std::vector<ExampleClaim> claims = [] {
        Ring k23 = Ring::integer_scaled({2, 3});
        Ring k24 = Ring::integer_scaled({2, 4});
        Ring z6 = Ring::modular_scaled(6, {1, 2, 3, 4, 5});
        auto dz = [](i64 d) { return Ideal::principal_multiple(d); };
        Ideal z6zero = Ideal::explicit_set(z6, ElementSet{0});
        Ideal z6even = Ideal::explicit_set(z6, ElementSet{0, 2, 4});
        return std::vector<ExampleClaim>{
            {"E2.6", k23, dz(12), "prime", "false"},
            {"E2.6", k23, dz(12), "minimal_primes", "2Z,3Z"},
            {"E2.6", k23, dz(2), "prime", "true"},
            {"E2.6", k23, dz(3), "prime", "true"},
            {"E2.11", k24, dz(2), "cu", "true"},
            {"E2.12", k23, dz(5), "c", "true"},
            {"E2.12", k23, dz(5), "cu", "false"},
            {"E3.3.1", k23, dz(12), "2ap", "true"},
            {"E3.3.1", k23, dz(12), "2a", "false"},
            {"E3.3.2", k24, dz(120), "2ap", "true"},
            {"E3.3.2", k24, dz(120), "2a", "false"},
            {"E3.3.2", k24, dz(15), "2a", "true"},
            {"E3.3.3", z6, z6zero, "2a", "true"},
            {"E3.4.1", k23, dz(12), "primary", "false"},
            {"E3.4.2", z6, z6zero, "primary", "false"},
            {"E3.4.2", z6, z6zero, "prime", "false"},
            {"E3.6", k24, dz(120), "radical", "15Z"},
            {"E3.6", k24, dz(15), "prime", "false"},
            {"E3.9", k23, dz(12), "radical", "6Z"},
            {"E3.9", k23, dz(20), "radical", "10Z"},
            {"E3.9", k23, dz(30), "2ap", "false"},
            {"E3.11", z6, z6even, "prime", "true"},
            {"E3.11", z6, z6zero, "2a", "true"},
            {"E3.13", k24, dz(3), "prime", "true"},
            {"E3.13", k24, dz(3), "c", "true"},
            {"E3.13", k24, dz(5), "prime", "true"},
            {"E3.13", k24, dz(5), "c", "true"},
            {"E3.13", k24, dz(7), "prime", "true"},
            {"E3.13", k24, dz(7), "c", "true"},
            {"E3.13", k24, dz(105), "2ap", "false"},
        };
    }();
    return claims;
}

ClaimCheck check_claim(const ExampleClaim& c) {
    ClaimCheck out{c, "", false, Verdict::ok()};
    if (c.kind == "radical") {
        out.computed = render(radical_ideal(c.ring, c.ideal));
    } else if (c.kind == "minimal_primes") {
        std::string s;
        for (const Ideal& p : minimal_primes(c.ring, c.ideal))
            s += (s.empty() ? "" : ",") + render(p);
        out.computed = s;
    } else {
        out.verdict = run_predicate(c.kind, c.ring, c.ideal);
        out.computed = status_name(out.verdict.status);
    }
    out.matches = out.computed == c.expected;
    return out;
}

std::vector<ClaimCheck> check_claims_for(const Ring& r, const Ideal& i) {
    std::vector<ClaimCheck> out;
    for (const ExampleClaim& c : example_claims())
        if (c.ring == r && c.ideal == i) out.push_back(check_claim(c));
    return out;
}

}  // namespace hyperlab
