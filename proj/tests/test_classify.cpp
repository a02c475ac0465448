#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hyperlab/classify.hpp"

using namespace hyperlab;

namespace {

Ring k23() { return Ring::integer_scaled({2, 3}); }
Ring k24() { return Ring::integer_scaled({2, 4}); }
Ring z6_full() { return Ring::modular_scaled(6, {1, 2, 3, 4, 5}); }

Ideal dz(i64 d) { return Ideal::principal_multiple(d); }
Ideal z6zero() { return Ideal::explicit_set(z6_full(), ElementSet{0}); }

}  // namespace

TEST_CASE("prime verdicts") {
    CHECK(is_prime(k23(), dz(2)).holds());
    CHECK(is_prime(k23(), dz(3)).holds());
    CHECK(is_prime(k23(), dz(12)).fails());
    CHECK(is_prime(k23(), dz(0)).holds());
    CHECK(is_prime(k23(), dz(1)).not_proper());

    Verdict v = is_prime(k24(), dz(15));
    REQUIRE(v.fails());
    auto w = std::get<PairWitness>(v.witness);
    CHECK(w.x == 3);
    CHECK(w.y == 5);
    CHECK(w.product == ElementSet{30, 60});
    CHECK(witness_confirms(k24(), dz(15), "prime", v.witness));

    // 1∘1 = {2,4} lands in 2Z with 1 outside, so 2Z is not prime here
    CHECK(is_prime(k24(), dz(2)).fails());

    CHECK(is_prime(z6_full(), z6zero()).fails());
    CHECK(is_prime(z6_full(), Ideal::explicit_set(z6_full(), ElementSet{0, 2, 4})).holds());
}

TEST_CASE("primary verdicts") {
    Verdict v12 = is_primary(k23(), dz(12));
    REQUIRE(v12.fails());
    CHECK(witness_confirms(k23(), dz(12), "primary", v12.witness));
    // the documented pair (4,3) also violates: 4∘3 ⊆ 12Z, 4 ∉ 12Z, 3 ∉ 6Z
    CHECK(witness_confirms(k23(), dz(12), "primary",
                           PairWitness{4, 3, hmul(k23(), 4, 3)}));

    Verdict vz6 = is_primary(z6_full(), z6zero());
    REQUIRE(vz6.fails());
    CHECK(witness_confirms(z6_full(), z6zero(), "primary", vz6.witness));
    CHECK(witness_confirms(z6_full(), z6zero(), "primary",
                           PairWitness{3, 2, hmul(z6_full(), 3, 2)}));

    CHECK(is_primary(k24(), dz(3)).holds());
    // radical of 2Z and 4Z is the whole ring, so the second condition is free
    CHECK(is_primary(k24(), dz(2)).holds());
    CHECK(is_primary(k24(), dz(4)).holds());
    CHECK(is_primary(k23(), dz(0)).holds());
}

TEST_CASE("2-absorbing verdicts") {
    CHECK(is_two_absorbing(k24(), dz(15)).holds());
    CHECK(is_two_absorbing(z6_full(), z6zero()).holds());
    Verdict v = is_two_absorbing(k23(), dz(12));
    REQUIRE(v.fails());
    CHECK(witness_confirms(k23(), dz(12), "2a", v.witness));
    CHECK(is_two_absorbing(k23(), dz(0)).holds());
    CHECK(is_two_absorbing(k23(), dz(1)).not_proper());
}

TEST_CASE("2-absorbing primary verdicts") {
    CHECK(is_two_absorbing_primary(k23(), dz(12)).holds());

    Verdict v30 = is_two_absorbing_primary(k23(), dz(30));
    REQUIRE(v30.fails());
    auto w30 = std::get<TripleWitness>(v30.witness);
    CHECK(w30.a == 2);
    CHECK(w30.b == 3);
    CHECK(w30.c == 5);
    CHECK(w30.ab == ElementSet{12, 18});
    CHECK(w30.bc == ElementSet{30, 45});
    CHECK(w30.ac == ElementSet{20, 30});
    CHECK(witness_confirms(k23(), dz(30), "2ap", v30.witness));

    Verdict v105 = is_two_absorbing_primary(k24(), dz(105));
    REQUIRE(v105.fails());
    auto w105 = std::get<TripleWitness>(v105.witness);
    CHECK(w105.a == 3);
    CHECK(w105.b == 5);
    CHECK(w105.c == 7);
    CHECK(witness_confirms(k24(), dz(105), "2ap", v105.witness));
}

TEST_CASE("the definition-faithful verdict for 120Z with K={2,4}") {
    Verdict v = is_two_absorbing_primary(k24(), dz(120));
    REQUIRE(v.fails());
    CHECK(witness_confirms(k24(), dz(120), "2ap", v.witness));

    // the desk-checked triple (6,5,1) violates as well: 6∘5∘1 ⊆ 120Z while
    // 6∘5 = {60,120} escapes 120Z and 5∘1, 6∘1 escape the radical 15Z
    CHECK(radical_ideal(k24(), dz(120)) == dz(15));
    TripleWitness doc{6, 5, 1,
                      hset_product(k24(), hmul(k24(), 6, 5), ElementSet{1}),
                      hmul(k24(), 6, 5), hmul(k24(), 5, 1), hmul(k24(), 6, 1)};
    CHECK(doc.abc == ElementSet{120, 240, 480});
    CHECK(witness_confirms(k24(), dz(120), "2ap", doc));

    // and 120Z is not 2-absorbing either
    CHECK(is_two_absorbing(k24(), dz(120)).fails());
}

TEST_CASE("C-ideal verdicts") {
    CHECK(is_c_ideal(k23(), dz(5)).holds());
    CHECK(is_c_ideal(k23(), dz(0)).holds());
    CHECK(is_c_ideal(k23(), dz(1)).holds());
    for (i64 d : {3, 5, 7}) CHECK(is_c_ideal(k24(), dz(d)).holds());

    Verdict v = is_c_ideal(k23(), dz(12));
    REQUIRE(v.fails());
    CHECK(witness_confirms(k23(), dz(12), "c", v.witness));
    // the depth-3 product 2∘1∘1 = {8,12,18} meets 12Z without lying inside
    ElementSet deep = product_of_factors(k23(), {2, 1, 1});
    CHECK(deep == ElementSet{8, 12, 18});
    CHECK(witness_confirms(k23(), dz(12), "c", ProductWitness{{2, 1, 1}, deep}));

    Verdict z6v = is_c_ideal(z6_full(), z6zero());
    if (z6v.fails()) CHECK(witness_confirms(z6_full(), z6zero(), "c", z6v.witness));
}

TEST_CASE("C_u-ideal verdicts") {
    CHECK(is_cu_ideal(k24(), dz(2)).holds());

    Verdict v5 = is_cu_ideal(k23(), dz(5));
    REQUIRE(v5.fails());
    auto u = std::get<UnionWitness>(v5.witness);
    CHECK(u.combined == ElementSet{2, 3, 10, 15});
    CHECK(witness_confirms(k23(), dz(5), "cu", v5.witness));

    Verdict v4 = is_cu_ideal(k24(), dz(4));
    REQUIRE(v4.fails());
    auto p = std::get<ProductWitness>(v4.witness);
    CHECK(p.value == ElementSet{2, 4});  // 1∘1 meets 4Z and escapes it
    CHECK(witness_confirms(k24(), dz(4), "cu", v4.witness));

    CHECK(is_cu_ideal(k23(), dz(1)).holds());
    CHECK(is_cu_ideal(k23(), dz(0)).fails());
}

// The C_u decision rests on a reduction: a family violation collapses to a
// single escaping product (possibly paired with 0∘0). Cross-check against a
// direct enumeration of two-product families, with products of depth <= 4
// and generators across one period.
TEST_CASE("C_u union reduction equals explicit family enumeration") {
    for (const Ring& r : {k23(), k24()}) {
        for (i64 m = 2; m <= 30; ++m) {
            // value set of a depth-(t+1) product with integer base p is
            // (t-fold multiplier products) * p
            std::vector<ElementSet> products;
            ElementSet kappa{1};
            for (i64 t = 1; t <= 3; ++t) {
                ElementSet next;
                for (i64 x : kappa)
                    for (i64 k : r.multipliers()) next.insert(x * k);
                kappa = next;
                for (i64 base = -m; base <= m; ++base) {
                    ElementSet value;
                    for (i64 x : kappa) value.insert(x * base);
                    products.push_back(std::move(value));
                }
            }
            auto meets = [&](const ElementSet& s) {
                for (i64 v : s)
                    if (v % m == 0) return true;
                return false;
            };
            auto inside = [&](const ElementSet& s) {
                for (i64 v : s)
                    if (v % m != 0) return false;
                return true;
            };
            bool family_violation = false;
            for (std::size_t x = 0; x < products.size() && !family_violation; ++x)
                for (std::size_t y = x; y < products.size(); ++y) {
                    bool u_meets = meets(products[x]) || meets(products[y]);
                    bool u_inside = inside(products[x]) && inside(products[y]);
                    if (u_meets && !u_inside) {
                        family_violation = true;
                        break;
                    }
                }
            CHECK_MESSAGE(is_cu_ideal(r, dz(m)).fails() == family_violation, "m=", m);
        }
    }
}

TEST_CASE("every C_u-ideal is a C-ideal on the grid") {
    for (const Ring& r : {k23(), k24()})
        for (i64 d = 0; d <= 60; ++d)
            if (is_cu_ideal(r, dz(d)).holds()) CHECK(is_c_ideal(r, dz(d)).holds());
    for (const Ideal& i : all_ideals(z6_full()))
        if (is_cu_ideal(z6_full(), i).holds()) CHECK(is_c_ideal(z6_full(), i).holds());
}

TEST_CASE("minimal primes") {
    auto mp12 = minimal_primes(k23(), dz(12));
    REQUIRE(mp12.size() == 2);
    CHECK(mp12[0] == dz(2));
    CHECK(mp12[1] == dz(3));

    auto mp2 = minimal_primes(k23(), dz(2));
    REQUIRE(mp2.size() == 1);
    CHECK(mp2[0] == dz(2));

    auto mp105 = minimal_primes(k24(), dz(105));
    REQUIRE(mp105.size() == 3);
    CHECK(mp105[0] == dz(3));
    CHECK(mp105[1] == dz(5));
    CHECK(mp105[2] == dz(7));

    auto z6 = z6_full();
    auto mp0 = minimal_primes(z6, z6zero());
    REQUIRE(mp0.size() == 2);
    CHECK(mp0[0].elements() == ElementSet{0, 3});
    CHECK(mp0[1].elements() == ElementSet{0, 2, 4});
}

TEST_CASE("product trace periodicity") {
    for (const Ring& r : {k23(), k24(), Ring::integer_scaled({2, 3, 5})}) {
        for (i64 m : {2, 5, 12, 30, 59, 60}) {
            ProductTrace tr = ProductTrace::compute(r, m);
            REQUIRE(tr.period >= 1);
            CHECK(static_cast<i64>(tr.sets.size()) == tr.preperiod + tr.period);
            CHECK(tr.preperiod + tr.period <= m * m + 2);
            // replay one full step: the successor of the last stored set is
            // the start of the cycle
            ElementSet s = tr.sets.back();
            ElementSet next;
            for (i64 x : s)
                for (i64 k : r.multipliers())
                    next.insert(detail::mod_reduce(x * detail::mod_reduce(k, m), m));
            CHECK(next == tr.sets[tr.preperiod]);
        }
    }
    CHECK_THROWS_AS(ProductTrace::compute(k23(), 0), std::invalid_argument);
}

TEST_CASE("implication chains on a d-grid") {
    for (const Ring& r : {k23(), k24()}) {
        for (i64 d = 0; d <= 40; ++d) {
            Classification c = classify_all(r, dz(d));
            if (!c.proper) continue;
            if (c.prime.holds()) CHECK(c.primary.holds());
            if (c.primary.holds()) CHECK(c.two_absorbing_primary.holds());
            if (c.two_absorbing.holds()) CHECK(c.two_absorbing_primary.holds());
            if (c.cu_ideal.holds()) CHECK(c.c_ideal.holds());
        }
    }
}

TEST_CASE("witness soundness across a grid") {
    for (const Ring& r : {k23(), k24()}) {
        for (i64 d = 2; d <= 40; ++d) {
            for (const char* key : {"prime", "primary", "2a", "2ap", "c", "cu"}) {
                Verdict v = run_predicate(key, r, dz(d));
                if (v.fails()) CHECK_MESSAGE(witness_confirms(r, dz(d), key, v.witness),
                                             "d=", d, " predicate=", key);
            }
        }
    }
    for (const Ideal& i : all_ideals(z6_full())) {
        for (const char* key : {"prime", "primary", "2a", "2ap", "c", "cu"}) {
            Verdict v = run_predicate(key, z6_full(), i);
            if (v.fails()) CHECK(witness_confirms(z6_full(), i, key, v.witness));
        }
    }
}

TEST_CASE("residue reduction equals a small direct window check") {
    // full-scale window oracles live in the acceptance suite; spot-check the
    // pair predicates here
    for (const Ring& r : {k23(), k24()}) {
        for (i64 m = 2; m <= 25; ++m) {
            const i64 w = 3 * m;
            i64 rad = radical_ideal(r, dz(m)).generator();
            bool prime_oracle = true, primary_oracle = true;
            for (i64 x = -w; x <= w; ++x)
                for (i64 y = -w; y <= w; ++y) {
                    bool premise = true;
                    for (i64 k : r.multipliers())
                        if ((k * x * y) % m != 0) { premise = false; break; }
                    if (!premise) continue;
                    if (x % m != 0 && y % m != 0) prime_oracle = false;
                    if (x % m != 0 && y % rad != 0) primary_oracle = false;
                }
            CHECK_MESSAGE(is_prime(r, dz(m)).holds() == prime_oracle, "m=", m);
            CHECK_MESSAGE(is_primary(r, dz(m)).holds() == primary_oracle, "m=", m);
        }
    }
}

TEST_CASE("predicate key plumbing") {
    for (const char* key : {"prime", "primary", "2a", "2ap", "c", "cu"})
        CHECK(known_predicate(key));
    CHECK_FALSE(known_predicate("simple"));
    CHECK_THROWS_AS(run_predicate("simple", k23(), dz(2)), std::invalid_argument);
}
