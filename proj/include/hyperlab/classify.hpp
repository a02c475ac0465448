#pragma once

#include "hyperlab/ideal.hpp"
#include "hyperlab/sweep.hpp"

namespace hyperlab {

/// Eventually periodic sequence of multiplier-product sets mod m:
/// sets[t-1] = { k_1*...*k_t mod m : k_i in K }. Drives the exact C-ideal
/// decision for integer-carrier ideals.
struct ProductTrace {
    i64 modulus = 0;
    std::vector<ElementSet> sets;  // S_1 .. S_{preperiod+period}, all distinct
    i64 preperiod = 0;
    i64 period = 0;

    static ProductTrace compute(const Ring& r, i64 modulus);
};

/// Decision procedures for the hyperideal classes. Integer-carrier ideals
/// mZ are decided over residues mod m (every atomic condition there is a
/// divisibility by m, invariant under shifting any quantified variable by
/// m); finite carriers are enumerated exhaustively. Negative verdicts carry
/// the lexicographically least witness, independent of sweep mode.
Verdict is_prime(const Ring& r, const Ideal& i, sweep::Mode mode = sweep::Mode::Auto);
Verdict is_primary(const Ring& r, const Ideal& i, sweep::Mode mode = sweep::Mode::Auto);
Verdict is_two_absorbing(const Ring& r, const Ideal& i, sweep::Mode mode = sweep::Mode::Auto);
Verdict is_two_absorbing_primary(const Ring& r, const Ideal& i,
                                 sweep::Mode mode = sweep::Mode::Auto);
Verdict is_c_ideal(const Ring& r, const Ideal& i);
Verdict is_cu_ideal(const Ring& r, const Ideal& i);

/// Prime hyperideals containing i with no prime strictly between.
std::vector<Ideal> minimal_primes(const Ring& r, const Ideal& i,
                                  sweep::Mode mode = sweep::Mode::Auto);

struct Classification {
    bool proper = false;
    Verdict prime, primary, two_absorbing, two_absorbing_primary, c_ideal, cu_ideal;
    Ideal radical = Ideal::principal_multiple(0);
    std::vector<Ideal> min_primes;
};

Classification classify_all(const Ring& r, const Ideal& i,
                            sweep::Mode mode = sweep::Mode::Auto);

/// Predicate keys used across the CLI, the law harness and reports:
/// "prime", "primary", "2a", "2ap", "c", "cu".
Verdict run_predicate(const std::string& key, const Ring& r, const Ideal& i,
                      sweep::Mode mode = sweep::Mode::Auto);
bool known_predicate(const std::string& key);

/// Replays a negative witness by direct evaluation of the defining
/// conditions (hyperoperations plus membership); classifier internals are
/// not consulted.
bool witness_confirms(const Ring& r, const Ideal& i, const std::string& predicate,
                      const Witness& w);

/// Product set of a factor list r1∘r2∘...∘rn (left fold, n >= 1).
ElementSet product_of_factors(const Ring& r, const std::vector<i64>& factors);

nlohmann::ordered_json classification_to_json(const Ring& r, const Classification& c);

}  // namespace hyperlab
