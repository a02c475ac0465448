#pragma once

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "hyperlab/elements.hpp"

namespace hyperlab {

enum class Status { Holds, Fails, NotProper };

/// (x,y) violating a two-variable membership condition, with the product set
/// x∘y that triggered the premise.
struct PairWitness {
    i64 x = 0, y = 0;
    ElementSet product;
    bool operator==(const PairWitness&) const = default;
};

/// (a,b,c) violating a three-variable condition; carries a∘b∘c and the three
/// pair products so the verdict can be replayed by direct evaluation.
struct TripleWitness {
    i64 a = 0, b = 0, c = 0;
    ElementSet abc, ab, bc, ac;
    bool operator==(const TripleWitness&) const = default;
};

/// A concrete hyperproduct r1∘r2∘...∘rn (factors listed in order) together
/// with its value set.
struct ProductWitness {
    std::vector<i64> factors;
    ElementSet value;
    bool operator==(const ProductWitness&) const = default;
};

/// Two hyperproducts whose union meets the ideal but is not contained in it.
struct UnionWitness {
    ProductWitness meets, escapes;
    ElementSet combined;
    bool operator==(const UnionWitness&) const = default;
};

/// Absorption failure: r∘x escapes the candidate set.
struct AbsorbWitness {
    i64 r = 0, x = 0;
    ElementSet product;
    bool operator==(const AbsorbWitness&) const = default;
};

/// Subgroup failure: x - y escapes the candidate set.
struct DiffWitness {
    i64 x = 0, y = 0;
    bool operator==(const DiffWitness&) const = default;
};

using Witness = std::variant<std::monostate, PairWitness, TripleWitness, ProductWitness,
                             UnionWitness, AbsorbWitness, DiffWitness>;

struct Verdict {
    Status status = Status::Holds;
    Witness witness;

    bool holds() const { return status == Status::Holds; }
    bool fails() const { return status == Status::Fails; }
    bool not_proper() const { return status == Status::NotProper; }

    static Verdict ok() { return {Status::Holds, std::monostate{}}; }
    static Verdict fail(Witness w) { return {Status::Fails, std::move(w)}; }
    static Verdict improper() { return {Status::NotProper, std::monostate{}}; }

    bool operator==(const Verdict&) const = default;
};

std::string status_name(Status s);
nlohmann::ordered_json witness_to_json(const Witness& w);
nlohmann::ordered_json verdict_to_json(const Verdict& v);
std::string witness_render(const Witness& w);

}  // namespace hyperlab
