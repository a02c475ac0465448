#pragma once

#include <optional>

#include "hyperlab/classify.hpp"
#include "hyperlab/morphism.hpp"

namespace hyperlab {

/// Instance grids the laws run over. Integer rings get principal ideals dZ
/// with d <= dmax; derived moduli (intersections, ideal products) are capped
/// by modulus_cap to keep triple sweeps bounded. include_modular adds a fixed
/// set of finite rings with carriers up to 16.
struct GridSpec {
    i64 dmax = 60;
    i64 modulus_cap = 240;
    std::vector<std::vector<i64>> multiplier_sets = {{2, 3}, {2, 4}, {2, 3, 5}};
    bool include_modular = true;
    std::uint64_t seed = 2026;
    std::optional<Ring> ring_override;

    nlohmann::ordered_json to_json() const;
};

struct LawInfo {
    std::string id;
    std::string summary;
    bool strongly_distributive_only = false;
    bool has_companion = false;
    std::string companion_summary;
};

/// The 18 registered results, in source order.
const std::vector<LawInfo>& law_registry();
const LawInfo* find_law(const std::string& id);

struct Violation {
    std::string instance;
    nlohmann::ordered_json witness;
};

struct LawReport {
    std::string law;
    nlohmann::ordered_json grid;
    i64 instances = 0;
    i64 premises_satisfied = 0;
    std::vector<Violation> violations;
    std::optional<bool> companion_found;
    std::vector<std::string> companion_witnesses;
    double wall_ms = 0;  // informational; excluded from the canonical JSON
};

nlohmann::ordered_json law_report_to_json(const LawReport& rep);
std::string law_report_render(const LawReport& rep);

LawReport run_law(const std::string& id, const GridSpec& grid);
std::vector<LawReport> run_all_laws(const GridSpec& grid);

struct SeparatingExample {
    Ring ring;
    Ideal ideal;
    Verdict failing;
};

/// Grid instances where holds_key verifies and fails_key fails, with the
/// failure witness attached.
std::vector<SeparatingExample> find_separating(const std::string& holds_key,
                                               const std::string& fails_key,
                                               const GridSpec& grid);
nlohmann::ordered_json separating_to_json(const std::string& holds_key,
                                          const std::string& fails_key, const GridSpec& grid,
                                          const std::vector<SeparatingExample>& found);

/// Classification claims published alongside the numbered results, re-checked
/// by the kernel rather than assumed. kind is a predicate key, "radical", or
/// "minimal_primes"; expected is "true"/"false" or a rendered ideal (list).
struct ExampleClaim {
    std::string id;
    Ring ring;
    Ideal ideal;
    std::string kind;
    std::string expected;
};

const std::vector<ExampleClaim>& example_claims();

struct ClaimCheck {
    ExampleClaim claim;
    std::string computed;
    bool matches = false;
    Verdict verdict;  // populated for predicate kinds
};

ClaimCheck check_claim(const ExampleClaim& c);
/// Claims matching this exact ring and ideal (used to flag divergences in
/// classify reports).
std::vector<ClaimCheck> check_claims_for(const Ring& r, const Ideal& i);

/// Default finite rings used by the grids (carriers <= 16).
std::vector<Ring> default_modular_rings();

}  // namespace hyperlab
