// hyperlab: describe hyperrings, classify hyperideals, replay the numbered
// results over instance grids, and search for separating examples.
//
// Exit codes: 0 success / expectations met, 1 verdict mismatch or law
// violation, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "hyperlab/laws.hpp"
#include "hyperlab/sweep.hpp"

namespace {

using namespace hyperlab;
using nlohmann::ordered_json;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

nlohmann::json parse_spec_arg(const std::string& arg) {
    std::string text = arg;
    if (!text.empty() && text[0] != '{' && text[0] != '[') text = slurp(arg);
    return nlohmann::json::parse(text);
}

// Ring specs are either a family object or {"projection": {"ring": ...,
// "ideal": ...}}, which names the target of the quotient projection.
Ring resolve_ring(const nlohmann::json& spec) {
    if (spec.is_object() && spec.contains("projection")) {
        const auto& p = spec.at("projection");
        Ring base = resolve_ring(p.at("ring"));
        Ideal j = ideal_from_json(base, p.at("ideal"));
        return quotient_ring(base, j).ring;
    }
    return ring_from_json(spec);
}

Ring ring_from_arg(const std::string& arg) { return resolve_ring(parse_spec_arg(arg)); }

Ideal ideal_from_arg(const Ring& r, const std::string& arg) {
    // shorthand "12Z" for principal handles
    if (!arg.empty() && arg.back() == 'Z') {
        std::string digits = arg.substr(0, arg.size() - 1);
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
            if (r.family() != Family::IntegerScaled)
                throw std::invalid_argument("principal handles require the integer family");
            return Ideal::principal_multiple(std::stoll(digits));
        }
    }
    return ideal_from_json(r, parse_spec_arg(arg));
}

GridSpec grid_from_options(const std::string& grid_kv, std::uint64_t seed,
                           const std::optional<Ring>& ring) {
    GridSpec g;
    g.seed = seed;
    g.ring_override = ring;
    std::stringstream ss(grid_kv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("grid: expected key=value, got \"" + item + "\"");
        std::string key = item.substr(0, eq);
        i64 value = std::stoll(item.substr(eq + 1));
        if (key == "dmax") g.dmax = value;
        else if (key == "cap") g.modulus_cap = value;
        else if (key == "modular") g.include_modular = value != 0;
        else throw std::invalid_argument("grid: unknown key \"" + key + "\"");
    }
    return g;
}

void emit(const ordered_json& j, const std::string& text, const std::string& format) {
    if (format == "json") std::cout << j.dump(2) << "\n";
    else std::cout << text;
}

int cmd_describe(const std::string& ring_arg, const std::string& format) {
    Ring r = ring_from_arg(ring_arg);
    AxiomReport rep = check_axioms(r);
    ordered_json j;
    j["ring"] = ring_to_json(r);
    j["proper"] = r.proper();
    j["strongly_distributive"] = rep.strongly_distributive;
    j["axioms"] = axiom_report_to_json(rep);

    std::ostringstream text;
    text << "ring: " << r.render() << "\n";
    text << "proper: " << (r.proper() ? "true" : "false") << "\n";
    auto line = [&](const char* name, bool v) {
        text << name << ": " << (v ? "true" : "false") << "\n";
    };
    line("associative", rep.associative);
    line("distributive_inclusion", rep.distributive_inclusion);
    line("strongly_distributive", rep.strongly_distributive);
    line("absorbing_zero", rep.absorbing_zero);
    line("commutative", rep.commutative);
    emit(j, text.str(), format);
    return 0;
}

std::string verdict_value(const Classification& c, const std::string& key) {
    if (key == "prime") return status_name(c.prime.status);
    if (key == "primary") return status_name(c.primary.status);
    if (key == "2a") return status_name(c.two_absorbing.status);
    if (key == "2ap") return status_name(c.two_absorbing_primary.status);
    if (key == "c") return status_name(c.c_ideal.status);
    if (key == "cu") return status_name(c.cu_ideal.status);
    if (key == "radical") return render(c.radical);
    if (key == "proper") return c.proper ? "true" : "false";
    throw std::invalid_argument("unknown expectation key \"" + key + "\"");
}

int cmd_classify(const std::string& ring_arg, const std::string& ideal_arg,
                 const std::string& expect, const std::string& format) {
    Ring r = ring_from_arg(ring_arg);
    Ideal i = ideal_from_arg(r, ideal_arg);
    Classification c = classify_all(r, i);

    ordered_json j = classification_to_json(r, c);
    j["ideal"] = render(i);
    j["ideal_spec"] = ideal_to_json(i);

    ordered_json claims = ordered_json::array();
    ordered_json divergences = ordered_json::array();
    for (const ClaimCheck& chk : check_claims_for(r, i)) {
        ordered_json e;
        e["id"] = chk.claim.id;
        e["kind"] = chk.claim.kind;
        e["claimed"] = chk.claim.expected;
        e["computed"] = chk.computed;
        e["matches"] = chk.matches;
        claims.push_back(e);
        if (!chk.matches) divergences.push_back(e);
    }
    j["claims"] = claims;
    j["divergences"] = divergences;

    std::ostringstream text;
    text << "ring: " << r.render() << "\n";
    text << "ideal: " << render(i) << "\n";
    text << "proper: " << (c.proper ? "true" : "false") << "\n";
    auto vline = [&](const char* name, const Verdict& v) {
        text << name << ": " << status_name(v.status);
        if (v.fails()) text << "  witness: " << witness_render(v.witness);
        text << "\n";
    };
    vline("prime", c.prime);
    vline("primary", c.primary);
    vline("2a", c.two_absorbing);
    vline("2ap", c.two_absorbing_primary);
    vline("c", c.c_ideal);
    vline("cu", c.cu_ideal);
    text << "radical: " << render(c.radical) << "\n";
    text << "minimal_primes:";
    for (const Ideal& p : c.min_primes) text << " " << render(p);
    text << "\n";
    for (const auto& d : divergences)
        text << "divergence: " << d["id"].get<std::string>() << " "
             << d["kind"].get<std::string>() << " claimed=" << d["claimed"].get<std::string>()
             << " computed=" << d["computed"].get<std::string>() << "\n";
    emit(j, text.str(), format);

    if (expect.empty()) return 0;
    bool all_match = true;
    std::stringstream ss(expect);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("expect: expected key=value, got \"" + item + "\"");
        std::string key = item.substr(0, eq);
        std::string want = item.substr(eq + 1);
        std::string got = verdict_value(c, key);
        if (got != want) {
            std::cerr << "expectation failed: " << key << " = " << got << ", expected "
                      << want << "\n";
            all_match = false;
        }
    }
    return all_match ? 0 : 1;
}

int cmd_laws(const std::string& law_id, bool run_all, const GridSpec& grid,
             bool expect_violations, const std::string& format) {
    std::vector<LawReport> reports;
    if (run_all) {
        reports = run_all_laws(grid);
    } else {
        if (!find_law(law_id)) throw std::invalid_argument("unknown law id \"" + law_id + "\"");
        reports.push_back(run_law(law_id, grid));
    }
    std::size_t total_violations = 0;
    bool companion_missing = false;
    for (const LawReport& rep : reports) {
        total_violations += rep.violations.size();
        if (rep.companion_found.has_value() && !*rep.companion_found) companion_missing = true;
        if (format == "json") std::cout << law_report_to_json(rep).dump() << "\n";
        else std::cout << law_report_render(rep) << "\n";
        std::cerr << "# " << rep.law << " wall_ms=" << rep.wall_ms << "\n";
    }
    bool violations_ok = expect_violations ? total_violations > 0 : total_violations == 0;
    return (violations_ok && !companion_missing) ? 0 : 1;
}

int cmd_search(const std::string& holds, const std::string& fails, const GridSpec& grid,
               const std::string& format) {
    auto found = find_separating(holds, fails, grid);
    ordered_json j = separating_to_json(holds, fails, grid, found);
    std::ostringstream text;
    text << "holds=" << holds << " fails=" << fails << " matches=" << found.size() << "\n";
    for (const SeparatingExample& s : found)
        text << s.ring.render() << " I=" << render(s.ideal) << "  witness: "
             << witness_render(s.failing.witness) << "\n";
    emit(j, text.str(), format);
    return found.empty() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperlab: hyperideal arithmetic, classification, and law checking"};
    app.require_subcommand(1);

    std::string ring_arg, ideal_arg, expect, format = "json";
    std::string law_id, holds, fails, grid_kv;
    std::uint64_t seed = 2026;
    bool run_all = false, expect_violations = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "json|text")
            ->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--seed", seed, "seed for sampled instance grids");
    };

    CLI::App* describe = app.add_subcommand("describe", "axiom report for a ring spec");
    describe->add_option("--ring", ring_arg, "ring spec (inline JSON or path)")->required();
    add_format(describe);

    CLI::App* classify = app.add_subcommand("classify", "classify one hyperideal");
    classify->add_option("--ring", ring_arg, "ring spec (inline JSON or path)")->required();
    classify->add_option("--ideal", ideal_arg, "ideal spec (JSON, path, or \"12Z\")")
        ->required();
    classify->add_option("--expect", expect,
                         "comma list k=v over prime,primary,2a,2ap,c,cu,radical,proper");
    add_format(classify);

    CLI::App* laws = app.add_subcommand("laws", "replay numbered results over grids");
    laws->add_option("--law", law_id, "law id, e.g. T3.5");
    laws->add_flag("--all", run_all, "run the whole registry");
    laws->add_option("--ring", ring_arg, "restrict the grid to this ring");
    laws->add_option("--grid", grid_kv, "grid knobs: dmax=60,cap=240,modular=1");
    laws->add_flag("--expect-violations", expect_violations,
                   "exit 0 only when violations are found");
    add_format(laws);

    CLI::App* search = app.add_subcommand("search", "find separating examples");
    search->add_option("--holds", holds, "predicate that must hold")->required();
    search->add_option("--fails", fails, "predicate that must fail")->required();
    search->add_option("--ring", ring_arg, "restrict the grid to this ring");
    search->add_option("--grid", grid_kv, "grid knobs: dmax=60,cap=240,modular=1");
    add_format(search);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (describe->parsed()) return cmd_describe(ring_arg, format);
        if (classify->parsed()) return cmd_classify(ring_arg, ideal_arg, expect, format);
        std::optional<Ring> override_ring;
        if (!ring_arg.empty()) override_ring = ring_from_arg(ring_arg);
        GridSpec grid = grid_from_options(grid_kv, seed, override_ring);
        if (laws->parsed()) {
            if (!run_all && law_id.empty())
                throw std::invalid_argument("laws: pass --law <id> or --all");
            return cmd_laws(law_id, run_all, grid, expect_violations, format);
        }
        return cmd_search(holds, fails, grid, format);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
