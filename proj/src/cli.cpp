#include "tgs/cli.hpp"

#include "tgs/errors.hpp"
#include "tgs/fixtures.hpp"
#include "tgs/format.hpp"
#include "tgs/model_finder.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace tgs {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw error("cannot write '" + path + "'");
    out << content;
}

ideal_kind parse_kind_option(const std::string& name) {
    auto kind = ideal_kind_from_name(name);
    if (!kind)
        throw CLI::ValidationError(
            "--kind", "unknown kind '" + name +
                          "' (expected reaction-closed, chemical, left, right, middle, two-sided)");
    return *kind;
}

void print_axiom_report(const finite_tgs& sys, const axiom_report& rep) {
    if (rep.holds) {
        std::cout << axiom_name(rep.axiom) << ": holds\n";
        return;
    }
    std::cout << axiom_name(rep.axiom) << ": fails (" << rep.violations << " violations)\n";
    for (const auto& ce : rep.counterexamples)
        std::cout << "  " << format_instance(sys, ce.at) << ": lhs=" << sys.state_name(ce.lhs)
                  << " rhs=" << sys.state_name(ce.rhs) << '\n';
}

int run_verify(const std::string& file, const std::string& axiom, std::size_t cap) {
    const finite_tgs sys = parse_tgs(slurp(file));
    std::vector<axiom_report> reports;
    if (axiom == "t1") {
        reports.push_back(check_t1(sys, cap));
    } else if (axiom == "t3") {
        auto t3 = check_t3(sys, cap);
        reports.push_back(std::move(t3.t3a));
        reports.push_back(std::move(t3.t3b));
    } else {
        reports = check_all(sys, cap);
    }
    for (const auto& rep : reports)
        print_axiom_report(sys, rep);
    return all_hold(reports) ? 0 : 1;
}

void print_violation(const finite_tgs& sys, const predicate_result& res) {
    std::cout << "violation";
    if (res.failed_part)
        std::cout << " (" << ideal_kind_name(*res.failed_part) << ")";
    std::cout << ": " << format_tuple(sys, res.witness->at) << " -> "
              << sys.state_name(res.witness->result) << '\n';
}

int run_ideals(const std::string& file, const std::string& kind_name, const std::string& set_csv,
               std::uint32_t max_states) {
    const finite_tgs sys = parse_tgs(slurp(file));
    const ideal_kind kind = parse_kind_option(kind_name);
    if (!set_csv.empty()) {
        const state_subset set = parse_subset(sys, set_csv);
        const auto res = check_kind(sys, set, kind);
        std::cout << ideal_kind_name(kind) << ": " << (res.holds ? "yes" : "no") << '\n';
        if (!res.holds)
            print_violation(sys, res);
        return res.holds ? 0 : 1;
    }
    const auto found = enumerate_ideals(sys, kind, max_states);
    for (const auto& set : found)
        std::cout << format_subset(sys, set) << '\n';
    std::cout << "count: " << found.size() << '\n';
    return 0;
}

int run_closure(const std::string& file, const std::string& seed_csv, const std::string& kind_name) {
    const finite_tgs sys = parse_tgs(slurp(file));
    const state_subset seed = parse_subset(sys, seed_csv);
    const state_subset closed = generate_ideal(sys, seed, parse_kind_option(kind_name));
    std::cout << format_subset(sys, closed) << '\n';
    return 0;
}

int run_prime(const std::string& file, const std::string& set_csv) {
    const finite_tgs sys = parse_tgs(slurp(file));
    const state_subset set = parse_subset(sys, set_csv);
    const prime_result res = is_prime(sys, set);
    if (res.prime) {
        std::cout << "prime: yes\n";
    } else {
        switch (*res.failure) {
            case prime_failure::not_chemical_ideal:
                std::cout << "not prime: not a chemical ideal; absorption fails at "
                          << format_tuple(sys, res.ideal_violation->at) << " -> "
                          << sys.state_name(res.ideal_violation->result) << '\n';
                std::cout << "semiprime: not applicable (not a chemical ideal)\n";
                return 1;
            case prime_failure::not_proper:
                std::cout << "not prime: the set is the whole carrier\n";
                break;
            case prime_failure::implication_fails:
                std::cout << "not prime: witness "
                          << format_tuple(sys, res.implication_witness->at) << " -> "
                          << sys.state_name(res.implication_witness->result)
                          << " lands inside with all three states outside\n";
                break;
        }
    }
    const semiprime_result sp = is_semiprime(sys, set);
    if (sp.semiprime)
        std::cout << "semiprime: yes\n";
    else
        std::cout << "semiprime: no (every self-interaction of " << sys.state_name(*sp.witness)
                  << " lands inside, the state itself is outside)\n";
    return res.prime ? 0 : 1;
}

int run_paths(const std::string& file, const std::string& from_name, const std::string& to_name,
              std::uint32_t max_len, const std::string& dot_file) {
    const finite_tgs sys = parse_tgs(slurp(file));
    const auto from = sys.find_state(from_name);
    if (!from)
        throw error("unknown state '" + from_name + "'");
    const auto to = sys.find_state(to_name);
    if (!to)
        throw error("unknown state '" + to_name + "'");
    if (max_len == 0)
        max_len = sys.state_count();
    if (!dot_file.empty())
        spill(dot_file, successor_dot(sys, *from));
    const auto path = find_pathway(sys, *from, *to, max_len);
    if (!path) {
        std::cout << "no pathway from " << from_name << " to " << to_name << " within " << max_len
                  << (max_len == 1 ? " step\n" : " steps\n");
        return 1;
    }
    std::cout << "pathway of length " << path->steps.size() << " from " << from_name << " to "
              << to_name << ":\n";
    state_id prev = path->source;
    for (std::size_t i = 0; i < path->steps.size(); ++i) {
        const auto& step = path->steps[i];
        std::cout << "  step " << (i + 1) << ": previous in " << pred_slot_name(step.slot)
                  << " slot: " << format_tuple(sys, step.application(prev)) << " -> "
                  << sys.state_name(step.result) << '\n';
        prev = step.result;
    }
    return 0;
}

int run_hom(const std::string& map_file, const std::string& dom_file, const std::string& cod_file) {
    const finite_tgs dom = parse_tgs(slurp(dom_file));
    const finite_tgs cod = parse_tgs(slurp(cod_file));
    const state_map f = parse_state_map(slurp(map_file), dom, cod);
    const hom_result res = is_homomorphism(f);
    if (res.holds) {
        std::cout << "homomorphism: yes\n";
        return 0;
    }
    std::cout << "homomorphism: no\n";
    std::cout << "violation: " << format_tuple(dom, res.witness->at) << ": mapped result "
              << cod.state_name(res.witness->mapped) << ", codomain result "
              << cod.state_name(res.witness->direct) << '\n';
    return 1;
}

int run_search(std::uint32_t states, std::uint32_t mediators, const std::string& emit_dir,
               bool sample, std::uint64_t seed, std::uint64_t budget) {
    search_spec spec{states, mediators, budget, seed};
    if (sample) {
        const auto model = sample_model(spec);
        if (!model) {
            std::cerr << "no model found within the budget\n";
            return 1;
        }
        std::cout << serialize_tgs(*model);
        return 0;
    }
    if (!emit_dir.empty()) {
        std::filesystem::create_directories(emit_dir);
        std::uint64_t index = 0;
        for_each_model(spec, [&](const finite_tgs& model) {
            std::ostringstream name;
            name << "model_" << std::setfill('0') << std::setw(6) << ++index << ".tgs";
            spill((std::filesystem::path(emit_dir) / name.str()).string(), serialize_tgs(model));
            return true;
        });
        std::cout << "wrote " << index << " models to " << emit_dir << '\n';
        return 0;
    }
    std::cout << count_models(spec) << '\n';
    return 0;
}

int run_fixture(const std::string& name, const std::string& out_file, std::uint32_t states,
                std::uint32_t mediators, bool sizes_given, std::uint32_t value,
                std::uint32_t modulus) {
    using namespace fixtures;
    std::optional<finite_tgs> sys;
    if (name == "projection-left") {
        sys = projection_model(sizes_given ? states : 5, sizes_given ? mediators : 3,
                               projection_slot::left);
    } else if (name == "projection-middle") {
        sys = projection_model(sizes_given ? states : 2, sizes_given ? mediators : 1,
                               projection_slot::middle);
    } else if (name == "projection-right") {
        sys = projection_model(sizes_given ? states : 4, sizes_given ? mediators : 2,
                               projection_slot::right);
    } else if (name == "constant") {
        sys = constant_model(sizes_given ? states : 6, sizes_given ? mediators : 2, value);
    } else if (name == "modular") {
        sys = modular_product_model(modulus);
    } else if (name == "catalysis") {
        sys = catalysis_toy();
    } else if (name == "thermo") {
        sys = thermo_toy();
    } else if (name == "field") {
        sys = field_toy();
    } else {
        throw CLI::ValidationError("fixture",
                                   "unknown fixture '" + name +
                                       "' (expected projection-left, projection-middle, "
                                       "projection-right, constant, modular, catalysis, thermo, "
                                       "field)");
    }
    spill(out_file, serialize_tgs(*sys));
    return 0;
}

} // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"workbench for finite mediated ternary systems"};
    app.require_subcommand(1);
    int rc = 0;

    auto* verify = app.add_subcommand("verify", "check the nesting axioms of a system");
    std::string verify_file, verify_axiom = "all";
    std::size_t verify_cap = 5;
    verify->add_option("file", verify_file, "system file")->required();
    verify->add_option("--axiom", verify_axiom, "t1, t3, or all")
        ->check(CLI::IsMember({"t1", "t3", "all"}));
    verify->add_option("--max-counterexamples", verify_cap, "counterexamples listed per axiom");
    verify->callback([&] { rc = run_verify(verify_file, verify_axiom, verify_cap); });

    auto* ideals = app.add_subcommand("ideals", "enumerate or test ideals of a kind");
    std::string ideals_file, ideals_kind, ideals_set;
    std::uint32_t ideals_max_states = 16;
    ideals->add_option("file", ideals_file, "system file")->required();
    ideals->add_option("--kind", ideals_kind, "ideal kind")->required();
    auto* enum_flag = ideals->add_flag("--enumerate", "list all subsets of the kind (the default)");
    ideals->add_option("--set", ideals_set, "test one comma-separated set instead")
        ->excludes(enum_flag);
    ideals->add_option("--max-states", ideals_max_states, "enumeration bound on |S|");
    ideals->callback([&] { rc = run_ideals(ideals_file, ideals_kind, ideals_set, ideals_max_states); });

    auto* closure = app.add_subcommand("closure", "smallest ideal of a kind containing the seed");
    std::string closure_file, closure_seed, closure_kind;
    closure->add_option("file", closure_file, "system file")->required();
    closure->add_option("--seed", closure_seed, "comma-separated seed states")->required();
    closure->add_option("--kind", closure_kind, "ideal kind")->required();
    closure->callback([&] { rc = run_closure(closure_file, closure_seed, closure_kind); });

    auto* prime = app.add_subcommand("prime", "prime and semiprime tests for a set");
    std::string prime_file, prime_set;
    prime->add_option("file", prime_file, "system file")->required();
    prime->add_option("--set", prime_set, "comma-separated states")->required();
    prime->callback([&] { rc = run_prime(prime_file, prime_set); });

    auto* paths = app.add_subcommand("paths", "witnessed pathway search and DOT export");
    std::string paths_file, paths_from, paths_to, paths_dot;
    std::uint32_t paths_max_len = 0;
    paths->add_option("file", paths_file, "system file")->required();
    paths->add_option("--from", paths_from, "source state")->required();
    paths->add_option("--to", paths_to, "target state")->required();
    paths->add_option("--max-len", paths_max_len, "step limit (default |S|)");
    paths->add_option("--dot", paths_dot, "write the reachable successor digraph here");
    paths->callback([&] { rc = run_paths(paths_file, paths_from, paths_to, paths_max_len, paths_dot); });

    auto* hom = app.add_subcommand("hom", "check a state map for the homomorphism law");
    std::string hom_map, hom_dom, hom_cod;
    hom->add_option("map", hom_map, "map file")->required();
    hom->add_option("domain", hom_dom, "domain system file")->required();
    hom->add_option("codomain", hom_cod, "codomain system file")->required();
    hom->callback([&] { rc = run_hom(hom_map, hom_dom, hom_cod); });

    auto* search = app.add_subcommand("search", "enumerate, count, or sample models of given sizes");
    std::uint32_t search_states = 1, search_mediators = 1;
    std::uint64_t search_seed = 0, search_budget = 100'000'000;
    std::string search_emit;
    bool search_count = false, search_sample = false;
    search->add_option("--states", search_states, "carrier size")->required();
    search->add_option("--mediators", search_mediators, "mediator count")->required();
    auto* count_flag = search->add_flag("--count", search_count, "print the number of models");
    auto* emit_opt = search->add_option("--emit", search_emit, "write each model into this directory");
    auto* sample_flag = search->add_flag("--sample", search_sample, "print one randomly found model");
    count_flag->excludes(emit_opt)->excludes(sample_flag);
    emit_opt->excludes(sample_flag);
    search->add_option("--seed", search_seed, "sampling seed");
    search->add_option("--budget", search_budget, "node budget");
    search->callback([&] {
        if (!search_count && search_emit.empty() && !search_sample)
            throw CLI::RequiredError("one of --count, --emit, --sample");
        rc = run_search(search_states, search_mediators, search_emit, search_sample, search_seed,
                        search_budget);
    });

    auto* fixture = app.add_subcommand("fixture", "write a named reference system");
    std::string fixture_name, fixture_out;
    std::uint32_t fixture_states = 0, fixture_mediators = 0, fixture_value = 0, fixture_modulus = 6;
    fixture->add_option("name", fixture_name, "fixture name")->required();
    fixture->add_option("-o,--out", fixture_out, "output file")->required();
    auto* fs = fixture->add_option("--states", fixture_states, "carrier size override");
    auto* fm = fixture->add_option("--mediators", fixture_mediators, "mediator count override");
    fs->needs(fm);
    fm->needs(fs);
    fixture->add_option("--value", fixture_value, "constant fixture value");
    fixture->add_option("--modulus", fixture_modulus, "modular fixture modulus");
    fixture->callback([&] {
        rc = run_fixture(fixture_name, fixture_out, fixture_states, fixture_mediators,
                         fs->count() > 0, fixture_value, fixture_modulus);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const budget_error& e) {
        std::cerr << e.what() << '\n';
        return 1;
    } catch (const error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
    return rc;
}

} // namespace tgs
