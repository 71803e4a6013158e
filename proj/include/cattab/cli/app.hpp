#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "serialize.hpp"
#include "verify.hpp"

namespace cattab::cli {

enum exit_code : int {
    exit_ok = 0,
    exit_verify_failed = 1,
    exit_usage = 2,
    exit_cap = 3,
    exit_invalid_object = 4,
    exit_unsupported_map = 5,
};

struct unsupported_map : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline binary_tree mirror(const binary_tree& b)
{
    if (b.empty()) return b;
    return binary_tree::node(mirror(b.right()), mirror(b.left()));
}

// Deliberately broken implementations for exercising the failure path.
inline void apply_mutation(const std::string& mutation, verify_options& o)
{
    if (mutation == "phi") {
        o.phi_impl = [](const catalan_tableau& t) { return mirror(phi(t)); };
    } else if (mutation == "stationary") {
        o.stationary_impl = [](const markov_chain& c) {
            auto pi = stationary(c);
            const rational shift(1, 1000);
            pi.probability.front() -= shift;
            pi.probability.back() += shift;
            return pi;
        };
    }
}

inline std::vector<rational> parse_grid(const std::string& text)
{
    std::vector<rational> grid;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto q = parse_rational(item);
        if (q <= 0 || q > 1) throw parse_error("grid values must lie in (0, 1]: " + item);
        grid.push_back(q);
    }
    if (grid.empty()) throw parse_error("empty grid");
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

inline std::string read_input(const std::string& path, std::istream& in)
{
    if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::ifstream file(path);
    if (!file) throw parse_error("cannot read " + path);
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

inline void emit(std::ostream& out, const serialized_object& o, const std::string& format)
{
    out << (format == "json" ? to_json(o).dump() : to_text(o)) << '\n';
}

inline serialized_object apply_map(object_kind from, object_kind to, const serialized_object& input)
{
    using k = object_kind;
    try {
        if (from == k::tableau && to == k::tree) return phi(std::get<catalan_tableau>(input));
        if (from == k::tree && to == k::tableau) return phi_inverse(std::get<binary_tree>(input));
        if (from == k::tableau && to == k::pair) return tableau_to_pair_direct(std::get<catalan_tableau>(input));
        if (from == k::tree && to == k::pair) return pair_of_paths_direct(std::get<binary_tree>(input));
        if (from == k::tree && to == k::dyck) return tree_to_dyck(std::get<binary_tree>(input));
        if (from == k::dyck && to == k::polyomino) return dyck_to_polyomino(std::get<dyck_word>(input));
        if (from == k::polyomino && to == k::pair) return polyomino_to_pair(std::get<polyomino>(input));
    } catch (const invalid_object&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw invalid_object(e.what());
    }
    throw unsupported_map(std::string("no map from ") + to_string(from) + " to " + to_string(to));
}

} // namespace detail

/// Runs the command line and returns the process exit code.
inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Catalan tableaux, binary trees, lattice paths and the TASEP stationary distribution", "cattab"};
    app.require_subcommand(1);

    const std::vector<std::string> formats{"json", "text"};
    std::string format = "text";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
    };

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "List every tableau or tree of a given size");
    std::string object;
    int n = 1;
    bool count_only = false;
    int cap = 0;
    enumerate->add_option("--object", object, "tableaux or trees")->required()->check(CLI::IsMember({"tableaux", "trees"}));
    enumerate->add_option("--n", n, "Tableau index or tree size")->required();
    enumerate->add_flag("--count-only", count_only, "Print the number of objects only");
    enumerate->add_option("--cap", cap, "Largest n accepted (default 12)");
    add_format(enumerate);

    // map
    auto* map = app.add_subcommand("map", "Apply a bijection to one serialized object");
    std::string from_name;
    std::string to_name;
    std::string input_path;
    std::vector<std::string> kinds;
    for (auto kind : {object_kind::tableau, object_kind::tree, object_kind::path, object_kind::pair, object_kind::dyck,
                      object_kind::polyomino, object_kind::distribution})
        kinds.emplace_back(to_string(kind));
    map->add_option("--from", from_name, "Input kind")->required()->check(CLI::IsMember(kinds));
    map->add_option("--to", to_name, "Output kind")->required()->check(CLI::IsMember(kinds));
    map->add_option("input", input_path, "Input file (standard input when omitted or -)");
    add_format(map);

    // tasep
    auto* tasep = app.add_subcommand("tasep", "Exact stationary distribution");
    std::string alpha_text = "1";
    std::string beta_text = "1";
    std::string method_name = "chain";
    tasep->add_option("--n", n, "Number of cells")->required();
    tasep->add_option("--alpha", alpha_text, "Entry rate p/q")->capture_default_str();
    tasep->add_option("--beta", beta_text, "Exit rate p/q")->capture_default_str();
    tasep->add_option("--method", method_name, "chain, trees, pairs, paths or tableaux")
        ->check(CLI::IsMember({"chain", "trees", "pairs", "paths", "tableaux"}))
        ->capture_default_str();
    tasep->add_option("--cap", cap, "Largest n accepted");
    add_format(tasep);

    // simulate
    auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo run of the chain (approximate)");
    std::uint64_t steps = 100000;
    std::uint64_t seed = 1;
    std::uint64_t burn_in = 0;
    std::string start;
    simulate_cmd->add_option("--n", n, "Number of cells")->required();
    simulate_cmd->add_option("--alpha", alpha_text, "Entry rate p/q")->capture_default_str();
    simulate_cmd->add_option("--beta", beta_text, "Exit rate p/q")->capture_default_str();
    simulate_cmd->add_option("--steps", steps, "Steps after burn-in")->capture_default_str();
    simulate_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
    simulate_cmd->add_option("--burn-in", burn_in, "Steps discarded first")->capture_default_str();
    simulate_cmd->add_option("--start", start, "Start state as a 0/1 word (default all empty)");
    simulate_cmd->add_option("--cap", cap, "Largest n accepted (default 8)");
    add_format(simulate_cmd);

    // verify
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite;
    int max_n = 6;
    std::string grid_text = "1/4,1/3,1/2,2/3,1";
    std::string mutation;
    bool timing = false;
    verify->add_option("--suite", suite, "counts, bijections, pipelines, tasep or partition")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    verify->add_option("--max-n", max_n, "Largest size checked")->capture_default_str();
    verify->add_option("--grid", grid_text, "Comma separated rates p/q")->capture_default_str();
    verify->add_option("--mutate", mutation, "Swap in a broken implementation")
        ->check(CLI::IsMember({"phi", "stationary"}))
        ->group("");
    verify->add_flag("--timing", timing, "Include the wall-clock duration");
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        if (*enumerate) {
            resource_caps caps;
            if (enumerate->count("--cap")) caps.max_enumeration_size = cap;
            std::vector<serialized_object> objects;
            std::uint64_t count = 0;
            if (object == "tableaux") {
                for (auto& t : enumerate_tableaux(n, caps)) objects.emplace_back(std::move(t));
            } else {
                for (auto& b : enumerate_trees(n, caps)) objects.emplace_back(std::move(b));
            }
            count = objects.size();
            if (count_only) {
                out << (format == "json" ? json{{"object", object}, {"n", n}, {"count", count}}.dump() : std::to_string(count))
                    << '\n';
                return exit_ok;
            }
            std::vector<std::pair<std::string, std::size_t>> keyed;
            for (std::size_t i = 0; i < objects.size(); ++i) keyed.emplace_back(to_json(objects[i]).dump(), i);
            std::sort(keyed.begin(), keyed.end());
            for (const auto& [key, i] : keyed) {
                if (format == "json") out << key << '\n';
                else out << to_text(objects[i]) << '\n';
            }
            return exit_ok;
        }

        if (*map) {
            const auto from = *parse_kind(from_name);
            const auto to = *parse_kind(to_name);
            const auto input = parse_object(from, detail::read_input(input_path, in));
            detail::emit(out, detail::apply_map(from, to, input), format);
            return exit_ok;
        }

        if (*tasep) {
            const rate_params rates{parse_rational(alpha_text), parse_rational(beta_text)};
            resource_caps caps;
            if (tasep->count("--cap")) {
                check_cap(n, cap, "n");
                caps = resource_caps{cap + 1, cap, cap};
            }
            const tasep_method methods[] = {tasep_method::chain, tasep_method::trees, tasep_method::pairs,
                                            tasep_method::paths, tasep_method::tableaux};
            const auto method = *std::find_if(std::begin(methods), std::end(methods),
                                              [&](tasep_method m) { return method_name == to_string(m); });
            detail::emit(out, tasep_distribution(n, rates, method, caps), format);
            return exit_ok;
        }

        if (*simulate_cmd) {
            const rate_params rates{parse_rational(alpha_text), parse_rational(beta_text)};
            resource_caps caps;
            if (simulate_cmd->count("--cap")) caps.max_chain_size = cap;
            const auto chain = build_chain(n, rates, caps);
            simulation_options opts{steps, burn_in, seed, 0};
            if (!start.empty()) {
                const auto s = tasep_state::parse(start);
                if (s.length != n) throw parse_error("start state must have n cells");
                opts.start_state = s.bits;
            }
            const auto sample = cattab::simulate(chain, opts);
            const auto exact = stationary(chain);
            const double tv = total_variation(sample, exact);
            if (format == "json") {
                json freq = json::array();
                for (std::uint64_t s = 0; s < sample.visits.size(); ++s) {
                    freq.push_back(json{{"state", tasep_state{n, s}.str()},
                                        {"visits", sample.visits[s]},
                                        {"frequency", sample.frequency(s)},
                                        {"exact", to_string(exact.probability[s])}});
                }
                out << json{{"approximate", true},
                            {"n", n},
                            {"alpha", to_string(rates.alpha)},
                            {"beta", to_string(rates.beta)},
                            {"steps", steps},
                            {"burn_in", burn_in},
                            {"seed", seed},
                            {"samples", sample.samples},
                            {"states", std::move(freq)},
                            {"total_variation", tv}}
                           .dump()
                    << '\n';
            } else {
                out << "approximate: " << sample.samples << " samples, seed " << seed << '\n';
                for (std::uint64_t s = 0; s < sample.visits.size(); ++s) {
                    out << tasep_state{n, s}.str() << ":~" << sample.frequency(s) << " exact "
                        << to_string(exact.probability[s]) << '\n';
                }
                out << "total variation (approximate): " << tv << '\n';
            }
            return exit_ok;
        }

        if (*verify) {
            verify_options opts;
            opts.max_n = max_n;
            opts.grid = detail::parse_grid(grid_text);
            detail::apply_mutation(mutation, opts);
            const auto report = run_suite(suite, opts);
            if (format == "json") out << to_json(report, timing).dump(2) << '\n';
            else out << to_text(report, timing) << '\n';
            return report.ok() ? exit_ok : exit_verify_failed;
        }
    } catch (const resource_cap_exceeded& e) {
        err << "cattab: resource cap exceeded: " << e.what() << '\n';
        return exit_cap;
    } catch (const parse_error& e) {
        err << "cattab: parse error: " << e.what() << '\n';
        return exit_usage;
    } catch (const invalid_object& e) {
        err << "cattab: invalid object: " << e.what() << '\n';
        return exit_invalid_object;
    } catch (const unsupported_map& e) {
        err << "cattab: unsupported map: " << e.what() << '\n';
        return exit_unsupported_map;
    } catch (const std::invalid_argument& e) {
        err << "cattab: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace cattab::cli
