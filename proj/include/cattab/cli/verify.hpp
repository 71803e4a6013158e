#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "serialize.hpp"

namespace cattab::cli {

struct check_record {
    std::string name;
    json params;
    bool pass = true;
    json witness;  // null when the check passed
};

struct verify_report {
    std::string suite;
    int max_n = 0;
    std::vector<check_record> checks;
    double seconds = 0;

    int passed() const
    {
        int n = 0;
        for (const auto& c : checks) n += c.pass;
        return n;
    }
    int failed() const { return static_cast<int>(checks.size()) - passed(); }
    bool ok() const { return failed() == 0; }
};

/// The implementations under test can be swapped, which is how the failure
/// path (and its witnesses) gets exercised.
struct verify_options {
    int max_n = 6;
    std::vector<rational> grid{rational(1, 4), rational(1, 3), rational(1, 2), rational(2, 3), rational(1)};
    resource_caps caps;
    std::function<binary_tree(const catalan_tableau&)> phi_impl = [](const catalan_tableau& t) { return phi(t); };
    std::function<distribution(const markov_chain&)> stationary_impl = [](const markov_chain& c) { return stationary(c); };
};

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"counts", "bijections", "pipelines", "tasep", "partition"};
    return names;
}

namespace detail {

class recorder {
public:
    explicit recorder(verify_report& report) : report_(report) {}

    // witness == null means pass
    void add(std::string name, json params, json witness)
    {
        const bool pass = witness.is_null();
        report_.checks.push_back({std::move(name), std::move(params), pass, std::move(witness)});
    }

private:
    verify_report& report_;
};

inline json rates_json(const rate_params& r)
{
    return json{{"alpha", to_string(r.alpha)}, {"beta", to_string(r.beta)}};
}

inline std::vector<lattice_path> all_paths(int length)
{
    std::vector<lattice_path> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << length); ++mask) {
        std::string steps;
        for (int i = length - 1; i >= 0; --i) steps.push_back((mask >> i) & 1U ? lattice_path::north : lattice_path::east);
        out.emplace_back(std::move(steps));
    }
    return out;
}

// First state where the two distributions differ, or null.
inline json distribution_mismatch(const distribution& expected, const distribution& actual, const char* expected_name,
                                  const char* actual_name)
{
    for (std::uint64_t s = 0; s < expected.probability.size(); ++s) {
        if (expected.probability[s] != actual.probability.at(s)) {
            return json{{"state", tasep_state{expected.size, s}.str()},
                        {expected_name, to_string(expected.probability[s])},
                        {actual_name, to_string(actual.probability.at(s))}};
        }
    }
    return nullptr;
}

inline void run_counts(recorder& rec, const verify_options& o)
{
    for (int n = 1; n <= o.max_n; ++n) {
        const auto tableaux = enumerate_tableaux(n, o.caps).size();
        const auto trees = enumerate_trees(n, o.caps).size();
        const auto expected = catalan(n);
        json witness = nullptr;
        if (tableaux != expected || trees != expected) {
            witness = json{{"tableaux", tableaux}, {"trees", trees}, {"catalan", expected}};
        }
        rec.add("catalan-count", json{{"n", n}}, std::move(witness));
    }
}

inline void run_bijections(recorder& rec, const verify_options& o)
{
    for (int n = 1; n <= o.max_n; ++n) {
        const auto tableaux = enumerate_tableaux(n, o.caps);
        const auto trees = enumerate_trees(n, o.caps);
        const json params{{"n", n}};

        json bijection = nullptr;
        json canopy_witness = nullptr;
        json statistics = nullptr;
        std::map<binary_tree, const catalan_tableau*> image;
        for (const auto& t : tableaux) {
            const auto b = o.phi_impl(t);
            if (bijection.is_null()) {
                if (b.size() != static_cast<std::size_t>(n)) {
                    bijection = json{{"tableau", to_json(t)}, {"tree", to_json(b)}, {"reason", "wrong vertex count"}};
                } else if (auto [it, fresh] = image.emplace(b, &t); !fresh) {
                    bijection = json{{"tableau", to_json(t)}, {"collides_with", to_json(*it->second)}, {"tree", to_json(b)}};
                } else if (phi_inverse(b) != t) {
                    bijection = json{{"tableau", to_json(t)}, {"tree", to_json(b)}, {"reason", "phi_inverse(phi(t)) != t"}};
                }
            }
            if (canopy_witness.is_null() && canopy_path(b) != profile(t)) {
                canopy_witness = json{{"tableau", to_json(t)}, {"profile", profile(t).str()}, {"canopy", canopy(b).letters}};
            }
            if (statistics.is_null() &&
                (left_branch_edges(b) != ones_in_first_row(t) || right_branch_edges(b) != unrestricted_row_count(t) - 1)) {
                statistics = json{{"tableau", to_json(t)},
                                  {"lb", left_branch_edges(b)},
                                  {"rb", right_branch_edges(b)},
                                  {"ones_in_first_row", ones_in_first_row(t)},
                                  {"unrestricted_rows", unrestricted_row_count(t)}};
            }
        }
        if (bijection.is_null()) {
            for (const auto& b : trees) {
                if (!image.count(b)) {
                    bijection = json{{"tree", to_json(b)}, {"reason", "not in the image of phi"}};
                    break;
                }
                if (o.phi_impl(phi_inverse(b)) != b) {
                    bijection = json{{"tree", to_json(b)}, {"reason", "phi(phi_inverse(b)) != b"}};
                    break;
                }
            }
        }
        rec.add("phi-bijection", params, std::move(bijection));
        rec.add("canopy-equals-profile", params, std::move(canopy_witness));
        rec.add("branch-statistics", params, std::move(statistics));

        // fibres over omega of length n - 1: tableaux by profile vs paths below
        if (n - 1 <= o.caps.max_path_length) {
            std::map<lattice_path, count_type> fibre;
            for (const auto& t : tableaux) ++fibre[profile(t)];
            json witness = nullptr;
            for (const auto& omega : all_paths(n - 1)) {
                const auto by_tableaux = fibre[omega];
                const auto by_pairs = static_cast<count_type>(paths_below(omega).size());
                const auto oracle = count_paths_below(omega, o.caps);
                if (by_tableaux != oracle || by_pairs != oracle) {
                    witness = json{{"omega", omega.str()}, {"tableaux", by_tableaux}, {"pairs", by_pairs}, {"oracle", oracle}};
                    break;
                }
            }
            rec.add("fibre-counts", params, std::move(witness));
        }
    }
}

inline void run_pipelines(recorder& rec, const verify_options& o)
{
    for (int n = 1; n <= o.max_n; ++n) {
        const json params{{"n", n}};
        json dyck_route = nullptr;
        for (const auto& b : enumerate_trees(n, o.caps)) {
            const auto via_polyomino = polyomino_to_pair(dyck_to_polyomino(tree_to_dyck(b)));
            const auto direct = pair_of_paths_direct(b);
            if (via_polyomino != direct) {
                dyck_route = json{{"tree", to_json(b)}, {"via_polyomino", to_json(via_polyomino)}, {"right_height", to_json(direct)}};
                break;
            }
        }
        rec.add("dyck-route-equals-right-height", params, std::move(dyck_route));

        json figure_route = nullptr;
        json transport = nullptr;
        for (const auto& t : enumerate_tableaux(n, o.caps)) {
            const auto b = o.phi_impl(t);
            const auto via_tree = pair_of_paths_direct(b);
            if (figure_route.is_null()) {
                const auto direct = tableau_to_pair_direct(t);
                if (direct != via_tree) {
                    figure_route = json{{"tableau", to_json(t)}, {"direct", to_json(direct)}, {"via_tree", to_json(via_tree)}};
                }
            }
            if (transport.is_null() && via_tree.omega != profile(t)) {
                transport = json{{"tableau", to_json(t)}, {"omega", via_tree.omega.str()}, {"profile", profile(t).str()}};
            }
        }
        rec.add("tableau-rule-equals-right-height", params, std::move(figure_route));
        rec.add("shape-transport", params, std::move(transport));

        if (n <= o.caps.max_path_length) {
            json narayana = nullptr;
            for (const auto& omega : all_paths(n)) {
                const auto det = narayana_count(omega);
                const auto oracle = count_paths_below(omega, o.caps);
                if (det != oracle) {
                    narayana = json{{"omega", omega.str()}, {"determinant", det}, {"oracle", oracle}};
                    break;
                }
            }
            rec.add("narayana-determinant", json{{"length", n}}, std::move(narayana));
        }
    }
}

inline void run_tasep(recorder& rec, const verify_options& o)
{
    const rational one = 1;
    for (int n = 1; n <= o.max_n; ++n) {
        std::map<std::pair<rational, rational>, distribution> solved;
        for (const auto& alpha : o.grid) {
            for (const auto& beta : o.grid) {
                const rate_params r{alpha, beta};
                json params{{"n", n}, {"alpha", to_string(alpha)}, {"beta", to_string(beta)}};
                const auto chain = build_chain(n, r, o.caps);
                const auto pi = o.stationary_impl(chain);
                solved.emplace(std::pair{alpha, beta}, pi);

                json exact = nullptr;
                rational total = 0;
                for (const auto& p : pi.probability) total += p;
                const auto residual = balance_residual(chain, pi);
                for (std::uint64_t s = 0; s < residual.size(); ++s) {
                    if (residual[s] != 0) {
                        exact = json{{"state", tasep_state{n, s}.str()}, {"residual", to_string(residual[s])}};
                        break;
                    }
                }
                if (exact.is_null() && total != 1) exact = json{{"sum", to_string(total)}};
                rec.add("stationary-exact", params, std::move(exact));

                const auto trees = tasep_distribution(n, r, tasep_method::trees, o.caps);
                rec.add("chain-equals-trees", params, distribution_mismatch(pi, trees, "chain", "trees"));
                const auto pairs = tasep_distribution(n, r, tasep_method::pairs, o.caps);
                rec.add("chain-equals-pairs", params, distribution_mismatch(pi, pairs, "chain", "pairs"));

                // tableau weights alpha^-(ones in first row) beta^-(unrestricted rows - 1)
                distribution by_tableaux{n, std::vector<rational>(pi.probability.size())};
                const auto z = partition_z(n, r, partition_method::closed_form, o.caps);
                for (const auto& t : enumerate_tableaux(n + 1, o.caps)) {
                    std::uint64_t s = 0;
                    for (char c : profile(t).str()) s = (s << 1) | static_cast<std::uint64_t>(c == lattice_path::north);
                    by_tableaux.probability[s] +=
                        ipow(alpha, -ones_in_first_row(t)) * ipow(beta, -(unrestricted_row_count(t) - 1)) / z;
                }
                rec.add("chain-equals-tableau-weights", params, distribution_mismatch(pi, by_tableaux, "chain", "tableaux"));

                rational tree_total = 0;
                for (const auto& p : trees.probability) tree_total += p;
                rec.add("trees-normalised", params, tree_total == 1 ? json(nullptr) : json{{"sum", to_string(tree_total)}});

                if (alpha == one && beta == one) {
                    const json unit{{"n", n}};
                    rec.add("chain-equals-paths", unit,
                            distribution_mismatch(pi, tasep_distribution(n, r, tasep_method::paths, o.caps), "chain", "paths"));
                    rec.add("chain-equals-tableaux", unit,
                            distribution_mismatch(pi, tasep_distribution(n, r, tasep_method::tableaux, o.caps), "chain",
                                                  "tableaux"));
                    if (n == 2) {
                        distribution reference{2, {rational(1, 5), rational(1, 5), rational(2, 5), rational(1, 5)}};
                        rec.add("reference-n2", unit, distribution_mismatch(reference, pi, "expected", "chain"));
                    }
                }
            }
        }
        for (const auto& [rates, pi] : solved) {
            const auto dual = solved.find({rates.second, rates.first});
            if (dual == solved.end()) continue;
            json witness = nullptr;
            for (std::uint64_t s = 0; s < pi.probability.size(); ++s) {
                const tasep_state u{n, s};
                const auto mirrored = reverse_complement(u);
                if (pi[u] != dual->second[mirrored]) {
                    witness = json{{"state", u.str()},
                                   {"p", to_string(pi[u])},
                                   {"dual_state", mirrored.str()},
                                   {"dual_p", to_string(dual->second[mirrored])}};
                    break;
                }
            }
            rec.add("duality", json{{"n", n}, {"alpha", to_string(rates.first)}, {"beta", to_string(rates.second)}},
                    std::move(witness));
        }
    }
}

inline void run_partition(recorder& rec, const verify_options& o)
{
    for (int n = 1; n <= o.max_n; ++n) {
        for (const auto& alpha : o.grid) {
            for (const auto& beta : o.grid) {
                const rate_params r{alpha, beta};
                const auto by_trees = partition_z(n, r, partition_method::tree_sum, o.caps);
                const auto closed = partition_z(n, r, partition_method::closed_form, o.caps);
                rec.add("tree-sum-equals-closed-form", json{{"n", n}, {"alpha", to_string(alpha)}, {"beta", to_string(beta)}},
                        by_trees == closed ? json(nullptr)
                                           : json{{"tree_sum", to_string(by_trees)}, {"closed_form", to_string(closed)}});
            }
        }
        const auto z = partition_z(n, {1, 1}, partition_method::closed_form, o.caps);
        const rational expected(catalan(n + 1));
        rec.add("unit-rates-catalan", json{{"n", n}},
                z == expected ? json(nullptr) : json{{"z", to_string(z)}, {"catalan", to_string(expected)}});
    }
}

} // namespace detail

/// Runs one named suite up to o.max_n. Throws std::invalid_argument for an
/// unknown suite name.
inline verify_report run_suite(std::string_view suite, const verify_options& o)
{
    verify_report report;
    report.suite = std::string(suite);
    report.max_n = o.max_n;
    detail::recorder rec(report);
    const auto start = std::chrono::steady_clock::now();
    if (suite == "counts") detail::run_counts(rec, o);
    else if (suite == "bijections") detail::run_bijections(rec, o);
    else if (suite == "pipelines") detail::run_pipelines(rec, o);
    else if (suite == "tasep") detail::run_tasep(rec, o);
    else if (suite == "partition") detail::run_partition(rec, o);
    else throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

/// The wall-clock duration is only included on request so that reports
/// stay byte-identical across runs.
inline json to_json(const verify_report& r, bool with_timing = false)
{
    json checks = json::array();
    for (const auto& c : r.checks) {
        json entry{{"name", c.name}, {"params", c.params}, {"pass", c.pass}};
        if (!c.pass) entry["witness"] = c.witness;
        checks.push_back(std::move(entry));
    }
    json out{{"suite", r.suite},
             {"max_n", r.max_n},
             {"checks", std::move(checks)},
             {"summary", json{{"total", r.checks.size()}, {"passed", r.passed()}, {"failed", r.failed()}}}};
    if (with_timing) out["duration_seconds"] = r.seconds;
    return out;
}

inline std::string to_text(const verify_report& r, bool with_timing = false)
{
    std::string out;
    for (const auto& c : r.checks) {
        out += (c.pass ? "PASS " : "FAIL ") + c.name + " " + c.params.dump();
        if (!c.pass) out += " witness=" + c.witness.dump();
        out += '\n';
    }
    out += "suite " + r.suite + ": " + std::to_string(r.passed()) + "/" + std::to_string(r.checks.size()) + " passed";
    if (with_timing) out += " in " + std::to_string(r.seconds) + " s";
    return out;
}

} // namespace cattab::cli
