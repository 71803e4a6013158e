// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include <cattab/cattab.hpp>

using namespace cattab;

namespace {

struct outcome {
    bool pass = true;
    std::string note;
};

const std::vector<rational>& grid()
{
    static const std::vector<rational> g{rational(1, 4), rational(1, 3), rational(1, 2), rational(2, 3), rational(1)};
    return g;
}

std::string fail_at(const std::string& what, int n)
{
    return what + " at n = " + std::to_string(n);
}

outcome catalan_counts()
{
    const auto start = std::chrono::steady_clock::now();
    for (int n = 1; n <= 10; ++n) {
        if (enumerate_tableaux(n).size() != catalan(n)) return {false, fail_at("tableau count", n)};
        if (enumerate_trees(n).size() != catalan(n)) return {false, fail_at("tree count", n)};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (enumerate_trees(10).size() != 16796) return {false, "C_10 mismatch"};
    std::ostringstream note;
    note << "n = 1..10 in " << seconds << " s";
    return {seconds < 30.0, note.str()};
}

outcome phi_bijection()
{
    for (int n = 1; n <= 10; ++n) {
        std::set<binary_tree> image;
        for (const auto& t : enumerate_tableaux(n)) {
            const auto b = phi(t);
            if (!image.insert(b).second) return {false, fail_at("phi not injective", n)};
            if (phi_inverse(b) != t) return {false, fail_at("phi_inverse(phi(T)) != T", n)};
        }
        for (const auto& b : enumerate_trees(n)) {
            if (!image.count(b)) return {false, fail_at("phi not surjective", n)};
            if (phi(phi_inverse(b)) != b) return {false, fail_at("phi(phi_inverse(B)) != B", n)};
        }
    }
    return {true, "n = 1..10"};
}

outcome canopy_profile()
{
    for (int n = 1; n <= 10; ++n)
        for (const auto& t : enumerate_tableaux(n))
            if (canopy_path(phi(t)) != profile(t)) return {false, fail_at("canopy != profile", n)};
    return {true, "n = 1..10"};
}

outcome branch_statistics()
{
    for (int n = 1; n <= 10; ++n) {
        for (const auto& t : enumerate_tableaux(n)) {
            const auto b = phi(t);
            if (left_branch_edges(b) != ones_in_first_row(t)) return {false, fail_at("lb mismatch", n)};
            if (right_branch_edges(b) != unrestricted_row_count(t) - 1) return {false, fail_at("rb mismatch", n)};
        }
    }
    return {true, "n = 1..10"};
}

outcome narayana()
{
    if (narayana_count(lattice_path("NENE")) != 5) return {false, "NENE does not give 5"};
    std::size_t checked = 0;
    for (int length = 0; length <= 12; ++length) {
        for (std::uint32_t mask = 0; mask < (1U << length); ++mask) {
            std::string s;
            for (int i = 0; i < length; ++i) s.push_back((mask >> i) & 1U ? 'N' : 'E');
            const lattice_path omega(s);
            if (narayana_count(omega) != count_paths_below(omega)) return {false, "mismatch at " + s};
            ++checked;
        }
    }
    return {true, std::to_string(checked) + " paths, NENE -> 5"};
}

outcome unit_rate_agreement()
{
    for (int n = 1; n <= 6; ++n) {
        const auto pi = tasep_distribution(n, {1, 1}, tasep_method::chain);
        if (tasep_distribution(n, {1, 1}, tasep_method::paths) != pi) return {false, fail_at("paths formula", n)};
        if (tasep_distribution(n, {1, 1}, tasep_method::tableaux) != pi) return {false, fail_at("tableaux formula", n)};
    }
    const auto two = tasep_distribution(2, {1, 1}, tasep_method::chain);
    const std::vector<rational> expected{rational(1, 5), rational(1, 5), rational(2, 5), rational(1, 5)};
    if (two.probability != expected) return {false, "n = 2 is not (1/5, 1/5, 2/5, 1/5)"};
    return {true, "n = 1..6, n = 2 gives (1/5, 1/5, 2/5, 1/5)"};
}

outcome weighted_agreement()
{
    const auto start = std::chrono::steady_clock::now();
    for (int n = 1; n <= 5; ++n) {
        for (const auto& a : grid()) {
            for (const auto& b : grid()) {
                const rate_params r{a, b};
                const auto pi = tasep_distribution(n, r, tasep_method::chain);
                const std::string where = " at n = " + std::to_string(n) + ", alpha = " + to_string(a) + ", beta = " + to_string(b);
                if (tasep_distribution(n, r, tasep_method::trees) != pi) return {false, "tree weights" + where};
                if (tasep_distribution(n, r, tasep_method::pairs) != pi) return {false, "pair weights" + where};
            }
        }
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream note;
    note << "n = 1..5 on a 5x5 grid in " << seconds << " s";
    return {seconds < 60.0, note.str()};
}

outcome partition_function()
{
    for (int n = 1; n <= 10; ++n) {
        for (const auto& a : grid()) {
            for (const auto& b : grid()) {
                if (partition_z(n, {a, b}, partition_method::tree_sum) != partition_z(n, {a, b}, partition_method::closed_form)) {
                    return {false, "tree sum != closed form at n = " + std::to_string(n) + ", alpha = " + to_string(a) +
                                       ", beta = " + to_string(b)};
                }
            }
        }
        if (partition_z(n, {1, 1}, partition_method::closed_form) != rational(catalan(n + 1))) {
            return {false, fail_at("Z != C_{n+1} at unit rates", n)};
        }
    }
    return {true, "n = 1..10 on a 5x5 grid"};
}

outcome pipelines()
{
    for (int n = 1; n <= 9; ++n) {
        for (const auto& b : enumerate_trees(n)) {
            if (polyomino_to_pair(dyck_to_polyomino(tree_to_dyck(b))) != pair_of_paths_direct(b)) {
                return {false, "Dyck route differs for " + to_bracket_string(b)};
            }
        }
        for (const auto& t : enumerate_tableaux(n)) {
            const auto b = phi(t);
            const auto direct = tableau_to_pair_direct(t);
            if (direct != pair_of_paths_direct(b)) return {false, fail_at("tableau rule differs", n)};
            if (direct != polyomino_to_pair(dyck_to_polyomino(tree_to_dyck(b)))) return {false, fail_at("routes differ", n)};
        }
    }
    return {true, "n = 1..9"};
}

outcome duality()
{
    for (int n = 1; n <= 6; ++n) {
        std::map<std::pair<rational, rational>, distribution> solved;
        for (const auto& a : grid())
            for (const auto& b : grid()) solved.emplace(std::pair{a, b}, tasep_distribution(n, {a, b}, tasep_method::chain));
        for (const auto& [rates, pi] : solved) {
            const auto& dual = solved.at({rates.second, rates.first});
            for (std::uint64_t s = 0; s < pi.probability.size(); ++s) {
                const tasep_state u{n, s};
                if (pi[u] != dual[reverse_complement(u)]) return {false, "state " + u.str() + fail_at("", n)};
            }
        }
    }
    return {true, "n = 1..6 on a 5x5 grid"};
}

outcome monte_carlo()
{
    const auto chain = build_chain(3, {1, 1});
    const auto sample = simulate(chain, {1000000, 0, 20240601, 0});
    const double tv = total_variation(sample, stationary(chain));
    std::ostringstream note;
    note << "n = 3, 10^6 steps, seed 20240601, total variation " << tv;
    return {tv <= 0.01, note.str()};
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<outcome()>>> criteria{
        {"AC1 catalan counts", catalan_counts},
        {"AC2 phi is a bijection", phi_bijection},
        {"AC3 canopy equals profile", canopy_profile},
        {"AC4 branch statistics", branch_statistics},
        {"AC5 narayana determinant", narayana},
        {"AC6 unit-rate stationary agreement", unit_rate_agreement},
        {"AC7 weighted stationary agreement", weighted_agreement},
        {"AC8 partition function", partition_function},
        {"AC9 pipeline equivalence", pipelines},
        {"AC10 duality", duality},
        {"AC11 monte carlo sanity", monte_carlo},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.note.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
