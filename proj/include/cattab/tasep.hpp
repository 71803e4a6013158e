#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bijections.hpp"
#include "binary_tree.hpp"
#include "combinatorics.hpp"
#include "error.hpp"
#include "lattice_path.hpp"
#include "rational.hpp"
#include "tableau.hpp"

namespace cattab {

/// Occupancy word of a strip of `length` cells, cell 1 leftmost. Bit
/// (length - i) of `bits` is cell i, so `bits` is the binary reading of
/// the word and states sort the same way as their strings.
struct tasep_state {
    int length = 0;
    std::uint64_t bits = 0;

    bool occupied(int cell) const { return (bits >> (length - cell)) & 1U; }

    static tasep_state parse(const std::string& word)
    {
        if (word.size() > 63) throw invalid_object("TASEP state too long");
        tasep_state s{static_cast<int>(word.size()), 0};
        for (char c : word) {
            if (c != '0' && c != '1') throw invalid_object("TASEP state letters must be 0 or 1");
            s.bits = (s.bits << 1) | static_cast<std::uint64_t>(c == '1');
        }
        return s;
    }

    std::string str() const
    {
        std::string out;
        for (int cell = 1; cell <= length; ++cell) out.push_back(occupied(cell) ? '1' : '0');
        return out;
    }

    friend auto operator<=>(const tasep_state&, const tasep_state&) = default;
};

/// Occupied -> N, empty -> E.
inline lattice_path state_to_path(const tasep_state& u)
{
    std::string steps;
    for (int cell = 1; cell <= u.length; ++cell) steps.push_back(u.occupied(cell) ? lattice_path::north : lattice_path::east);
    return lattice_path(std::move(steps));
}

/// Reverse the word and swap occupied/empty.
inline tasep_state reverse_complement(const tasep_state& u)
{
    tasep_state out{u.length, 0};
    for (int cell = u.length; cell >= 1; --cell) out.bits = (out.bits << 1) | static_cast<std::uint64_t>(!u.occupied(cell));
    return out;
}

struct rate_params {
    rational alpha = 1;
    rational beta = 1;
};

/// Chain construction needs both rates in (0, 1].
inline void require_chain_rates(const rate_params& r)
{
    if (r.alpha <= 0 || r.alpha > 1 || r.beta <= 0 || r.beta > 1) {
        throw std::invalid_argument("chain rates must lie in (0, 1]");
    }
}

inline void require_positive_rates(const rate_params& r)
{
    if (r.alpha <= 0 || r.beta <= 0) throw std::invalid_argument("rates must be positive");
}

/// Exact transition matrix over the 2^n states in binary order.
struct markov_chain {
    int size = 0;
    rate_params rates;
    std::vector<std::vector<rational>> transition;

    std::size_t state_count() const { return transition.size(); }
};

/// Probability vector indexed by tasep_state::bits.
struct distribution {
    int size = 0;
    std::vector<rational> probability;

    const rational& operator[](const tasep_state& u) const { return probability.at(u.bits); }
    friend bool operator==(const distribution&, const distribution&) = default;
};

/// Picks one of the n + 1 walls uniformly. An internal wall moves a particle
/// right when it can; the left border injects with probability alpha into
/// an empty first cell, the right border ejects with probability beta from
/// an occupied last cell. Whatever is left is a self-loop.
inline markov_chain build_chain(int n, const rate_params& r, const resource_caps& caps = {})
{
    if (n < 1) throw std::invalid_argument("build_chain: strip needs at least one cell");
    check_cap(n, caps.max_chain_size, "chain size");
    require_chain_rates(r);
    const std::size_t states = std::size_t{1} << n;
    markov_chain chain{n, r, std::vector<std::vector<rational>>(states, std::vector<rational>(states))};
    const rational wall(1, n + 1);
    for (std::uint64_t s = 0; s < states; ++s) {
        const tasep_state u{n, s};
        auto& row = chain.transition[s];
        auto bit_of = [n](int cell) { return std::uint64_t{1} << (n - cell); };
        if (!u.occupied(1)) row[s | bit_of(1)] += wall * r.alpha;
        for (int cell = 1; cell < n; ++cell) {
            if (u.occupied(cell) && !u.occupied(cell + 1)) row[(s & ~bit_of(cell)) | bit_of(cell + 1)] += wall;
        }
        if (u.occupied(n)) row[s & ~bit_of(n)] += wall * r.beta;
        rational moving = 0;
        for (const auto& p : row) moving += p;
        row[s] += 1 - moving;
    }
    return chain;
}

namespace detail {

// Solves a x = b exactly; a is square and non-singular.
inline std::vector<rational> solve_exact(std::vector<std::vector<rational>> a, std::vector<rational> b)
{
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw std::runtime_error("stationary: singular balance system (reducible chain?)");
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        const rational inv = 1 / a[col][col];
        for (std::size_t j = col; j < n; ++j)
            if (a[col][j] != 0) a[col][j] *= inv;
        b[col] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            const rational factor = a[i][col];
            for (std::size_t j = col; j < n; ++j)
                if (a[col][j] != 0) a[i][j] -= factor * a[col][j];
            b[i] -= factor * b[col];
        }
    }
    return b;
}

} // namespace detail

/// The unique pi with pi P = pi and sum 1, by exact elimination on the
/// balance equations with one of them replaced by the normalisation.
inline distribution stationary(const markov_chain& c)
{
    const std::size_t n = c.state_count();
    std::vector<std::vector<rational>> a(n, std::vector<rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = c.transition[j][i] - (i == j ? 1 : 0);
    std::vector<rational> b(n, rational(0));
    for (auto& x : a.back()) x = 1;
    b.back() = 1;
    return {c.size, detail::solve_exact(std::move(a), std::move(b))};
}

/// pi P - pi, entry by entry.
inline std::vector<rational> balance_residual(const markov_chain& c, const distribution& pi)
{
    const std::size_t n = c.state_count();
    std::vector<rational> residual(n);
    for (std::size_t j = 0; j < n; ++j) {
        rational flow = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (c.transition[i][j] != 0) flow += pi.probability[i] * c.transition[i][j];
        residual[j] = flow - pi.probability[j];
    }
    return residual;
}

struct simulation_options {
    std::uint64_t steps = 0;
    std::uint64_t burn_in = 0;
    std::uint64_t seed = 0;
    std::uint64_t start_state = 0;
};

/// Visit counts of a sample path: the state after burn-in plus the state
/// after each further step.
struct empirical_distribution {
    int size = 0;
    std::vector<std::uint64_t> visits;
    std::uint64_t samples = 0;

    double frequency(std::uint64_t state) const { return static_cast<double>(visits.at(state)) / static_cast<double>(samples); }
};

/// Runs the wall dynamics directly (not through the matrix); deterministic
/// for a given seed.
inline empirical_distribution simulate(const markov_chain& c, const simulation_options& options)
{
    const int n = c.size;
    const double alpha = c.rates.alpha.convert_to<double>();
    const double beta = c.rates.beta.convert_to<double>();
    std::mt19937_64 engine(options.seed);
    std::uniform_int_distribution<int> pick_wall(0, n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    std::uint64_t s = options.start_state;
    auto bit_of = [n](int cell) { return std::uint64_t{1} << (n - cell); };
    auto advance = [&] {
        const int wall = pick_wall(engine);
        const tasep_state u{n, s};
        if (wall == 0) {
            if (!u.occupied(1) && coin(engine) < alpha) s |= bit_of(1);
        } else if (wall == n) {
            if (u.occupied(n) && coin(engine) < beta) s &= ~bit_of(n);
        } else if (u.occupied(wall) && !u.occupied(wall + 1)) {
            s = (s & ~bit_of(wall)) | bit_of(wall + 1);
        }
    };
    for (std::uint64_t i = 0; i < options.burn_in; ++i) advance();

    empirical_distribution out{n, std::vector<std::uint64_t>(c.state_count(), 0), 0};
    ++out.visits[s];
    for (std::uint64_t i = 0; i < options.steps; ++i) {
        advance();
        ++out.visits[s];
    }
    out.samples = options.steps + 1;
    return out;
}

inline double total_variation(const empirical_distribution& sample, const distribution& exact)
{
    double sum = 0;
    for (std::uint64_t s = 0; s < exact.probability.size(); ++s) {
        sum += std::abs(sample.frequency(s) - exact.probability[s].convert_to<double>());
    }
    return sum / 2;
}

/// alpha = beta = 1: (number of eta below omega(u)) / C_{n+1}.
inline rational prob_paths(const tasep_state& u, const resource_caps& caps = {})
{
    return rational(count_paths_below(state_to_path(u), caps), catalan(u.length + 1));
}

/// alpha = beta = 1: (number of index n+1 tableaux with profile omega(u)) / C_{n+1}.
inline rational prob_tableaux(const tasep_state& u, const resource_caps& caps = {})
{
    const auto omega = state_to_path(u);
    count_type matches = 0;
    for (const auto& t : enumerate_tableaux(u.length + 1, caps))
        if (profile(t) == omega) ++matches;
    return rational(matches, catalan(u.length + 1));
}

/// alpha^-lb * beta^-rb with lb, rb the branch lengths minus one.
inline rational tree_weight(const binary_tree& b, const rate_params& r)
{
    return ipow(r.alpha, -left_branch_edges(b)) * ipow(r.beta, -right_branch_edges(b));
}

/// alpha^-f * beta^-g: f shared horizontal unit edges, g trailing N steps of eta.
inline rational pair_weight(const path_pair& p, const rate_params& r)
{
    require_valid(p);
    const auto omega_levels = p.omega.east_step_levels();
    const auto eta_levels = p.eta.east_step_levels();
    int contacts = 0;
    for (std::size_t j = 0; j < omega_levels.size(); ++j) contacts += omega_levels[j] == eta_levels[j];
    return ipow(r.alpha, -contacts) * ipow(r.beta, -p.eta.trailing_north_run());
}

enum class partition_method { tree_sum, closed_form };

/// Z_n as the sum of tree weights over all (n+1)-vertex trees, or by the
/// ballot-number closed form. The closed form's quotient
/// (a^{i+1} - b^{i+1}) / (a - b) with a = 1/alpha, b = 1/beta is expanded
/// into the homogeneous sum so alpha = beta needs no special case.
inline rational partition_z(int n, const rate_params& r, partition_method method, const resource_caps& caps = {})
{
    if (n < 1) throw std::invalid_argument("partition_z: n must be positive");
    require_positive_rates(r);
    rational z = 0;
    if (method == partition_method::tree_sum) {
        for (const auto& b : enumerate_trees(n + 1, caps)) z += tree_weight(b, r);
        return z;
    }
    const rational a = 1 / r.alpha;
    const rational b = 1 / r.beta;
    for (int i = 1; i <= n; ++i) {
        const rational ballot = rational(i, 2 * n - i) * rational(binomial(2 * n - i, n));
        rational homogeneous = 0;
        for (int k = 0; k <= i; ++k) homogeneous += ipow(a, k) * ipow(b, i - k);
        z += ballot * homogeneous;
    }
    return z;
}

/// Sum of tree weights over (n+1)-vertex trees whose canopy path is omega(u), over Z_n.
inline rational prob_trees(const tasep_state& u, const rate_params& r, const resource_caps& caps = {})
{
    require_positive_rates(r);
    const auto omega = state_to_path(u);
    rational mass = 0;
    rational z = 0;
    for (const auto& b : enumerate_trees(u.length + 1, caps)) {
        const auto w = tree_weight(b, r);
        z += w;
        if (canopy_path(b) == omega) mass += w;
    }
    return mass / z;
}

/// Sum of pair weights over eta below omega(u), over Z_n.
inline rational prob_pairs(const tasep_state& u, const rate_params& r, const resource_caps& caps = {})
{
    require_positive_rates(r);
    const auto omega = state_to_path(u);
    check_cap(static_cast<int>(omega.size()), caps.max_path_length, "path length");
    rational mass = 0;
    for (const auto& eta : paths_below(omega)) mass += pair_weight({omega, eta}, r);
    return mass / partition_z(u.length, r, partition_method::closed_form, caps);
}

/// Whole-distribution forms of the evaluators above, sharing one pass over
/// the underlying objects.
enum class tasep_method { chain, trees, pairs, paths, tableaux };

inline const char* to_string(tasep_method m)
{
    switch (m) {
    case tasep_method::chain: return "chain";
    case tasep_method::trees: return "trees";
    case tasep_method::pairs: return "pairs";
    case tasep_method::paths: return "paths";
    case tasep_method::tableaux: return "tableaux";
    }
    return "unknown";
}

inline distribution tasep_distribution(int n, const rate_params& r, tasep_method method, const resource_caps& caps = {})
{
    if (n < 1) throw std::invalid_argument("tasep_distribution: n must be positive");
    const std::size_t states = std::size_t{1} << n;
    distribution d{n, std::vector<rational>(states)};
    auto state_of = [](const lattice_path& omega) {
        std::uint64_t bits = 0;
        for (char c : omega.str()) bits = (bits << 1) | static_cast<std::uint64_t>(c == lattice_path::north);
        return bits;
    };
    const bool unit_rates = r.alpha == 1 && r.beta == 1;
    switch (method) {
    case tasep_method::chain:
        return stationary(build_chain(n, r, caps));
    case tasep_method::trees: {
        require_positive_rates(r);
        rational z = 0;
        for (const auto& b : enumerate_trees(n + 1, caps)) {
            const auto w = tree_weight(b, r);
            z += w;
            d.probability[state_of(canopy_path(b))] += w;
        }
        for (auto& p : d.probability) p /= z;
        return d;
    }
    case tasep_method::pairs:
        for (std::uint64_t s = 0; s < states; ++s) d.probability[s] = prob_pairs({n, s}, r, caps);
        return d;
    case tasep_method::paths:
        if (!unit_rates) throw std::invalid_argument("the paths formula holds only for alpha = beta = 1");
        for (std::uint64_t s = 0; s < states; ++s) d.probability[s] = prob_paths({n, s}, caps);
        return d;
    case tasep_method::tableaux: {
        if (!unit_rates) throw std::invalid_argument("the tableaux formula holds only for alpha = beta = 1");
        for (const auto& t : enumerate_tableaux(n + 1, caps)) d.probability[state_of(profile(t))] += 1;
        for (auto& p : d.probability) p /= catalan(n + 1);
        return d;
    }
    }
    throw std::logic_error("unknown tasep method");
}

} // namespace cattab
