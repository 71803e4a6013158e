#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "error.hpp"
#include "rational.hpp"

namespace cattab {

/// A word over {N, E}, read as a lattice path from the origin.
class lattice_path {
public:
    static constexpr char north = 'N';
    static constexpr char east = 'E';

    lattice_path() = default;

    explicit lattice_path(std::string steps) : steps_(std::move(steps))
    {
        for (char c : steps_) {
            if (c != north && c != east) {
                throw invalid_object("lattice path letter must be N or E, got '" + std::string(1, c) + "'");
            }
        }
    }

    const std::string& str() const noexcept { return steps_; }
    std::size_t size() const noexcept { return steps_.size(); }
    bool empty() const noexcept { return steps_.empty(); }
    char operator[](std::size_t i) const { return steps_[i]; }

    int north_count() const { return static_cast<int>(std::count(steps_.begin(), steps_.end(), north)); }
    int east_count() const { return static_cast<int>(size()) - north_count(); }

    /// (x, y) = (#E, #N).
    std::pair<int, int> endpoint() const { return {east_count(), north_count()}; }

    /// Height at which each E step is taken, left to right.
    std::vector<int> east_step_levels() const
    {
        std::vector<int> levels;
        int y = 0;
        for (char c : steps_) {
            if (c == north) ++y;
            else levels.push_back(y);
        }
        return levels;
    }

    /// Number of trailing N steps.
    int trailing_north_run() const
    {
        const auto last_east = steps_.find_last_of(east);
        return static_cast<int>(last_east == std::string::npos ? size() : size() - last_east - 1);
    }

    /// Inverse of east_step_levels: E steps at the given non-decreasing
    /// heights, closed by N steps up to `height`.
    static lattice_path from_east_levels(const std::vector<int>& levels, int height)
    {
        std::string steps;
        int y = 0;
        for (int level : levels) {
            if (level < y || level > height) throw std::logic_error("east levels are not a monotone staircase");
            steps.append(static_cast<std::size_t>(level - y), north);
            steps.push_back(east);
            y = level;
        }
        steps.append(static_cast<std::size_t>(height - y), north);
        return lattice_path(std::move(steps));
    }

    friend auto operator<=>(const lattice_path&, const lattice_path&) = default;

private:
    std::string steps_;
};

/// (omega, eta) with eta weakly below omega and the same endpoints.
struct path_pair {
    lattice_path omega;
    lattice_path eta;

    friend auto operator<=>(const path_pair&, const path_pair&) = default;
};

/// True when both paths share endpoints and eta never rises above omega.
/// Comparing N counts on every common prefix is the same as comparing the
/// heights on each anti-diagonal x + y = i.
inline bool weakly_below(const lattice_path& eta, const lattice_path& omega)
{
    if (eta.size() != omega.size() || eta.north_count() != omega.north_count()) return false;
    int eta_north = 0;
    int omega_north = 0;
    for (std::size_t i = 0; i < eta.size(); ++i) {
        eta_north += eta[i] == lattice_path::north;
        omega_north += omega[i] == lattice_path::north;
        if (eta_north > omega_north) return false;
    }
    return true;
}

inline std::optional<std::string> pair_violation(const path_pair& p)
{
    if (p.omega.size() != p.eta.size()) return "omega and eta have different lengths";
    if (p.omega.north_count() != p.eta.north_count()) return "omega and eta end at different points";
    if (!weakly_below(p.eta, p.omega)) return "eta crosses above omega";
    return std::nullopt;
}

inline void require_valid(const path_pair& p)
{
    if (auto why = pair_violation(p)) throw invalid_object("invalid path pair: " + *why);
}

/// Reference oracle: tries every placement of the N steps and keeps those
/// weakly below omega.
inline count_type count_paths_below(const lattice_path& omega, const resource_caps& caps = {})
{
    check_cap(static_cast<int>(omega.size()), caps.max_path_length, "path length");
    const auto length = static_cast<unsigned>(omega.size());
    const int norths = omega.north_count();
    count_type count = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << length); ++mask) {
        if (std::popcount(mask) != norths) continue;
        std::string steps(length, lattice_path::east);
        for (unsigned i = 0; i < length; ++i)
            if (mask & (std::uint32_t{1} << i)) steps[i] = lattice_path::north;
        if (weakly_below(lattice_path(std::move(steps)), omega)) ++count;
    }
    return count;
}

/// Every eta weakly below omega, in lexicographic order (E < N).
inline std::vector<lattice_path> paths_below(const lattice_path& omega)
{
    std::vector<lattice_path> out;
    std::string prefix;
    const int total_north = omega.north_count();
    // omega_north[i] = #N in omega's first i steps
    std::vector<int> omega_north(omega.size() + 1, 0);
    for (std::size_t i = 0; i < omega.size(); ++i)
        omega_north[i + 1] = omega_north[i] + (omega[i] == lattice_path::north);

    auto extend = [&](auto&& self, int north_used) -> void {
        const auto i = prefix.size();
        if (i == omega.size()) {
            out.emplace_back(prefix);
            return;
        }
        const int remaining = static_cast<int>(omega.size() - i);
        if (total_north - north_used < remaining) {
            prefix.push_back(lattice_path::east);
            self(self, north_used);
            prefix.pop_back();
        }
        if (north_used < total_north && north_used + 1 <= omega_north[i + 1]) {
            prefix.push_back(lattice_path::north);
            self(self, north_used + 1);
            prefix.pop_back();
        }
    };
    extend(extend, 0);
    return out;
}

/// Row lengths of the region between omega and the lowest path E^x N^y with
/// the same endpoints, shortest row (the one next to omega's end) first.
inline std::vector<int> staircase_rows(const lattice_path& omega)
{
    const int width = omega.east_count();
    std::vector<int> rows;
    int x = 0;
    for (char c : omega.str()) {
        if (c == lattice_path::east) ++x;
        else rows.push_back(width - x);
    }
    std::reverse(rows.begin(), rows.end());
    return rows;
}

namespace detail {

// Fraction-free Gaussian elimination.
inline big_int bareiss_determinant(std::vector<std::vector<big_int>> m)
{
    const std::size_t size = m.size();
    if (size == 0) return 1;
    big_int previous = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < size; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < size && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == size) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < size; ++i) {
            for (std::size_t j = k + 1; j < size; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous;
            }
        }
        previous = m[k][k];
    }
    return sign * m[size - 1][size - 1];
}

} // namespace detail

/// Number of paths weakly below omega as det(binom(lambda_i + 1, j - i + 1)).
inline count_type narayana_count(const lattice_path& omega)
{
    const auto rows = staircase_rows(omega);
    const std::size_t k = rows.size();
    std::vector<std::vector<big_int>> matrix(k, std::vector<big_int>(k));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            const int top = rows[i] + 1;
            const int bottom = static_cast<int>(j) - static_cast<int>(i) + 1;
            matrix[i][j] = binomial(top, bottom);
        }
    }
    const big_int det = detail::bareiss_determinant(std::move(matrix));
    return det.convert_to<count_type>();
}

} // namespace cattab
