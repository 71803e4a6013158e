#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "lattice_path.hpp"

namespace cattab {

// Drawing convention: the diagram is right-justified, rows are numbered
// from the bottom (row 1 is the longest) and columns from the right
// (column 1 is the tallest). Both indices start at 1. Because the longest
// row is at the bottom, column c occupies rows 1 .. height(c).

/// A Ferrers shape inside a rows x (index - rows) box.
struct shape {
    int index = 1;
    int rows = 1;
    std::vector<int> parts;  // bottom row first, zero-length rows omitted

    int columns() const { return index - rows; }

    /// Number of cells in column c (1-based from the right).
    int column_height(int c) const
    {
        int h = 0;
        while (h < static_cast<int>(parts.size()) && parts[static_cast<std::size_t>(h)] >= c) ++h;
        return h;
    }

    friend auto operator<=>(const shape&, const shape&) = default;
};

inline std::optional<std::string> shape_violation(const shape& s)
{
    if (s.index < 1) return "index must be positive";
    if (s.rows < 0 || s.rows > s.index) return "rows must lie in [0, index]";
    if (static_cast<int>(s.parts.size()) > s.rows) return "more parts than rows";
    for (std::size_t i = 0; i < s.parts.size(); ++i) {
        if (s.parts[i] < 1 || s.parts[i] > s.columns()) return "part out of range [1, index - rows]";
        if (i > 0 && s.parts[i] > s.parts[i - 1]) return "parts must be weakly decreasing from the bottom row";
    }
    if (s.columns() >= 1 && (s.parts.empty() || s.parts.front() != s.columns())) {
        return "bottom row must span all index - rows columns";
    }
    return std::nullopt;
}

using cell_bit = std::uint8_t;

/// filling[r][c]: row r from the bottom, column c from the right (0-based
/// here, 1-based in reports). filling[r].size() == shape.parts[r].
struct catalan_tableau {
    cattab::shape shape;
    std::vector<std::vector<cell_bit>> filling;

    int index() const { return shape.index; }
    int rows() const { return shape.rows; }
    int columns() const { return shape.columns(); }

    /// 1-based accessor; zero outside the shape.
    cell_bit at(int row, int column) const
    {
        if (row < 1 || row > static_cast<int>(filling.size())) return 0;
        const auto& r = filling[static_cast<std::size_t>(row - 1)];
        if (column < 1 || column > static_cast<int>(r.size())) return 0;
        return r[static_cast<std::size_t>(column - 1)];
    }

    friend auto operator<=>(const catalan_tableau&, const catalan_tableau&) = default;
};

/// Builds a tableau from bottom-first rows (each right-to-left), deriving
/// the shape. Trailing empty rows may be given or omitted.
inline catalan_tableau make_tableau(int index, int rows, std::vector<std::vector<cell_bit>> filling)
{
    while (!filling.empty() && filling.back().empty()) filling.pop_back();
    catalan_tableau t;
    t.shape.index = index;
    t.shape.rows = rows;
    for (const auto& r : filling) t.shape.parts.push_back(static_cast<int>(r.size()));
    t.filling = std::move(filling);
    return t;
}

enum class tableau_violation {
    none,
    bad_shape,
    column_without_one,
    column_with_multiple_ones,
    forbidden_zero,
};

inline const char* to_string(tableau_violation v)
{
    switch (v) {
    case tableau_violation::none: return "none";
    case tableau_violation::bad_shape: return "bad-shape";
    case tableau_violation::column_without_one: return "column-without-one";
    case tableau_violation::column_with_multiple_ones: return "column-with-multiple-ones";
    case tableau_violation::forbidden_zero: return "forbidden-zero";
    }
    return "unknown";
}

struct validity_report {
    tableau_violation kind = tableau_violation::none;
    int row = 0;     // 1-based, 0 when not applicable
    int column = 0;  // 1-based, 0 when not applicable
    std::string detail;

    bool valid() const { return kind == tableau_violation::none; }
};

/// Checks the shape, then one 1 per column, then the hook rule: no 0 with
/// a 1 below it in its column and a 1 to its right in its row.
inline validity_report validate_tableau(const catalan_tableau& t)
{
    if (auto why = shape_violation(t.shape)) return {tableau_violation::bad_shape, 0, 0, *why};
    if (t.filling.size() != t.shape.parts.size()) {
        return {tableau_violation::bad_shape, 0, 0, "filling has a different number of rows than the shape"};
    }
    for (std::size_t r = 0; r < t.filling.size(); ++r) {
        if (static_cast<int>(t.filling[r].size()) != t.shape.parts[r]) {
            return {tableau_violation::bad_shape, static_cast<int>(r + 1), 0, "row length differs from its part"};
        }
        for (cell_bit b : t.filling[r])
            if (b > 1) return {tableau_violation::bad_shape, static_cast<int>(r + 1), 0, "cells must hold 0 or 1"};
    }
    for (int c = 1; c <= t.columns(); ++c) {
        int ones = 0;
        for (int r = 1; r <= t.shape.column_height(c); ++r) ones += t.at(r, c);
        if (ones == 0) return {tableau_violation::column_without_one, 0, c, "column has no 1"};
        if (ones > 1) return {tableau_violation::column_with_multiple_ones, 0, c, "column has several 1s"};
    }
    const int height = static_cast<int>(t.filling.size());
    for (int r = 1; r <= height; ++r) {
        const int length = t.shape.parts[static_cast<std::size_t>(r - 1)];
        bool one_to_the_right = false;
        for (int c = 1; c <= length; ++c) {
            if (t.at(r, c) == 1) {
                one_to_the_right = true;
                continue;
            }
            if (!one_to_the_right) continue;
            for (int below = 1; below < r; ++below) {
                if (t.at(below, c) == 1) {
                    return {tableau_violation::forbidden_zero, r, c, "0 with a 1 below it and a 1 to its right"};
                }
            }
        }
    }
    return {};
}

inline void require_valid(const catalan_tableau& t)
{
    const auto report = validate_tableau(t);
    if (!report.valid()) {
        throw invalid_object(std::string("invalid Catalan tableau (") + to_string(report.kind) + " at row " +
                             std::to_string(report.row) + ", column " + std::to_string(report.column) +
                             "): " + report.detail);
    }
}

/// The NW border of the shape inside its box, from the SW corner: one N per
/// row and one E per column, `index` steps in all.
inline lattice_path border(const shape& s)
{
    std::string steps;
    for (int r = 0; r < s.rows; ++r) {
        const int here = r < static_cast<int>(s.parts.size()) ? s.parts[static_cast<std::size_t>(r)] : 0;
        const int next = r + 1 < static_cast<int>(s.parts.size()) ? s.parts[static_cast<std::size_t>(r + 1)] : 0;
        steps.push_back(lattice_path::north);
        steps.append(static_cast<std::size_t>(here - next), lattice_path::east);
    }
    return lattice_path(std::move(steps));
}

/// The border with its first step (always N) deleted.
inline lattice_path profile(const catalan_tableau& t)
{
    const auto full = border(t.shape);
    if (full.empty()) return {};
    return lattice_path(full.str().substr(1));
}

/// Count of 1s in the bottom row.
inline int ones_in_first_row(const catalan_tableau& t)
{
    if (t.filling.empty()) return 0;
    int ones = 0;
    for (cell_bit b : t.filling.front()) ones += b;
    return ones;
}

/// A 0 is restricted when some 1 lies below it in its column. Counts the
/// box rows (empty rows included) holding no restricted entry.
inline int unrestricted_row_count(const catalan_tableau& t)
{
    int unrestricted = 0;
    for (int r = 1; r <= t.rows(); ++r) {
        const int length = r <= static_cast<int>(t.shape.parts.size()) ? t.shape.parts[static_cast<std::size_t>(r - 1)] : 0;
        bool restricted = false;
        for (int c = 1; c <= length && !restricted; ++c) {
            if (t.at(r, c) != 0) continue;
            for (int below = 1; below < r; ++below) {
                if (t.at(below, c) == 1) {
                    restricted = true;
                    break;
                }
            }
        }
        if (!restricted) ++unrestricted;
    }
    return unrestricted;
}

/// Every Catalan tableau of index n: rows ascending, shapes grown depth
/// first from the bottom row, fillings column by column from the right.
inline std::vector<catalan_tableau> enumerate_tableaux(int n, const resource_caps& caps = {})
{
    if (n < 1) throw std::invalid_argument("enumerate_tableaux: index must be positive");
    check_cap(n, caps.max_enumeration_size, "tableau index");
    std::vector<catalan_tableau> out;

    auto fill = [&](const shape& s) {
        const int width = s.columns();
        const int height = static_cast<int>(s.parts.size());
        catalan_tableau t;
        t.shape = s;
        for (int p : s.parts) t.filling.emplace_back(static_cast<std::size_t>(p), cell_bit{0});
        std::vector<int> heights(static_cast<std::size_t>(width) + 1);
        for (int c = 1; c <= width; ++c) heights[static_cast<std::size_t>(c)] = s.column_height(c);
        // ones_right[r] counts 1s already placed in row r (columns to the right)
        std::vector<int> ones_right(static_cast<std::size_t>(height) + 1, 0);

        auto place = [&](auto&& self, int c) -> void {
            if (c > width) {
                out.push_back(t);
                return;
            }
            const int h = heights[static_cast<std::size_t>(c)];
            // The 1 must sit at or above every row of this column that already
            // has a 1 further right, otherwise a forbidden 0 appears.
            int lowest = 1;
            for (int r = h; r >= 1; --r) {
                if (ones_right[static_cast<std::size_t>(r)] > 0) {
                    lowest = r;
                    break;
                }
            }
            for (int r = lowest; r <= h; ++r) {
                t.filling[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] = 1;
                ++ones_right[static_cast<std::size_t>(r)];
                self(self, c + 1);
                --ones_right[static_cast<std::size_t>(r)];
                t.filling[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] = 0;
            }
        };
        place(place, 1);
    };

    for (int k = 1; k <= n; ++k) {
        shape s{n, k, {}};
        const int width = n - k;
        if (width == 0) {
            fill(s);
            continue;
        }
        s.parts.push_back(width);
        auto grow = [&](auto&& self, int max_part) -> void {
            fill(s);
            if (static_cast<int>(s.parts.size()) == k) return;
            for (int p = max_part; p >= 1; --p) {
                s.parts.push_back(p);
                self(self, p);
                s.parts.pop_back();
            }
        };
        grow(grow, width);
    }
    return out;
}

} // namespace cattab
