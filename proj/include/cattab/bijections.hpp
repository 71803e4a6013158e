#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "binary_tree.hpp"
#include "error.hpp"
#include "lattice_path.hpp"
#include "tableau.hpp"

namespace cattab {

namespace detail {

// Mutable tree used while running the tableau <-> tree algorithms.
struct tree_arena {
    struct slot {
        int left = -1;
        int right = -1;
    };
    std::vector<slot> slots;

    int add()
    {
        slots.push_back({});
        return static_cast<int>(slots.size()) - 1;
    }

    int load(const binary_tree& b)
    {
        if (b.empty()) return -1;
        const int v = add();
        const int l = load(b.left());
        const int r = load(b.right());
        slots[static_cast<std::size_t>(v)] = {l, r};
        return v;
    }

    binary_tree freeze(int v) const
    {
        if (v < 0) return {};
        const auto& s = slots[static_cast<std::size_t>(v)];
        return binary_tree::node(freeze(s.left), freeze(s.right));
    }
};

} // namespace detail

/// Working state of the tableau -> tree construction: a tree together with
/// a tail path hanging off a vertex of its right branch. Tail letters use
/// N for a NE step and E for a SE step. `tree` still carries the auxiliary
/// root that the final step removes.
struct tailed_binary_tree {
    binary_tree tree;
    lattice_path tail;
    int attachment = 0;  // position along the right branch, root = 0
};

struct phi_step {
    enum class action { delete_row, delete_column };
    action kind;
    int corner_row;      // row of the corner cell in the running tableau
    int corner_column;   // its column, always the leftmost one
    int tau_length = 0;  // NE steps grafted by a column deletion
    tailed_binary_tree after;
};

namespace detail {

struct phi_run {
    binary_tree result;
    std::vector<phi_step> steps;
};

inline phi_run run_phi(const catalan_tableau& t, bool record)
{
    require_valid(t);
    auto rows = t.filling;
    rows.resize(static_cast<std::size_t>(t.rows()));  // include empty rows
    const std::string path = border(t.shape).str();

    tree_arena arena;
    // The leading NE run s_0 .. s_k becomes the initial right branch.
    std::size_t k = 0;
    while (k < path.size() && path[k] == lattice_path::north) ++k;
    std::vector<int> branch;  // s_0 .. s_r, the part of the right branch still on the profile
    for (std::size_t i = 0; i <= k; ++i) {
        const int v = arena.add();
        if (!branch.empty()) arena.slots[static_cast<std::size_t>(branch.back())].right = v;
        branch.push_back(v);
    }
    const int root = branch.front();
    std::string tail = path.substr(k);

    phi_run run;
    while (!tail.empty()) {
        // The first corner sits at the attachment vertex s_r: row r (the last
        // NE step of the branch) meets the leftmost column (the tail's SE step).
        const int r = static_cast<int>(branch.size()) - 1;
        if (r < 1) throw std::logic_error("phi: profile left without a row");
        const int width = static_cast<int>(rows.front().size());
        const cell_bit corner = rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(width - 1)];
        phi_step step{phi_step::action::delete_row, r, width, 0, {}};
        if (corner == 0) {
            // The whole row is 0 (a 1 to its right would make the corner a
            // forbidden 0), so deleting it keeps a Catalan tableau.
            rows.erase(rows.begin() + (r - 1));
            branch.pop_back();
        } else {
            for (int row = 0; row < r; ++row) rows[static_cast<std::size_t>(row)].pop_back();
            tail.erase(0, 1);
            std::size_t tau = 0;
            while (tau < tail.size() && tail[tau] == lattice_path::north) ++tau;
            tail.erase(0, tau);
            // s_r's subtree becomes the left son of a new vertex t_1 that takes
            // its place as right son of s_{r-1}; t_1 .. t_p extend the branch.
            const int moved = branch.back();
            branch.pop_back();
            const int t1 = arena.add();
            arena.slots[static_cast<std::size_t>(branch.back())].right = t1;
            arena.slots[static_cast<std::size_t>(t1)].left = moved;
            branch.push_back(t1);
            for (std::size_t i = 0; i < tau; ++i) {
                const int v = arena.add();
                arena.slots[static_cast<std::size_t>(branch.back())].right = v;
                branch.push_back(v);
            }
            step.kind = phi_step::action::delete_column;
            step.tau_length = static_cast<int>(tau);
        }
        if (record) {
            step.after = {arena.freeze(root), lattice_path(tail), static_cast<int>(branch.size()) - 1};
            run.steps.push_back(std::move(step));
        }
    }
    const auto& top = arena.slots[static_cast<std::size_t>(root)];
    if (top.left != -1) throw std::logic_error("phi: auxiliary root acquired a left son");
    run.result = arena.freeze(top.right);
    return run;
}

} // namespace detail

/// Catalan tableau of index n -> binary tree with n vertices.
inline binary_tree phi(const catalan_tableau& t) { return detail::run_phi(t, false).result; }

/// The individual row/column deletions performed by phi, with the tailed
/// tree after each one.
inline std::vector<phi_step> phi_trace(const catalan_tableau& t) { return detail::run_phi(t, true).steps; }

/// Undoes phi one deletion at a time. If the attachment vertex still has a
/// right son the last deletion was a row; otherwise the last right-branch
/// vertex with a left son is where the last column was grafted.
inline catalan_tableau phi_inverse(const binary_tree& b)
{
    if (b.empty()) throw std::invalid_argument("phi_inverse of the empty tree");
    detail::tree_arena arena;
    const int root = arena.add();
    const int top = arena.load(b);
    arena.slots[static_cast<std::size_t>(root)].right = top;

    std::vector<int> branch{root};
    for (int v = top; v != -1; v = arena.slots[static_cast<std::size_t>(v)].right) branch.push_back(v);
    std::vector<std::vector<cell_bit>> rows(branch.size() - 1);

    auto slot = [&](int v) -> detail::tree_arena::slot& { return arena.slots[static_cast<std::size_t>(v)]; };
    for (;;) {
        const int last = branch.back();
        if (slot(last).right != -1) {
            // undo a row deletion: an all-zero row as long as the rows below it
            const auto width = rows.front().size();
            branch.push_back(slot(last).right);
            rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(branch.size() - 2),
                        std::vector<cell_bit>(width, 0));
            continue;
        }
        std::size_t graft = branch.size();
        for (std::size_t j = branch.size() - 1; j >= 1; --j) {
            if (slot(branch[j]).left != -1) {
                graft = j;
                break;
            }
        }
        if (graft == branch.size()) break;
        // undo a column deletion: t_1 .. t_p leave, s_r returns, and a new
        // leftmost column of height r gets its single 1 on top
        const int restored = slot(branch[graft]).left;
        slot(branch[graft - 1]).right = restored;
        branch.resize(graft);
        branch.push_back(restored);
        for (std::size_t row = 0; row < graft; ++row) rows[row].push_back(0);
        rows[graft - 1].back() = 1;
    }
    const int k = static_cast<int>(rows.size());
    const int width = static_cast<int>(rows.front().size());
    auto t = make_tableau(k + width, k, std::move(rows));
    require_valid(t);
    return t;
}

/// Visit word of complete(b) in reverse prefix order (root, right subtree,
/// left subtree): U for an internal vertex, D for a leaf.
struct dyck_word {
    std::string letters;
    friend auto operator<=>(const dyck_word&, const dyck_word&) = default;
};

inline std::optional<std::string> dyck_violation(const dyck_word& w)
{
    int balance = 0;  // #U - #D
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        const char c = w.letters[i];
        if (c != 'U' && c != 'D') return "letters must be U or D";
        balance += c == 'U' ? 1 : -1;
        if (balance < 0 && i + 1 < w.letters.size()) return "a proper prefix has more D than U";
    }
    if (balance != -1) return "needs exactly one more D than U";
    return std::nullopt;
}

inline dyck_word tree_to_dyck(const binary_tree& b)
{
    if (b.empty()) throw std::invalid_argument("tree_to_dyck of the empty tree");
    dyck_word w;
    auto walk = [&](auto&& self, const binary_tree& t) -> void {
        if (t.empty()) {
            w.letters.push_back('D');
            return;
        }
        w.letters.push_back('U');
        self(self, t.right());
        self(self, t.left());
    };
    walk(walk, b);
    return w;
}

struct polyomino_column {
    int height = 1;
    int glue = 0;  // shared vertical edges with the previous column; 0 for the first

    friend auto operator<=>(const polyomino_column&, const polyomino_column&) = default;
};

/// Parallelogram polyomino given column by column from the left.
struct polyomino {
    std::vector<polyomino_column> columns;
    friend auto operator<=>(const polyomino&, const polyomino&) = default;
};

inline std::optional<std::string> polyomino_violation(const polyomino& p)
{
    if (p.columns.empty()) return "polyomino needs at least one column";
    if (p.columns.front().glue != 0) return "first column has no glue";
    for (std::size_t i = 0; i < p.columns.size(); ++i) {
        const auto& c = p.columns[i];
        if (c.height < 1) return "column heights must be positive";
        if (i > 0 && (c.glue < 1 || c.glue > std::min(p.columns[i - 1].height, c.height))) {
            return "glue must lie in [1, min of the neighbouring heights]";
        }
    }
    return std::nullopt;
}

/// Peaks become columns and each valley of height v glues its neighbours
/// along v + 1 edges. The path scanned is the visit word read backwards
/// without its final leaf, a leaf stepping up and an internal vertex down.
inline polyomino dyck_to_polyomino(const dyck_word& w)
{
    if (auto why = dyck_violation(w)) throw invalid_object("invalid Dyck word: " + *why);
    if (w.letters.size() < 3) throw invalid_object("the word of the empty tree has no polyomino");
    std::vector<int> steps;
    for (auto it = w.letters.rbegin() + 1; it != w.letters.rend(); ++it) steps.push_back(*it == 'D' ? 1 : -1);

    polyomino p;
    int height = 0;
    int pending_glue = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        height += steps[i];
        const bool last = i + 1 == steps.size();
        if (last) break;
        if (steps[i] == 1 && steps[i + 1] == -1) {
            p.columns.push_back({height, pending_glue});
        } else if (steps[i] == -1 && steps[i + 1] == 1) {
            pending_glue = height + 1;
        }
    }
    return p;
}

/// Removes the two corners of the polyomino and slides its lower border one
/// NW step so it starts where the upper one does.
inline path_pair polyomino_to_pair(const polyomino& p)
{
    if (auto why = polyomino_violation(p)) throw invalid_object("invalid polyomino: " + *why);
    std::vector<int> bottoms{0};
    std::vector<int> tops{p.columns.front().height};
    for (std::size_t i = 1; i < p.columns.size(); ++i) {
        const int bottom = tops.back() - p.columns[i].glue;
        bottoms.push_back(bottom);
        tops.push_back(bottom + p.columns[i].height);
    }
    std::string upper(static_cast<std::size_t>(tops.front()), lattice_path::north);
    std::string lower(1, lattice_path::east);
    for (std::size_t i = 1; i < tops.size(); ++i) {
        upper.push_back(lattice_path::east);
        upper.append(static_cast<std::size_t>(tops[i] - tops[i - 1]), lattice_path::north);
        lower.append(static_cast<std::size_t>(bottoms[i] - bottoms[i - 1]), lattice_path::north);
        lower.push_back(lattice_path::east);
    }
    upper.push_back(lattice_path::east);
    lower.append(static_cast<std::size_t>(tops.back() - bottoms.back()), lattice_path::north);
    return {lattice_path(upper.substr(1, upper.size() - 2)), lattice_path(lower.substr(1, lower.size() - 2))};
}

/// omega is the canopy path of b. Left edges, ordered by their fathers in
/// symmetric order, match the E steps of omega; eta's E step in that column
/// sits lower by the edge's right height (right edges from the root).
inline path_pair pair_of_paths_direct(const binary_tree& b)
{
    if (b.empty()) throw std::invalid_argument("pair_of_paths_direct of the empty tree");
    std::vector<int> right_heights;
    auto walk = [&](auto&& self, const binary_tree& t, int right_height) -> void {
        if (t.empty()) return;
        self(self, t.left(), right_height);
        if (t.has_left()) right_heights.push_back(right_height);
        self(self, t.right(), right_height + 1);
    };
    walk(walk, b, 0);

    lattice_path omega = canopy_path(b);
    auto levels = omega.east_step_levels();
    if (levels.size() != right_heights.size()) throw std::logic_error("left edges do not match E steps");
    for (std::size_t j = 0; j < levels.size(); ++j) {
        levels[j] -= right_heights[j];
        if (levels[j] < 0 || (j > 0 && levels[j] < levels[j - 1])) {
            throw std::logic_error("right heights do not form a monotone staircase");
        }
    }
    auto eta = lattice_path::from_east_levels(levels, omega.north_count());
    return {std::move(omega), std::move(eta)};
}

/// Direct tableau -> pair rule. Yellow cells: every cell above a 1 in its
/// column, then every cell right of those in its row. In each column eta's
/// E step sits below omega's by the number of white (0, non-yellow) cells.
inline path_pair tableau_to_pair_direct(const catalan_tableau& t)
{
    require_valid(t);
    const int width = t.columns();
    const int height = static_cast<int>(t.filling.size());
    std::vector<std::vector<bool>> yellow(static_cast<std::size_t>(height));
    for (int r = 0; r < height; ++r) yellow[static_cast<std::size_t>(r)].assign(t.filling[static_cast<std::size_t>(r)].size(), false);

    for (int c = 1; c <= width; ++c) {
        const int h = t.shape.column_height(c);
        int one_row = 0;
        for (int r = 1; r <= h; ++r)
            if (t.at(r, c) == 1) one_row = r;
        for (int r = one_row + 1; r <= h; ++r) {
            // the cell itself and everything to its right in row r
            for (int right = 1; right <= c; ++right) yellow[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(right - 1)] = true;
        }
    }
    std::vector<int> white(static_cast<std::size_t>(width) + 1, 0);
    for (int r = 1; r <= height; ++r) {
        for (int c = 1; c <= t.shape.parts[static_cast<std::size_t>(r - 1)]; ++c) {
            if (t.at(r, c) == 0 && !yellow[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)]) ++white[static_cast<std::size_t>(c)];
        }
    }
    lattice_path omega = profile(t);
    auto levels = omega.east_step_levels();
    // omega's E steps run over the columns from the leftmost one
    for (std::size_t j = 0; j < levels.size(); ++j) levels[j] -= white[static_cast<std::size_t>(width) - j];
    auto eta = lattice_path::from_east_levels(levels, omega.north_count());
    return {std::move(omega), std::move(eta)};
}

} // namespace cattab
