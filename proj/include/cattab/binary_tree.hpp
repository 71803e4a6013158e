#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "lattice_path.hpp"

namespace cattab {

/// Immutable rooted binary tree. Subtrees are shared between copies, so
/// copying is O(1) and a vertex can be identified with the subtree rooted
/// at it.
class binary_tree {
public:
    binary_tree() = default;  // the empty tree

    static binary_tree node(binary_tree left, binary_tree right);
    static binary_tree leaf() { return node({}, {}); }

    bool empty() const noexcept { return !root_; }
    std::size_t size() const noexcept;

    // Preconditions: !empty().
    const binary_tree& left() const;
    const binary_tree& right() const;
    bool has_left() const { return !left().empty(); }
    bool has_right() const { return !right().empty(); }

    friend bool operator==(const binary_tree& a, const binary_tree& b);
    friend std::strong_ordering operator<=>(const binary_tree& a, const binary_tree& b);

private:
    struct vertex;
    explicit binary_tree(std::shared_ptr<const vertex> root) : root_(std::move(root)) {}
    std::shared_ptr<const vertex> root_;
};

struct binary_tree::vertex {
    binary_tree left;
    binary_tree right;
    std::size_t size;
};

inline binary_tree binary_tree::node(binary_tree left, binary_tree right)
{
    const std::size_t size = 1 + left.size() + right.size();
    return binary_tree(std::make_shared<const vertex>(vertex{std::move(left), std::move(right), size}));
}

inline std::size_t binary_tree::size() const noexcept { return root_ ? root_->size : 0; }

inline const binary_tree& binary_tree::left() const
{
    if (!root_) throw std::logic_error("left() of the empty tree");
    return root_->left;
}

inline const binary_tree& binary_tree::right() const
{
    if (!root_) throw std::logic_error("right() of the empty tree");
    return root_->right;
}

inline bool operator==(const binary_tree& a, const binary_tree& b)
{
    if (a.root_ == b.root_) return true;
    if (a.size() != b.size()) return false;
    return a.left() == b.left() && a.right() == b.right();
}

// Orders by size, then left subtree, then right subtree.
inline std::strong_ordering operator<=>(const binary_tree& a, const binary_tree& b)
{
    if (a.root_ == b.root_) return std::strong_ordering::equal;
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    if (auto c = a.left() <=> b.left(); c != 0) return c;
    return a.right() <=> b.right();
}

/// Inorder: left subtree, root, right subtree. Each vertex is returned as
/// the subtree rooted at it.
inline std::vector<binary_tree> symmetric_order(const binary_tree& b)
{
    std::vector<binary_tree> out;
    out.reserve(b.size());
    auto walk = [&](auto&& self, const binary_tree& t) -> void {
        if (t.empty()) return;
        self(self, t.left());
        out.push_back(t);
        self(self, t.right());
    };
    walk(walk, b);
    return out;
}

/// Adds an external leaf wherever a vertex lacks a son; 2n+1 vertices.
inline binary_tree complete(const binary_tree& b)
{
    if (b.empty()) return binary_tree::leaf();
    return binary_tree::node(complete(b.left()), complete(b.right()));
}

/// Word over {a, b}.
struct canopy_word {
    std::string letters;
    friend auto operator<=>(const canopy_word&, const canopy_word&) = default;
};

/// Letter i is 'a' iff the i-th inorder vertex has a right son; the last
/// vertex is dropped.
inline canopy_word canopy(const binary_tree& b)
{
    if (b.empty()) throw std::invalid_argument("canopy of the empty tree");
    canopy_word word;
    const auto order = symmetric_order(b);
    for (std::size_t i = 0; i + 1 < order.size(); ++i) word.letters.push_back(order[i].has_right() ? 'a' : 'b');
    return word;
}

/// Same word read off the leaves of complete(b): 'a' for a left daughter,
/// 'b' for a right one, first and last leaf dropped.
inline canopy_word canopy_from_leaves(const binary_tree& b)
{
    if (b.empty()) throw std::invalid_argument("canopy of the empty tree");
    std::string sides;
    auto walk = [&](auto&& self, const binary_tree& t, char side) -> void {
        if (!t.has_left() && !t.has_right()) {
            sides.push_back(side);
            return;
        }
        self(self, t.left(), 'a');
        self(self, t.right(), 'b');
    };
    walk(walk, complete(b), '?');
    return canopy_word{sides.substr(1, sides.size() - 2)};
}

/// a -> N, b -> E.
inline lattice_path canopy_path(const canopy_word& w)
{
    std::string steps;
    for (char c : w.letters) steps.push_back(c == 'a' ? lattice_path::north : lattice_path::east);
    return lattice_path(std::move(steps));
}

inline lattice_path canopy_path(const binary_tree& b) { return canopy_path(canopy(b)); }

/// Edges along the left branch (left branch vertex count minus one).
inline int left_branch_edges(const binary_tree& b)
{
    int edges = 0;
    for (const binary_tree* t = &b; t->has_left(); t = &t->left()) ++edges;
    return edges;
}

inline int right_branch_edges(const binary_tree& b)
{
    int edges = 0;
    for (const binary_tree* t = &b; t->has_right(); t = &t->right()) ++edges;
    return edges;
}

/// All trees with n vertices, ordered by left-subtree size then recursively.
inline std::vector<binary_tree> enumerate_trees(int n, const resource_caps& caps = {})
{
    if (n < 0) throw std::invalid_argument("enumerate_trees: negative size");
    check_cap(n, caps.max_enumeration_size, "tree size");
    std::vector<std::vector<binary_tree>> by_size(static_cast<std::size_t>(n) + 1);
    by_size[0].push_back({});
    for (int m = 1; m <= n; ++m) {
        auto& bucket = by_size[static_cast<std::size_t>(m)];
        bucket.reserve(catalan(m));
        for (int left = 0; left < m; ++left) {
            for (const auto& l : by_size[static_cast<std::size_t>(left)])
                for (const auto& r : by_size[static_cast<std::size_t>(m - 1 - left)]) bucket.push_back(binary_tree::node(l, r));
        }
    }
    return std::move(by_size[static_cast<std::size_t>(n)]);
}

/// "." for the empty tree, "(LR)" for a vertex; a single vertex is "(..)".
inline std::string to_bracket_string(const binary_tree& b)
{
    if (b.empty()) return ".";
    return "(" + to_bracket_string(b.left()) + to_bracket_string(b.right()) + ")";
}

} // namespace cattab
