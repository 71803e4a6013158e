#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "../cattab.hpp"

namespace cattab::cli {

// Wire format (json):
//   tableau       {"index": n, "k": k, "parts": [...], "filling": [[...], ...]}
//                 parts and filling rows bottom first, each row right to left
//   tree          null | {"l": tree, "r": tree}
//   path          "NENE"
//   pair          {"omega": "...", "eta": "..."}
//   dyck          "UUDDD"
//   polyomino     {"cols": [[h], [h, g], ...]}
//   distribution  [{"state": "01", "p": "p/q"}, ...]
// A tagged object wraps any of these as {"kind": "<kind>", "value": <body>}.

using json = nlohmann::ordered_json;
using cattab::to_string;

enum class object_kind { tableau, tree, path, pair, dyck, polyomino, distribution };

inline const char* to_string(object_kind k)
{
    switch (k) {
    case object_kind::tableau: return "tableau";
    case object_kind::tree: return "tree";
    case object_kind::path: return "path";
    case object_kind::pair: return "pair";
    case object_kind::dyck: return "dyck";
    case object_kind::polyomino: return "polyomino";
    case object_kind::distribution: return "distribution";
    }
    return "unknown";
}

inline std::optional<object_kind> parse_kind(std::string_view name)
{
    for (auto k : {object_kind::tableau, object_kind::tree, object_kind::path, object_kind::pair, object_kind::dyck,
                   object_kind::polyomino, object_kind::distribution}) {
        if (name == to_string(k)) return k;
    }
    return std::nullopt;
}

using serialized_object =
    std::variant<catalan_tableau, binary_tree, lattice_path, path_pair, dyck_word, polyomino, distribution>;

inline object_kind kind_of(const serialized_object& o) { return static_cast<object_kind>(o.index()); }

// ---- json bodies ---------------------------------------------------------

inline json to_json(const catalan_tableau& t)
{
    json filling = json::array();
    for (const auto& row : t.filling) {
        json r = json::array();
        for (cell_bit b : row) r.push_back(static_cast<int>(b));
        filling.push_back(std::move(r));
    }
    return json{{"index", t.index()}, {"k", t.rows()}, {"parts", t.shape.parts}, {"filling", std::move(filling)}};
}

inline json to_json(const binary_tree& b)
{
    if (b.empty()) return nullptr;
    return json{{"l", to_json(b.left())}, {"r", to_json(b.right())}};
}

inline json to_json(const lattice_path& p) { return p.str(); }

inline json to_json(const path_pair& p) { return json{{"omega", p.omega.str()}, {"eta", p.eta.str()}}; }

inline json to_json(const dyck_word& w) { return w.letters; }

inline json to_json(const polyomino& p)
{
    json cols = json::array();
    for (std::size_t i = 0; i < p.columns.size(); ++i) {
        if (i == 0) cols.push_back(json::array({p.columns[i].height}));
        else cols.push_back(json::array({p.columns[i].height, p.columns[i].glue}));
    }
    return json{{"cols", std::move(cols)}};
}

inline json to_json(const distribution& d)
{
    json out = json::array();
    for (std::uint64_t s = 0; s < d.probability.size(); ++s) {
        out.push_back(json{{"state", tasep_state{d.size, s}.str()}, {"p", to_string(d.probability[s])}});
    }
    return out;
}

inline json to_json(const serialized_object& o)
{
    return std::visit([](const auto& x) { return to_json(x); }, o);
}

inline json to_tagged_json(const serialized_object& o)
{
    return json{{"kind", to_string(kind_of(o))}, {"value", to_json(o)}};
}

// ---- parsing -------------------------------------------------------------

namespace detail {

inline const json& member(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) throw parse_error(std::string("missing field '") + key + "'");
    return j.at(key);
}

inline int as_int(const json& j, const char* what)
{
    if (!j.is_number_integer()) throw parse_error(std::string(what) + " must be an integer");
    return j.get<int>();
}

inline std::string as_string(const json& j, const char* what)
{
    if (!j.is_string()) throw parse_error(std::string(what) + " must be a string");
    return j.get<std::string>();
}

} // namespace detail

/// Structural problems raise parse_error; well-formed objects that break an
/// invariant raise invalid_object.
inline catalan_tableau tableau_from_json(const json& j)
{
    const int index = detail::as_int(detail::member(j, "index"), "index");
    const int k = detail::as_int(detail::member(j, "k"), "k");
    const auto& parts_json = detail::member(j, "parts");
    const auto& filling_json = detail::member(j, "filling");
    if (!parts_json.is_array() || !filling_json.is_array()) throw parse_error("parts and filling must be arrays");
    std::vector<int> parts;
    for (const auto& p : parts_json) parts.push_back(detail::as_int(p, "part"));
    std::vector<std::vector<cell_bit>> filling;
    for (const auto& row : filling_json) {
        if (!row.is_array()) throw parse_error("filling rows must be arrays");
        std::vector<cell_bit> r;
        for (const auto& cell : row) {
            const int v = detail::as_int(cell, "cell");
            if (v != 0 && v != 1) throw invalid_object("cells must hold 0 or 1");
            r.push_back(static_cast<cell_bit>(v));
        }
        filling.push_back(std::move(r));
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    while (!filling.empty() && filling.back().empty()) filling.pop_back();
    catalan_tableau t{shape{index, k, std::move(parts)}, std::move(filling)};
    require_valid(t);
    return t;
}

inline binary_tree tree_from_json(const json& j)
{
    if (j.is_null()) return {};
    if (!j.is_object() || j.size() != 2 || !j.contains("l") || !j.contains("r")) {
        throw parse_error("a tree is null or an object with exactly the fields l and r");
    }
    return binary_tree::node(tree_from_json(j.at("l")), tree_from_json(j.at("r")));
}

inline lattice_path path_from_json(const json& j) { return lattice_path(detail::as_string(j, "path")); }

inline path_pair pair_from_json(const json& j)
{
    path_pair p{path_from_json(detail::member(j, "omega")), path_from_json(detail::member(j, "eta"))};
    require_valid(p);
    return p;
}

inline dyck_word dyck_from_json(const json& j)
{
    dyck_word w{detail::as_string(j, "dyck word")};
    if (auto why = dyck_violation(w)) throw invalid_object("invalid Dyck word: " + *why);
    return w;
}

inline polyomino polyomino_from_json(const json& j)
{
    const auto& cols = detail::member(j, "cols");
    if (!cols.is_array()) throw parse_error("cols must be an array");
    polyomino p;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        const auto& c = cols[i];
        const std::size_t expected = i == 0 ? 1 : 2;
        if (!c.is_array() || c.size() != expected) {
            throw parse_error("polyomino column must be [h] first and [h, g] afterwards");
        }
        p.columns.push_back({detail::as_int(c[0], "height"), i == 0 ? 0 : detail::as_int(c[1], "glue")});
    }
    if (auto why = polyomino_violation(p)) throw invalid_object("invalid polyomino: " + *why);
    return p;
}

inline distribution distribution_from_json(const json& j)
{
    if (!j.is_array() || j.empty()) throw parse_error("a distribution is a non-empty array");
    distribution d;
    for (const auto& entry : j) {
        const auto state = tasep_state::parse(detail::as_string(detail::member(entry, "state"), "state"));
        if (d.probability.empty()) {
            d.size = state.length;
            d.probability.assign(std::size_t{1} << state.length, rational(0));
        }
        if (state.length != d.size) throw invalid_object("states of different lengths");
        d.probability.at(state.bits) = parse_rational(detail::as_string(detail::member(entry, "p"), "p"));
    }
    if (j.size() != d.probability.size()) throw invalid_object("a distribution lists every state exactly once");
    rational total = 0;
    for (const auto& p : d.probability) {
        if (p < 0) throw invalid_object("negative probability");
        total += p;
    }
    if (total != 1) throw invalid_object("probabilities sum to " + to_string(total) + ", not 1");
    return d;
}

inline serialized_object object_from_json(object_kind kind, const json& j)
{
    switch (kind) {
    case object_kind::tableau: return tableau_from_json(j);
    case object_kind::tree: return tree_from_json(j);
    case object_kind::path: return path_from_json(j);
    case object_kind::pair: return pair_from_json(j);
    case object_kind::dyck: return dyck_from_json(j);
    case object_kind::polyomino: return polyomino_from_json(j);
    case object_kind::distribution: return distribution_from_json(j);
    }
    throw std::logic_error("unknown object kind");
}

/// Accepts the bare body or a tagged {"kind", "value"} envelope whose kind
/// must match.
inline serialized_object parse_object(object_kind expected, std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("malformed json: ") + e.what());
    }
    try {
        if (j.is_object() && j.contains("kind") && j.contains("value")) {
            const auto tagged = parse_kind(detail::as_string(j.at("kind"), "kind"));
            if (!tagged || *tagged != expected) {
                throw parse_error("tagged kind does not match the expected kind '" + std::string(to_string(expected)) + "'");
            }
            return object_from_json(expected, j.at("value"));
        }
        return object_from_json(expected, j);
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad object: ") + e.what());
    }
}

// ---- text ----------------------------------------------------------------

/// One line per object, meant for reading rather than parsing.
inline std::string to_text(const catalan_tableau& t)
{
    std::string rows;
    for (std::size_t r = 0; r < t.filling.size(); ++r) {
        if (r) rows += '/';
        for (cell_bit b : t.filling[r]) rows += static_cast<char>('0' + b);
    }
    return "index=" + std::to_string(t.index()) + " k=" + std::to_string(t.rows()) + " rows=" + (rows.empty() ? "-" : rows);
}

inline std::string to_text(const binary_tree& b) { return to_bracket_string(b); }
inline std::string to_text(const lattice_path& p) { return p.empty() ? "-" : p.str(); }
inline std::string to_text(const path_pair& p) { return "omega=" + to_text(p.omega) + " eta=" + to_text(p.eta); }
inline std::string to_text(const dyck_word& w) { return w.letters; }

inline std::string to_text(const polyomino& p)
{
    std::string out;
    for (std::size_t i = 0; i < p.columns.size(); ++i) {
        if (i) out += ' ' + std::to_string(p.columns[i].glue) + '|';
        out += std::to_string(p.columns[i].height);
    }
    return out;
}

inline std::string to_text(const distribution& d)
{
    std::string out;
    for (std::uint64_t s = 0; s < d.probability.size(); ++s) {
        if (s) out += '\n';
        out += tasep_state{d.size, s}.str() + ":" + to_string(d.probability[s]);
    }
    return out;
}

inline std::string to_text(const serialized_object& o)
{
    return std::visit([](const auto& x) { return to_text(x); }, o);
}

} // namespace cattab::cli
