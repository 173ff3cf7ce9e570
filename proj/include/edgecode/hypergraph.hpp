#ifndef EDGECODE_HYPERGRAPH_HPP
#define EDGECODE_HYPERGRAPH_HPP

/// Hypergraphs and clutters on vertices {1..s}, the special families used by
/// the edge-code constructions (partite-path clutters, interval hypergraphs,
/// the five-vertex graph catalog), and the combinatorial hypothesis checks
/// behind the minimum-distance formulas.

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"

namespace edgecode {

using Edge = std::vector<int>; // sorted vertex labels, 1-based

struct Hypergraph {
    int s = 0;                // vertices are 1..s
    std::vector<Edge> edges;  // canonical: each edge sorted, edges sorted lexicographically

    bool has_edge(const Edge& e) const {
        return std::binary_search(edges.begin(), edges.end(), e);
    }
};

/// Canonicalizes and validates an edge list. Throws InvalidVertex for labels
/// outside 1..s, ParseError for empty or duplicate edges.
inline Hypergraph make_hypergraph(int s, std::vector<Edge> edges) {
    if (s < 1) throw BadParams("vertex count must be >= 1");
    for (auto& e : edges) {
        if (e.empty()) throw ParseError("empty edge");
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw ParseError("repeated vertex within an edge");
        if (e.front() < 1 || e.back() > s)
            throw InvalidVertex("vertex label out of range 1.." + std::to_string(s));
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw ParseError("duplicate edge after canonicalization");
    return Hypergraph{s, std::move(edges)};
}

struct ClutterCertificate {
    bool is_clutter = true;
    std::optional<std::pair<int, int>> witness; // (i, j) with edge i strictly inside edge j
    std::optional<int> uniform_degree;
};

inline ClutterCertificate classify(const Hypergraph& h) {
    ClutterCertificate cert;
    const int n = static_cast<int>(h.edges.size());
    for (int i = 0; i < n && cert.is_clutter; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || h.edges[i].size() >= h.edges[j].size()) continue;
            if (std::includes(h.edges[j].begin(), h.edges[j].end(),
                              h.edges[i].begin(), h.edges[i].end())) {
                cert.is_clutter = false;
                cert.witness = {i, j};
                break;
            }
        }
    if (!h.edges.empty()) {
        const auto d = h.edges.front().size();
        if (std::all_of(h.edges.begin(), h.edges.end(),
                        [&](const Edge& e) { return e.size() == d; }))
            cert.uniform_degree = static_cast<int>(d);
    }
    return cert;
}

/// Replaces every edge by its complement in {1..s}. Involution on hypergraphs
/// whose edges are proper subsets of the vertex set.
inline Hypergraph edge_removed(const Hypergraph& h) {
    std::vector<Edge> out;
    out.reserve(h.edges.size());
    for (const auto& e : h.edges) {
        if (static_cast<int>(e.size()) == h.s)
            throw FullEdge("edge equals the whole vertex set; complement would be empty");
        Edge c;
        auto it = e.begin();
        for (int v = 1; v <= h.s; ++v) {
            if (it != e.end() && *it == v)
                ++it;
            else
                c.push_back(v);
        }
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return Hypergraph{h.s, std::move(out)};
}

/// The clutter of one-vertex-per-part selections from d two-vertex parts,
/// part r = {labels[2r-2], labels[2r-1]}: 2^d edges of size d.
inline Hypergraph partite_path_clutter(int d, const std::vector<int>& labels, int s) {
    if (d < 1 || static_cast<int>(labels.size()) != 2 * d)
        throw BadParams("need exactly 2d labels");
    std::set<int> uniq(labels.begin(), labels.end());
    if (static_cast<int>(uniq.size()) != 2 * d) throw DuplicateLabels("labels must be pairwise distinct");
    std::vector<Edge> edges;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        Edge e;
        for (int r = 0; r < d; ++r) e.push_back(labels[2 * r + ((mask >> r) & 1)]);
        std::sort(e.begin(), e.end());
        edges.push_back(std::move(e));
    }
    return make_hypergraph(s, std::move(edges));
}

inline Hypergraph partite_path_clutter(int d, const std::vector<int>& labels) {
    int s = 0;
    for (int v : labels) s = std::max(s, v);
    return partite_path_clutter(d, labels, s);
}

inline bool contains_subclutter(const Hypergraph& h, const Hypergraph& c) {
    return std::all_of(c.edges.begin(), c.edges.end(),
                       [&](const Edge& e) { return h.has_edge(e); });
}

namespace detail {

/// Searches for d disjoint vertex pairs of h such that every one-per-pair
/// selection is an edge. Returns the flattened pair labels if found.
inline bool find_pairing(const Hypergraph& h, int d, std::vector<int>& pairs, std::vector<bool>& used,
                         int min_first) {
    if (static_cast<int>(pairs.size()) == 2 * d) {
        return contains_subclutter(h, partite_path_clutter(d, pairs, h.s));
    }
    for (int a = min_first; a <= h.s; ++a) {
        if (used[a]) continue;
        used[a] = true;
        for (int b = a + 1; b <= h.s; ++b) {
            if (used[b]) continue;
            used[b] = true;
            pairs.push_back(a);
            pairs.push_back(b);
            // pairs are unordered among themselves: force ascending first elements
            if (find_pairing(h, d, pairs, used, a + 1)) return true;
            pairs.pop_back();
            pairs.pop_back();
            used[b] = false;
        }
        used[a] = false;
    }
    return false;
}

inline std::optional<std::vector<int>> find_partite_embedding(const Hypergraph& h, int d) {
    if (2 * d > h.s) return std::nullopt;
    std::vector<int> pairs;
    std::vector<bool> used(h.s + 1, false);
    if (find_pairing(h, d, pairs, used, 1)) return pairs;
    return std::nullopt;
}

} // namespace detail

enum class Branch { Branch1, Branch2, NotCovered };

inline const char* to_string(Branch b) {
    switch (b) {
        case Branch::Branch1: return "branch1";
        case Branch::Branch2: return "branch2";
        default: return "not_covered";
    }
}

/// Decides which minimum-distance branch covers a d-uniform clutter:
/// Branch1 if d <= s/2 and some labeling embeds the partite-path clutter,
/// Branch2 if s/2 < d < s and the edge-removed clutter embeds the
/// complementary one. Throws NotUniform for non-uniform input.
inline Branch clutter_branch(const Hypergraph& c) {
    const auto cert = classify(c);
    if (!cert.uniform_degree) throw NotUniform("clutter is not uniform");
    const int d = *cert.uniform_degree;
    const int s = c.s;
    if (2 * d <= s) {
        if (detail::find_partite_embedding(c, d)) return Branch::Branch1;
        return Branch::NotCovered;
    }
    if (d < s) {
        if (detail::find_partite_embedding(edge_removed(c), s - d)) return Branch::Branch2;
    }
    return Branch::NotCovered;
}

// ---- built-in families -----------------------------------------------------

inline Hypergraph path_graph(int s) {
    if (s < 2) throw BadParams("path needs at least 2 vertices");
    std::vector<Edge> e;
    for (int v = 1; v < s; ++v) e.push_back({v, v + 1});
    return make_hypergraph(s, std::move(e));
}

inline Hypergraph cycle_graph(int s) {
    if (s < 3) throw BadParams("cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (int v = 1; v < s; ++v) e.push_back({v, v + 1});
    e.push_back({1, s});
    return make_hypergraph(s, std::move(e));
}

inline Hypergraph complete_graph(int s) {
    if (s < 2) throw BadParams("complete graph needs at least 2 vertices");
    std::vector<Edge> e;
    for (int a = 1; a <= s; ++a)
        for (int b = a + 1; b <= s; ++b) e.push_back({a, b});
    return make_hypergraph(s, std::move(e));
}

inline Hypergraph star_graph(int s) {
    if (s < 2) throw BadParams("star needs at least 2 vertices");
    std::vector<Edge> e;
    for (int v = 2; v <= s; ++v) e.push_back({1, v});
    return make_hypergraph(s, std::move(e));
}

/// All edges of size r for d2 <= r <= d1.
inline Hypergraph interval_hypergraph(int s, int d1, int d2) {
    if (!(1 <= d2 && d2 <= d1 && d1 <= s)) throw BadParams("need 1 <= d2 <= d1 <= s");
    std::vector<Edge> edges;
    Edge cur;
    auto rec = [&](auto&& self, int next, int r) -> void {
        if (static_cast<int>(cur.size()) == r) {
            edges.push_back(cur);
            return;
        }
        for (int v = next; v <= s; ++v) {
            cur.push_back(v);
            self(self, v + 1, r);
            cur.pop_back();
        }
    };
    for (int r = d2; r <= d1; ++r) rec(rec, 1, r);
    return make_hypergraph(s, std::move(edges));
}

struct CatalogEntry {
    int id = 0; // 1..20 in row-major drawing order
    Hypergraph graph;
    bool has_four_cycle = false; // minimum distance (q-2)^2(q-1)^3 vs (q-2)(q-1)^4

    unsigned long long predicted_distance(unsigned q) const {
        unsigned long long q1 = q - 1, q2 = q - 2;
        return has_four_cycle ? q2 * q2 * q1 * q1 * q1 : q2 * q1 * q1 * q1 * q1;
    }
};

/// The 20 connected five-vertex graphs of the published minimum-distance
/// table, with the labels used in the drawings. The source table draws all
/// 21 connected graphs on five vertices; the bowtie (two triangles glued at
/// a vertex) is excluded here because its drawn label (q-2)(q-1)^4 is
/// wrong -- brute force over two independent implementations gives 12 at
/// q=3 and 150 at q=4, matching neither table formula. It is the unique
/// connected five-vertex graph violating the four-cycle dichotomy; the
/// remaining 20 (including the complete graph K5 from the header cell)
/// all satisfy it and form this catalog.
inline std::vector<CatalogEntry> five_vertex_catalog() {
    auto G = [](std::vector<Edge> e, int id, bool c4) {
        return CatalogEntry{id, make_hypergraph(5, std::move(e)), c4};
    };
    return {
        G({{1, 2}, {1, 5}, {2, 3}, {3, 4}, {4, 5}}, 1, false), // 5-cycle
        G({{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 5}, {3, 4}, {4, 5}}, 2, true),
        G({{1, 3}, {1, 5}, {2, 3}, {2, 5}, {3, 4}, {4, 5}}, 3, true),
        G({{1, 2}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 5}, {4, 5}}, 4, true),
        G({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}, 5, true),
        G({{1, 2}, {1, 3}, {1, 4}, {1, 5}}, 6, false), // star
        G({{1, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}, 7, true),
        G({{1, 2}, {1, 3}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}, 8, true),
        G({{1, 2}, {1, 3}, {1, 5}, {4, 5}}, 9, false),
        G({{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}, 10,
          true), // K5, replacing the mislabeled bowtie drawing
        G({{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}}, 11, true),
        G({{1, 5}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}, 12, false),
        G({{1, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}}, 13, false),
        G({{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {4, 5}}, 14, true),
        G({{1, 5}, {2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}, 15, true),
        G({{1, 2}, {2, 3}, {3, 4}, {4, 5}}, 16, false), // path
        G({{1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}, 17, false),
        G({{1, 2}, {1, 3}, {1, 5}, {2, 3}, {2, 5}, {3, 4}, {4, 5}}, 18, true),
        G({{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}, {4, 5}}, 19, true),
        G({{1, 3}, {2, 3}, {2, 5}, {3, 4}, {4, 5}}, 20, true),
    };
}

// ---- JSON interchange ------------------------------------------------------

/// Schema: {"vertices": s, "edges": [[...], ...]}, 1-indexed labels.
inline Hypergraph parse_hypergraph(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw ParseError("expected object with \"vertices\" and \"edges\"");
    if (!j["vertices"].is_number_integer()) throw ParseError("\"vertices\" must be an integer");
    const int s = j["vertices"].get<int>();
    if (s < 1) throw ParseError("\"vertices\" must be >= 1");
    if (!j["edges"].is_array()) throw ParseError("\"edges\" must be an array");
    std::vector<Edge> edges;
    for (const auto& je : j["edges"]) {
        if (!je.is_array()) throw ParseError("each edge must be an array of labels");
        Edge e;
        for (const auto& jv : je) {
            if (!jv.is_number_integer()) throw ParseError("vertex labels must be integers");
            e.push_back(jv.get<int>());
        }
        edges.push_back(std::move(e));
    }
    return make_hypergraph(s, std::move(edges));
}

inline std::string serialize_hypergraph(const Hypergraph& h) {
    nlohmann::json j;
    j["vertices"] = h.s;
    j["edges"] = h.edges;
    return j.dump();
}

inline Hypergraph family(const std::string& name, int n, int d = 0, int d1 = 0, int d2 = 0) {
    if (name == "path") return path_graph(n);
    if (name == "cycle") return cycle_graph(n);
    if (name == "complete") return complete_graph(n);
    if (name == "star") return star_graph(n);
    if (name == "interval") return interval_hypergraph(n, d1, d2);
    if (name == "partite_path") {
        if (d < 1 || 2 * d > n) throw BadParams("partite_path needs 1 <= d and 2d <= n");
        std::vector<int> labels(2 * d);
        std::iota(labels.begin(), labels.end(), 1);
        return partite_path_clutter(d, labels, n);
    }
    throw BadParams("unknown family: " + name);
}

} // namespace edgecode

#endif
