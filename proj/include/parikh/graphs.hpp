#pragma once

// Labeled bipartite graphs and the exact searches used on them at desk scale.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "parikh/errors.hpp"

namespace parikh {

inline constexpr int kDefaultIsomorphismCap = 16;
inline constexpr int kDefaultCycleCap = 14;

/// Bipartite graph with two named, ordered parts and string vertex labels.
/// Bipartiteness is structural: every edge joins part X to part Y.
class BipartiteGraph {
public:
    BipartiteGraph() = default;
    BipartiteGraph(std::vector<std::string> part_x, std::vector<std::string> part_y,
                   const std::vector<std::pair<std::string, std::string>>& edges);

    int vertex_count() const { return static_cast<int>(part_x_.size() + part_y_.size()); }
    int edge_count() const { return edge_count_; }
    bool empty() const { return part_x_.empty() && part_y_.empty(); }

    const std::vector<std::string>& part_x() const { return part_x_; }
    const std::vector<std::string>& part_y() const { return part_y_; }

    bool contains(const std::string& label) const { return index_.count(label) != 0; }
    bool in_part_x(const std::string& label) const;
    bool has_edge(const std::string& a, const std::string& b) const;

    /// Edges as (x label, y label), sorted; the wire order of the JSON format.
    std::vector<std::pair<std::string, std::string>> edges() const;

    // Index-level access used by the search algorithms. X and Y vertices are
    // addressed by their position in the part lists.
    int x_size() const { return static_cast<int>(part_x_.size()); }
    int y_size() const { return static_cast<int>(part_y_.size()); }
    const std::vector<int>& x_neighbors(int xi) const { return adj_x_[static_cast<std::size_t>(xi)]; }
    const std::vector<int>& y_neighbors(int yi) const { return adj_y_[static_cast<std::size_t>(yi)]; }
    bool has_edge_index(int xi, int yi) const;
    int x_index(const std::string& label) const;
    int y_index(const std::string& label) const;

private:
    std::vector<std::string> part_x_, part_y_;
    std::vector<std::vector<int>> adj_x_, adj_y_; // sorted neighbor indices
    std::map<std::string, std::pair<bool, int>> index_; // label -> (in X, index)
    int edge_count_ = 0;
};

/// Open neighborhood N(v). Throws DomainError for unknown labels.
std::set<std::string> neighbors(const BipartiteGraph& g, const std::string& v);

/// BFS distance; nullopt when u and v lie in different components.
std::optional<int> distance(const BipartiteGraph& g, const std::string& u, const std::string& v);

/// Greatest pairwise distance. Throws DomainError when g is empty or disconnected.
int diameter(const BipartiteGraph& g);

bool is_connected(const BipartiteGraph& g);

/// Maximal connected induced subgraphs, parts inherited, in order of first
/// vertex appearance.
std::vector<BipartiteGraph> connected_components(const BipartiteGraph& g);

/// Subgraph induced by `vertices`, part order inherited.
BipartiteGraph induced_subgraph(const BipartiteGraph& g, const std::set<std::string>& vertices);

/// Witness of an isomorphism between two bipartite graphs.
struct Isomorphism {
    bool swapped = false; // part X of g1 mapped onto part Y of g2
    std::map<std::string, std::string> mapping;
};

/// Part-respecting or part-swapping isomorphism search; backtracking with
/// degree pruning. Throws CapacityError above `cap` vertices.
std::optional<Isomorphism> find_isomorphism(const BipartiteGraph& g1, const BipartiteGraph& g2,
                                            int cap = kDefaultIsomorphismCap);

bool are_isomorphic(const BipartiteGraph& g1, const BipartiteGraph& g2,
                    int cap = kDefaultIsomorphismCap);

/// Exact backtracking search; false outright when |X| != |Y| or |V| < 4.
bool has_hamiltonian_cycle(const BipartiteGraph& g, int cap = kDefaultCycleCap);

/// Every simple cycle of length >= 6 has at least two chords. Enumerates all
/// cycles once (minimal rotation/reflection), so capped by vertex count.
bool is_62_chordal(const BipartiteGraph& g, int cap = kDefaultCycleCap);

// Small graph factories shared by tests and the verification suites.
BipartiteGraph complete_bipartite(int m, int n);
BipartiteGraph path_graph(int vertices);
BipartiteGraph cycle_graph(int vertices);

} // namespace parikh
