#include "parikh/graphs.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>

namespace parikh {

namespace {

std::string quoted(const std::string& s) { return "'" + s + "'"; }

} // namespace

BipartiteGraph::BipartiteGraph(std::vector<std::string> part_x, std::vector<std::string> part_y,
                               const std::vector<std::pair<std::string, std::string>>& edges)
    : part_x_(std::move(part_x)), part_y_(std::move(part_y)) {
    for (int i = 0; i < static_cast<int>(part_x_.size()); ++i) {
        if (!index_.emplace(part_x_[static_cast<std::size_t>(i)], std::make_pair(true, i)).second)
            throw DomainError("duplicate vertex label " + quoted(part_x_[static_cast<std::size_t>(i)]));
    }
    for (int i = 0; i < static_cast<int>(part_y_.size()); ++i) {
        if (!index_.emplace(part_y_[static_cast<std::size_t>(i)], std::make_pair(false, i)).second)
            throw DomainError("duplicate vertex label " + quoted(part_y_[static_cast<std::size_t>(i)]));
    }
    adj_x_.resize(part_x_.size());
    adj_y_.resize(part_y_.size());
    for (const auto& [a, b] : edges) {
        auto ita = index_.find(a);
        auto itb = index_.find(b);
        if (ita == index_.end())
            throw DomainError("edge endpoint " + quoted(a) + " is not a vertex");
        if (itb == index_.end())
            throw DomainError("edge endpoint " + quoted(b) + " is not a vertex");
        if (ita->second.first == itb->second.first)
            throw DomainError("edge " + quoted(a) + "--" + quoted(b) +
                              " joins two vertices of the same part");
        int xi = ita->second.first ? ita->second.second : itb->second.second;
        int yi = ita->second.first ? itb->second.second : ita->second.second;
        auto& row = adj_x_[static_cast<std::size_t>(xi)];
        if (std::find(row.begin(), row.end(), yi) != row.end())
            throw DomainError("duplicate edge " + quoted(a) + "--" + quoted(b));
        row.push_back(yi);
        adj_y_[static_cast<std::size_t>(yi)].push_back(xi);
        ++edge_count_;
    }
    for (auto& row : adj_x_)
        std::sort(row.begin(), row.end());
    for (auto& row : adj_y_)
        std::sort(row.begin(), row.end());
}

bool BipartiteGraph::in_part_x(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end())
        throw DomainError("unknown vertex label " + quoted(label));
    return it->second.first;
}

bool BipartiteGraph::has_edge(const std::string& a, const std::string& b) const {
    auto ita = index_.find(a);
    auto itb = index_.find(b);
    if (ita == index_.end())
        throw DomainError("unknown vertex label " + quoted(a));
    if (itb == index_.end())
        throw DomainError("unknown vertex label " + quoted(b));
    if (ita->second.first == itb->second.first)
        return false;
    int xi = ita->second.first ? ita->second.second : itb->second.second;
    int yi = ita->second.first ? itb->second.second : ita->second.second;
    return has_edge_index(xi, yi);
}

bool BipartiteGraph::has_edge_index(int xi, int yi) const {
    const auto& row = adj_x_[static_cast<std::size_t>(xi)];
    return std::binary_search(row.begin(), row.end(), yi);
}

int BipartiteGraph::x_index(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end() || !it->second.first)
        throw DomainError("label " + quoted(label) + " is not a part-X vertex");
    return it->second.second;
}

int BipartiteGraph::y_index(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end() || it->second.first)
        throw DomainError("label " + quoted(label) + " is not a part-Y vertex");
    return it->second.second;
}

std::vector<std::pair<std::string, std::string>> BipartiteGraph::edges() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (int xi = 0; xi < x_size(); ++xi)
        for (int yi : x_neighbors(xi))
            out.emplace_back(part_x_[static_cast<std::size_t>(xi)],
                             part_y_[static_cast<std::size_t>(yi)]);
    std::sort(out.begin(), out.end());
    return out;
}

std::set<std::string> neighbors(const BipartiteGraph& g, const std::string& v) {
    std::set<std::string> out;
    if (g.in_part_x(v)) {
        for (int yi : g.x_neighbors(g.x_index(v)))
            out.insert(g.part_y()[static_cast<std::size_t>(yi)]);
    } else {
        for (int xi : g.y_neighbors(g.y_index(v)))
            out.insert(g.part_x()[static_cast<std::size_t>(xi)]);
    }
    return out;
}

namespace {

// Combined vertex ids: 0..|X|-1 are X, |X|..|X|+|Y|-1 are Y.
std::vector<std::vector<int>> combined_adjacency(const BipartiteGraph& g) {
    const int nx = g.x_size();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertex_count()));
    for (int xi = 0; xi < nx; ++xi) {
        for (int yi : g.x_neighbors(xi)) {
            adj[static_cast<std::size_t>(xi)].push_back(nx + yi);
            adj[static_cast<std::size_t>(nx + yi)].push_back(xi);
        }
    }
    return adj;
}

int combined_id(const BipartiteGraph& g, const std::string& label) {
    return g.in_part_x(label) ? g.x_index(label) : g.x_size() + g.y_index(label);
}

std::string combined_label(const BipartiteGraph& g, int id) {
    return id < g.x_size() ? g.part_x()[static_cast<std::size_t>(id)]
                           : g.part_y()[static_cast<std::size_t>(id - g.x_size())];
}

std::vector<int> bfs_distances(const std::vector<std::vector<int>>& adj, int from) {
    std::vector<int> dist(adj.size(), -1);
    std::queue<int> queue;
    dist[static_cast<std::size_t>(from)] = 0;
    queue.push(from);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop();
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push(v);
            }
        }
    }
    return dist;
}

} // namespace

std::optional<int> distance(const BipartiteGraph& g, const std::string& u, const std::string& v) {
    int from = combined_id(g, u);
    int to = combined_id(g, v);
    auto dist = bfs_distances(combined_adjacency(g), from);
    int d = dist[static_cast<std::size_t>(to)];
    if (d < 0)
        return std::nullopt;
    return d;
}

bool is_connected(const BipartiteGraph& g) {
    if (g.empty())
        return false;
    auto dist = bfs_distances(combined_adjacency(g), 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

int diameter(const BipartiteGraph& g) {
    if (g.empty())
        throw DomainError("diameter of an empty graph is undefined");
    auto adj = combined_adjacency(g);
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto dist = bfs_distances(adj, v);
        for (int d : dist) {
            if (d < 0)
                throw DomainError("diameter of a disconnected graph is undefined");
            best = std::max(best, d);
        }
    }
    return best;
}

std::vector<BipartiteGraph> connected_components(const BipartiteGraph& g) {
    auto adj = combined_adjacency(g);
    std::vector<bool> seen(adj.size(), false);
    std::vector<BipartiteGraph> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (seen[static_cast<std::size_t>(v)])
            continue;
        std::set<std::string> labels;
        std::queue<int> queue;
        queue.push(v);
        seen[static_cast<std::size_t>(v)] = true;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            labels.insert(combined_label(g, u));
            for (int w : adj[static_cast<std::size_t>(u)]) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    queue.push(w);
                }
            }
        }
        out.push_back(induced_subgraph(g, labels));
    }
    return out;
}

BipartiteGraph induced_subgraph(const BipartiteGraph& g, const std::set<std::string>& vertices) {
    std::vector<std::string> xs, ys;
    for (const auto& label : g.part_x())
        if (vertices.count(label))
            xs.push_back(label);
    for (const auto& label : g.part_y())
        if (vertices.count(label))
            ys.push_back(label);
    if (xs.size() + ys.size() != vertices.size()) {
        for (const auto& label : vertices)
            if (!g.contains(label))
                throw DomainError("unknown vertex label " + quoted(label));
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& x : xs)
        for (const auto& y : ys)
            if (g.has_edge(x, y))
                edges.emplace_back(x, y);
    return BipartiteGraph(std::move(xs), std::move(ys), edges);
}

namespace {

std::vector<int> degree_vector(const BipartiteGraph& g, bool part_x) {
    std::vector<int> out;
    if (part_x) {
        for (int i = 0; i < g.x_size(); ++i)
            out.push_back(static_cast<int>(g.x_neighbors(i).size()));
    } else {
        for (int i = 0; i < g.y_size(); ++i)
            out.push_back(static_cast<int>(g.y_neighbors(i).size()));
    }
    return out;
}

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// Maps part A of g1 onto part C of g2 and part B onto D via backtracking.
// Adjacency is queried through the callbacks so both pairings share the code.
struct IsoSearch {
    int na, nb;
    std::vector<int> deg_a, deg_b, deg_c, deg_d;
    // adjacency as bitmasks over the opposite part (graphs are capped small)
    std::vector<std::uint64_t> adj_a, adj_c;
    std::vector<int> map_a, map_b;   // g1 index -> g2 index
    std::vector<bool> used_c, used_d;

    bool extend(int placed) {
        if (placed == na + nb)
            return true;
        // Alternate parts to keep constraints flowing; a-side first.
        if (placed < na) {
            int i = placed;
            for (int c = 0; c < na; ++c) {
                if (used_c[static_cast<std::size_t>(c)] ||
                    deg_a[static_cast<std::size_t>(i)] != deg_c[static_cast<std::size_t>(c)])
                    continue;
                map_a[static_cast<std::size_t>(i)] = c;
                used_c[static_cast<std::size_t>(c)] = true;
                if (extend(placed + 1))
                    return true;
                used_c[static_cast<std::size_t>(c)] = false;
            }
            return false;
        }
        int j = placed - na;
        for (int d = 0; d < nb; ++d) {
            if (used_d[static_cast<std::size_t>(d)] ||
                deg_b[static_cast<std::size_t>(j)] != deg_d[static_cast<std::size_t>(d)])
                continue;
            bool ok = true;
            for (int i = 0; i < na && ok; ++i) {
                bool e1 = (adj_a[static_cast<std::size_t>(i)] >> j) & 1;
                bool e2 = (adj_c[static_cast<std::size_t>(map_a[static_cast<std::size_t>(i)])] >> d) & 1;
                ok = (e1 == e2);
            }
            if (!ok)
                continue;
            map_b[static_cast<std::size_t>(j)] = d;
            used_d[static_cast<std::size_t>(d)] = true;
            if (extend(placed + 1))
                return true;
            used_d[static_cast<std::size_t>(d)] = false;
        }
        return false;
    }
};

std::optional<Isomorphism> try_pairing(const BipartiteGraph& g1, const BipartiteGraph& g2,
                                       bool swapped) {
    const auto& c_labels = swapped ? g2.part_y() : g2.part_x();
    const auto& d_labels = swapped ? g2.part_x() : g2.part_y();
    if (g1.x_size() != static_cast<int>(c_labels.size()) ||
        g1.y_size() != static_cast<int>(d_labels.size()))
        return std::nullopt;

    IsoSearch search;
    search.na = g1.x_size();
    search.nb = g1.y_size();
    search.deg_a = degree_vector(g1, true);
    search.deg_b = degree_vector(g1, false);
    search.deg_c = swapped ? degree_vector(g2, false) : degree_vector(g2, true);
    search.deg_d = swapped ? degree_vector(g2, true) : degree_vector(g2, false);
    if (sorted(search.deg_a) != sorted(search.deg_c) || sorted(search.deg_b) != sorted(search.deg_d))
        return std::nullopt;

    search.adj_a.assign(static_cast<std::size_t>(search.na), 0);
    for (int i = 0; i < search.na; ++i)
        for (int j : g1.x_neighbors(i))
            search.adj_a[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
    search.adj_c.assign(static_cast<std::size_t>(search.na), 0);
    for (int c = 0; c < search.na; ++c) {
        const auto& row = swapped ? g2.y_neighbors(c) : g2.x_neighbors(c);
        for (int d : row)
            search.adj_c[static_cast<std::size_t>(c)] |= std::uint64_t{1} << d;
    }
    search.map_a.assign(static_cast<std::size_t>(search.na), -1);
    search.map_b.assign(static_cast<std::size_t>(search.nb), -1);
    search.used_c.assign(static_cast<std::size_t>(search.na), false);
    search.used_d.assign(static_cast<std::size_t>(search.nb), false);
    if (!search.extend(0))
        return std::nullopt;

    Isomorphism iso;
    iso.swapped = swapped;
    for (int i = 0; i < search.na; ++i)
        iso.mapping[g1.part_x()[static_cast<std::size_t>(i)]] =
            c_labels[static_cast<std::size_t>(search.map_a[static_cast<std::size_t>(i)])];
    for (int j = 0; j < search.nb; ++j)
        iso.mapping[g1.part_y()[static_cast<std::size_t>(j)]] =
            d_labels[static_cast<std::size_t>(search.map_b[static_cast<std::size_t>(j)])];
    return iso;
}

} // namespace

std::optional<Isomorphism> find_isomorphism(const BipartiteGraph& g1, const BipartiteGraph& g2,
                                            int cap) {
    if (g1.vertex_count() > cap || g2.vertex_count() > cap)
        throw CapacityError("isomorphism search capped at " + std::to_string(cap) +
                            " vertices; raise the cap to proceed");
    if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
        return std::nullopt;
    if (auto iso = try_pairing(g1, g2, false))
        return iso;
    return try_pairing(g1, g2, true);
}

bool are_isomorphic(const BipartiteGraph& g1, const BipartiteGraph& g2, int cap) {
    return find_isomorphism(g1, g2, cap).has_value();
}

bool has_hamiltonian_cycle(const BipartiteGraph& g, int cap) {
    if (g.vertex_count() > cap)
        throw CapacityError("Hamiltonian-cycle search capped at " + std::to_string(cap) +
                            " vertices; raise the cap to proceed");
    const int n = g.vertex_count();
    if (n < 4 || g.x_size() != g.y_size())
        return false;
    auto adj = combined_adjacency(g);
    for (const auto& row : adj)
        if (row.size() < 2)
            return false;
    std::vector<std::uint32_t> mask(adj.size(), 0);
    for (int v = 0; v < n; ++v)
        for (int u : adj[static_cast<std::size_t>(v)])
            mask[static_cast<std::size_t>(v)] |= std::uint32_t{1} << u;

    // Fix vertex 0 as the cycle anchor.
    std::uint32_t visited = 1;
    auto dfs = [&](auto&& self, int v, int count) -> bool {
        if (count == n)
            return (mask[static_cast<std::size_t>(v)] & 1u) != 0;
        for (int u : adj[static_cast<std::size_t>(v)]) {
            if (visited & (std::uint32_t{1} << u))
                continue;
            visited |= std::uint32_t{1} << u;
            if (self(self, u, count + 1))
                return true;
            visited &= ~(std::uint32_t{1} << u);
        }
        return false;
    };
    return dfs(dfs, 0, 1);
}

bool is_62_chordal(const BipartiteGraph& g, int cap) {
    if (g.vertex_count() > cap)
        throw CapacityError("cycle enumeration capped at " + std::to_string(cap) +
                            " vertices; raise the cap to proceed");
    const int n = g.vertex_count();
    auto adj = combined_adjacency(g);
    std::vector<std::uint32_t> mask(adj.size(), 0);
    for (int v = 0; v < n; ++v)
        for (int u : adj[static_cast<std::size_t>(v)])
            mask[static_cast<std::size_t>(v)] |= std::uint32_t{1} << u;

    // Enumerate each simple cycle once: smallest vertex first, direction fixed
    // by second < last.
    std::vector<int> path;
    bool ok = true;
    auto dfs = [&](auto&& self, int start, int v, std::uint32_t visited) -> void {
        if (!ok)
            return;
        for (int u : adj[static_cast<std::size_t>(v)]) {
            if (u == start && path.size() >= 4) {
                if (path[1] < path.back()) {
                    const int len = static_cast<int>(path.size());
                    if (len >= 6) {
                        int induced = 0;
                        for (int w : path)
                            induced += std::popcount(mask[static_cast<std::size_t>(w)] & visited);
                        int chords = induced / 2 - len;
                        if (chords < 2) {
                            ok = false;
                            return;
                        }
                    }
                }
                continue;
            }
            if (u <= start || (visited & (std::uint32_t{1} << u)))
                continue;
            path.push_back(u);
            self(self, start, u, visited | (std::uint32_t{1} << u));
            path.pop_back();
            if (!ok)
                return;
        }
    };
    for (int s = 0; s < n && ok; ++s) {
        path.assign(1, s);
        dfs(dfs, s, s, std::uint32_t{1} << s);
    }
    return ok;
}

BipartiteGraph complete_bipartite(int m, int n) {
    if (m < 1 || n < 1)
        throw DomainError("complete bipartite graph needs both parts nonempty");
    std::vector<std::string> xs, ys;
    for (int i = 1; i <= m; ++i)
        xs.push_back("x" + std::to_string(i));
    for (int i = 1; i <= n; ++i)
        ys.push_back("y" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& x : xs)
        for (const auto& y : ys)
            edges.emplace_back(x, y);
    return BipartiteGraph(std::move(xs), std::move(ys), edges);
}

BipartiteGraph path_graph(int vertices) {
    if (vertices < 1)
        throw DomainError("path graph needs at least one vertex");
    std::vector<std::string> xs, ys, names;
    for (int i = 1; i <= vertices; ++i) {
        names.push_back("v" + std::to_string(i));
        (i % 2 ? xs : ys).push_back(names.back());
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i + 1 < vertices; ++i)
        edges.emplace_back(names[static_cast<std::size_t>(i + (i % 2 ? 1 : 0))],
                           names[static_cast<std::size_t>(i + (i % 2 ? 0 : 1))]);
    return BipartiteGraph(std::move(xs), std::move(ys), edges);
}

BipartiteGraph cycle_graph(int vertices) {
    if (vertices < 4 || vertices % 2 != 0)
        throw DomainError("bipartite cycle needs an even vertex count >= 4");
    std::vector<std::string> xs, ys, names;
    for (int i = 1; i <= vertices; ++i) {
        names.push_back("v" + std::to_string(i));
        (i % 2 ? xs : ys).push_back(names.back());
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < vertices; ++i) {
        int j = (i + 1) % vertices;
        int xi = i % 2 == 0 ? i : j;
        int yi = i % 2 == 0 ? j : i;
        edges.emplace_back(names[static_cast<std::size_t>(xi)], names[static_cast<std::size_t>(yi)]);
    }
    return BipartiteGraph(std::move(xs), std::move(ys), edges);
}

} // namespace parikh
