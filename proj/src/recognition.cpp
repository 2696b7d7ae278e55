#include "parikh/recognition.hpp"

#include <algorithm>
#include <set>

namespace parikh {

namespace {

// ---------------------------------------------------------------- ordering

// Interleaved backtracking: vertices are appended to both orders in rough
// proportion, and every newly decidable instance of the strong-ordering
// condition is checked on the spot.
struct OrderingSearch {
    const BipartiteGraph& g;
    std::vector<int> order_x, order_y; // placed part indices
    std::vector<int> pos_x, pos_y;     // part index -> placement position, -1 if open

    explicit OrderingSearch(const BipartiteGraph& graph)
        : g(graph),
          pos_x(static_cast<std::size_t>(graph.x_size()), -1),
          pos_y(static_cast<std::size_t>(graph.y_size()), -1) {}

    bool consistent_after_x(int xi) const {
        // xi is the current <_X-maximum; any earlier x with an edge pair
        // crossing one of xi's edges forces both straight edges.
        for (int x1 : order_x) {
            if (x1 == xi)
                continue;
            for (int y1 : g.x_neighbors(x1)) {
                int p1 = pos_y[static_cast<std::size_t>(y1)];
                if (p1 < 0)
                    continue;
                for (int y2 : g.x_neighbors(xi)) {
                    int p2 = pos_y[static_cast<std::size_t>(y2)];
                    if (p2 < 0 || p2 >= p1)
                        continue;
                    if (!g.has_edge_index(x1, y2) || !g.has_edge_index(xi, y1))
                        return false;
                }
            }
        }
        return true;
    }

    bool consistent_after_y(int yi) const {
        // yi is the current <_Y-maximum, so it plays the larger y role.
        for (int x1 : g.y_neighbors(yi)) {
            int q1 = pos_x[static_cast<std::size_t>(x1)];
            if (q1 < 0)
                continue;
            for (int x2 = 0; x2 < g.x_size(); ++x2) {
                int q2 = pos_x[static_cast<std::size_t>(x2)];
                if (q2 < 0 || q2 <= q1)
                    continue;
                for (int y2 : g.x_neighbors(x2)) {
                    if (y2 == yi || pos_y[static_cast<std::size_t>(y2)] < 0)
                        continue;
                    if (!g.has_edge_index(x1, y2) || !g.has_edge_index(x2, yi))
                        return false;
                }
            }
        }
        return true;
    }

    bool extend() {
        const int nx = g.x_size();
        const int ny = g.y_size();
        if (static_cast<int>(order_x.size()) == nx && static_cast<int>(order_y.size()) == ny)
            return true;
        bool pick_x;
        if (static_cast<int>(order_x.size()) == nx)
            pick_x = false;
        else if (static_cast<int>(order_y.size()) == ny)
            pick_x = true;
        else
            pick_x = static_cast<long>(order_x.size()) * ny <= static_cast<long>(order_y.size()) * nx;
        if (pick_x) {
            for (int xi = 0; xi < nx; ++xi) {
                if (pos_x[static_cast<std::size_t>(xi)] >= 0)
                    continue;
                pos_x[static_cast<std::size_t>(xi)] = static_cast<int>(order_x.size());
                order_x.push_back(xi);
                if (consistent_after_x(xi) && extend())
                    return true;
                order_x.pop_back();
                pos_x[static_cast<std::size_t>(xi)] = -1;
            }
        } else {
            for (int yi = 0; yi < ny; ++yi) {
                if (pos_y[static_cast<std::size_t>(yi)] >= 0)
                    continue;
                pos_y[static_cast<std::size_t>(yi)] = static_cast<int>(order_y.size());
                order_y.push_back(yi);
                if (consistent_after_y(yi) && extend())
                    return true;
                order_y.pop_back();
                pos_y[static_cast<std::size_t>(yi)] = -1;
            }
        }
        return false;
    }
};

} // namespace

std::optional<StrongOrdering> find_strong_ordering(const BipartiteGraph& g, int cap) {
    if (g.empty())
        throw DomainError("strong-ordering search needs a nonempty graph");
    if (!is_connected(g))
        throw DomainError("strong-ordering search needs a connected graph; decompose first");
    if (g.vertex_count() > cap)
        throw CapacityError("strong-ordering search capped at " + std::to_string(cap) +
                            " vertices; raise the cap to proceed");
    OrderingSearch search(g);
    if (!search.extend())
        return std::nullopt;
    StrongOrdering so;
    for (int xi : search.order_x)
        so.order_x.push_back(g.part_x()[static_cast<std::size_t>(xi)]);
    for (int yi : search.order_y)
        so.order_y.push_back(g.part_y()[static_cast<std::size_t>(yi)]);
    return so;
}

// ---------------------------------------------------------- decomposition

std::vector<std::string> IntervalDecomposition::block_x(int p) const {
    const auto& iv = blocks_x[static_cast<std::size_t>(p)];
    return {ordering.order_x.begin() + iv.lo, ordering.order_x.begin() + iv.hi};
}

std::vector<std::string> IntervalDecomposition::block_y(int p) const {
    const auto& iv = blocks_y[static_cast<std::size_t>(p)];
    return {ordering.order_y.begin() + iv.lo, ordering.order_y.begin() + iv.hi};
}

namespace {

IndexInterval to_interval(const std::vector<int>& ranks, const char* what) {
    if (ranks.empty())
        throw std::logic_error(std::string("empty block in interval decomposition: ") + what);
    auto [lo, hi] = std::minmax_element(ranks.begin(), ranks.end());
    if (*hi - *lo + 1 != static_cast<int>(ranks.size()))
        throw std::logic_error(std::string("non-contiguous block in interval decomposition: ") +
                               what);
    return {*lo, *hi + 1};
}

} // namespace

IntervalDecomposition interval_decomposition(const BipartiteGraph& g, const StrongOrdering& so) {
    if (!is_connected(g))
        throw DomainError("interval decomposition needs a connected graph");
    if (g.x_size() == 0 || g.y_size() == 0)
        throw DomainError("interval decomposition needs both parts nonempty");
    if (!is_strong_ordering(g, so))
        throw DomainError("ordering is not strong");

    const int nx = g.x_size();
    const int ny = g.y_size();
    // adjacency in rank coordinates
    std::vector<int> xi_of_rank(static_cast<std::size_t>(nx));
    std::vector<int> yi_of_rank(static_cast<std::size_t>(ny));
    std::vector<int> rank_of_xi(static_cast<std::size_t>(nx));
    std::vector<int> rank_of_yi(static_cast<std::size_t>(ny));
    for (int r = 0; r < nx; ++r) {
        int xi = g.x_index(so.order_x[static_cast<std::size_t>(r)]);
        xi_of_rank[static_cast<std::size_t>(r)] = xi;
        rank_of_xi[static_cast<std::size_t>(xi)] = r;
    }
    for (int r = 0; r < ny; ++r) {
        int yi = g.y_index(so.order_y[static_cast<std::size_t>(r)]);
        yi_of_rank[static_cast<std::size_t>(r)] = yi;
        rank_of_yi[static_cast<std::size_t>(yi)] = r;
    }
    auto adjacent = [&](int xr, int yr) {
        return g.has_edge_index(xi_of_rank[static_cast<std::size_t>(xr)],
                                yi_of_rank[static_cast<std::size_t>(yr)]);
    };

    std::vector<bool> placed_x(static_cast<std::size_t>(nx), false);
    std::vector<bool> placed_y(static_cast<std::size_t>(ny), false);
    int placed_x_count = 0, placed_y_count = 0;

    IntervalDecomposition out;
    out.ordering = so;
    auto push_blocks = [&](const std::vector<int>& bx, const std::vector<int>& by) {
        out.blocks_x.push_back(to_interval(bx, "X"));
        out.blocks_y.push_back(to_interval(by, "Y"));
        for (int r : bx)
            if (!placed_x[static_cast<std::size_t>(r)]) {
                placed_x[static_cast<std::size_t>(r)] = true;
                ++placed_x_count;
            }
        for (int r : by)
            if (!placed_y[static_cast<std::size_t>(r)]) {
                placed_y[static_cast<std::size_t>(r)] = true;
                ++placed_y_count;
            }
    };

    // Base step: neighbors of the last vertex of each part.
    std::vector<int> bx, by;
    for (int r = 0; r < nx; ++r)
        if (adjacent(r, ny - 1))
            bx.push_back(r);
    for (int r = 0; r < ny; ++r)
        if (adjacent(nx - 1, r))
            by.push_back(r);
    push_blocks(bx, by);

    int guard = 0;
    while (placed_x_count < nx || placed_y_count < ny) {
        if (++guard > nx + ny)
            throw std::logic_error("interval decomposition failed to make progress");
        // Last vertices still incident on an edge outside the grown subgraph.
        auto incident_uncovered_x = [&](int xr) {
            for (int yi : g.x_neighbors(xi_of_rank[static_cast<std::size_t>(xr)])) {
                int yr = rank_of_yi[static_cast<std::size_t>(yi)];
                if (!placed_x[static_cast<std::size_t>(xr)] || !placed_y[static_cast<std::size_t>(yr)])
                    return true;
            }
            return false;
        };
        auto incident_uncovered_y = [&](int yr) {
            for (int xi : g.y_neighbors(yi_of_rank[static_cast<std::size_t>(yr)])) {
                int xr = rank_of_xi[static_cast<std::size_t>(xi)];
                if (!placed_y[static_cast<std::size_t>(yr)] || !placed_x[static_cast<std::size_t>(xr)])
                    return true;
            }
            return false;
        };
        int x_star = nx - 1;
        while (x_star >= 0 && !incident_uncovered_x(x_star))
            --x_star;
        int y_star = ny - 1;
        while (y_star >= 0 && !incident_uncovered_y(y_star))
            --y_star;
        if (x_star < 0 || y_star < 0)
            throw std::logic_error("interval decomposition lost its frontier");
        bx.clear();
        by.clear();
        for (int r = 0; r <= x_star; ++r)
            if (adjacent(r, y_star))
                bx.push_back(r);
        for (int r = 0; r <= y_star; ++r)
            if (adjacent(x_star, r))
                by.push_back(r);
        push_blocks(bx, by);
    }

    if (!check_interval_decomposition(g, out))
        throw std::logic_error("interval decomposition violated its block properties");
    return out;
}

bool check_interval_decomposition(const BipartiteGraph& g, const IntervalDecomposition& d) {
    const int n = d.steps();
    if (n == 0 || static_cast<int>(d.blocks_y.size()) != n)
        return false;
    const int nx = static_cast<int>(d.ordering.order_x.size());
    const int ny = static_cast<int>(d.ordering.order_y.size());

    auto segments_ok = [](const std::vector<IndexInterval>& blocks, int total) {
        int union_lo = total; // union so far is [union_lo, total)
        for (const auto& b : blocks) {
            if (b.lo < 0 || b.hi > total || b.size() <= 0)
                return false;
            // union must stay an end segment, and the block must be an
            // initial segment of it
            if (b.hi != total && b.hi < union_lo)
                return false; // would leave a hole
            union_lo = std::min(union_lo, b.lo);
            if (b.lo != union_lo)
                return false; // not an initial segment of the union
        }
        return union_lo == 0;
    };
    if (!segments_ok(d.blocks_x, nx) || !segments_ok(d.blocks_y, ny))
        return false;

    auto contains = [](const IndexInterval& a, const IndexInterval& b) {
        return b.lo <= a.lo && a.hi <= b.hi; // a subseteq b
    };
    for (int p = 0; p + 1 < n; ++p) {
        if (contains(d.blocks_x[static_cast<std::size_t>(p)], d.blocks_x[static_cast<std::size_t>(p + 1)]))
            return false;
        if (contains(d.blocks_y[static_cast<std::size_t>(p)], d.blocks_y[static_cast<std::size_t>(p + 1)]))
            return false;
        bool x_new = d.blocks_x[static_cast<std::size_t>(p + 1)].lo < d.blocks_x[static_cast<std::size_t>(p)].lo;
        bool y_new = d.blocks_y[static_cast<std::size_t>(p + 1)].lo < d.blocks_y[static_cast<std::size_t>(p)].lo;
        if (!x_new && !y_new)
            return false;
    }

    // Edge accumulation: E(G_p) = E(G_{p-1}) u (X_p x Y_p).
    std::set<std::pair<int, int>> covered;
    int union_x_lo = nx, union_y_lo = ny;
    for (int p = 0; p < n; ++p) {
        const auto& ix = d.blocks_x[static_cast<std::size_t>(p)];
        const auto& iy = d.blocks_y[static_cast<std::size_t>(p)];
        for (int xr = ix.lo; xr < ix.hi; ++xr) {
            for (int yr = iy.lo; yr < iy.hi; ++yr) {
                if (!g.has_edge(d.ordering.order_x[static_cast<std::size_t>(xr)],
                                d.ordering.order_y[static_cast<std::size_t>(yr)]))
                    return false; // block product not fully in E
                covered.insert({xr, yr});
            }
        }
        union_x_lo = std::min(union_x_lo, ix.lo);
        union_y_lo = std::min(union_y_lo, iy.lo);
        for (int xr = union_x_lo; xr < nx; ++xr) {
            for (int yr = union_y_lo; yr < ny; ++yr) {
                bool edge = g.has_edge(d.ordering.order_x[static_cast<std::size_t>(xr)],
                                       d.ordering.order_y[static_cast<std::size_t>(yr)]);
                if (edge && !covered.count({xr, yr}))
                    return false; // induced edge not accumulated yet
            }
        }
    }
    return union_x_lo == 0 && union_y_lo == 0;
}

// ---------------------------------------------------------------- synthesis

namespace {

std::vector<std::string> intersect_in_order(const std::vector<std::string>& block,
                                            const std::set<std::string>& other) {
    std::vector<std::string> out;
    for (const auto& v : block)
        if (other.count(v))
            out.push_back(v);
    return out;
}

std::vector<std::string> subtract_in_order(const std::vector<std::string>& block,
                                           const std::set<std::string>& other) {
    std::vector<std::string> out;
    for (const auto& v : block)
        if (!other.count(v))
            out.push_back(v);
    return out;
}

struct WordBuilder {
    std::vector<Letter> letters;
    std::vector<std::string> vertex_at; // graph label per position

    int count_letter(Letter a) const {
        return static_cast<int>(std::count(letters.begin(), letters.end(), a));
    }

    // Insertion index immediately after the k-th occurrence of `a`.
    int after_kth(Letter a, int k) const {
        int seen = 0;
        for (int i = 0; i < static_cast<int>(letters.size()); ++i)
            if (letters[static_cast<std::size_t>(i)] == a && ++seen == k)
                return i + 1;
        throw std::logic_error("synthesis insertion point not found");
    }

    int before_first(Letter a) const {
        for (int i = 0; i < static_cast<int>(letters.size()); ++i)
            if (letters[static_cast<std::size_t>(i)] == a)
                return i;
        throw std::logic_error("synthesis insertion anchor letter missing");
    }

    void insert_block(int pos, Letter a, const std::vector<std::string>& vertices) {
        letters.insert(letters.begin() + pos, vertices.size(), a);
        vertex_at.insert(vertex_at.begin() + pos, vertices.begin(), vertices.end());
    }

    std::map<std::string, ParikhVertex> embedding(int alphabet_size) const {
        std::map<std::string, ParikhVertex> out;
        std::vector<int> seen(static_cast<std::size_t>(alphabet_size) + 1, 0);
        for (int i = 0; i < static_cast<int>(letters.size()); ++i) {
            Letter a = letters[static_cast<std::size_t>(i)];
            out[vertex_at[static_cast<std::size_t>(i)]] = {a, ++seen[static_cast<std::size_t>(a)]};
        }
        return out;
    }
};

int distinct_letters_under(const WordBuilder& b, const std::set<std::string>& labels) {
    std::set<Letter> letters;
    for (int i = 0; i < static_cast<int>(b.letters.size()); ++i)
        if (labels.count(b.vertex_at[static_cast<std::size_t>(i)]))
            letters.insert(b.letters[static_cast<std::size_t>(i)]);
    return static_cast<int>(letters.size());
}

void verify_embedding(const BipartiteGraph& g, const WordBuilder& b) {
    const int n = static_cast<int>(b.letters.size());
    if (n != g.vertex_count())
        throw std::logic_error("synthesis produced a word of the wrong length");
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            bool word_edge = b.letters[static_cast<std::size_t>(j)] ==
                             b.letters[static_cast<std::size_t>(i)] + 1;
            bool graph_edge = g.has_edge(b.vertex_at[static_cast<std::size_t>(i)],
                                         b.vertex_at[static_cast<std::size_t>(j)]);
            if (word_edge != graph_edge)
                throw std::logic_error("synthesis embedding mismatch between word and graph");
        }
    }
}

} // namespace

SynthesisResult synthesize_word(const BipartiteGraph& g, int cap) {
    if (g.empty())
        throw DomainError("synthesis needs a nonempty graph");
    if (!is_connected(g))
        throw DomainError("synthesis needs a connected graph; use synthesize_any instead");

    if (g.vertex_count() == 1) {
        std::string label = g.x_size() == 1 ? g.part_x()[0] : g.part_y()[0];
        Word word(Alphabet(1), {1});
        SynthesisTrace trace;
        trace.ordering.order_x = g.part_x();
        trace.ordering.order_y = g.part_y();
        trace.decomposition.ordering = trace.ordering;
        trace.steps.push_back({word, {{label, ParikhVertex{1, 1}}}, 1});
        return {word, trace.steps.back().embedding, trace};
    }

    auto so = find_strong_ordering(g, cap);
    if (!so)
        throw NotRepresentableError("graph admits no strong ordering, hence no representing word");
    IntervalDecomposition decomp = interval_decomposition(g, *so);

    WordBuilder b;
    SynthesisTrace trace;
    trace.ordering = *so;
    trace.decomposition = decomp;
    trace.part_x_low = true; // part X seeded onto a_1

    // Base step: w_1 = a_1^{|X_1|} a_2^{|Y_1|}.
    auto x1 = decomp.block_x(0);
    auto y1 = decomp.block_y(0);
    b.insert_block(0, 1, x1);
    b.insert_block(static_cast<int>(x1.size()), 2, y1);
    int s = 2;
    bool h_is_y = true; // the part whose block sits on the top letter a_s

    auto snapshot = [&](int step) {
        std::set<std::string> block_labels;
        for (const auto& v : decomp.block_x(step))
            block_labels.insert(v);
        for (const auto& v : decomp.block_y(step))
            block_labels.insert(v);
        trace.steps.push_back({Word(Alphabet(s), b.letters), b.embedding(s),
                               distinct_letters_under(b, block_labels)});
    };
    snapshot(0);

    for (int p = 1; p < decomp.steps(); ++p) {
        auto h_prev = h_is_y ? decomp.block_y(p - 1) : decomp.block_x(p - 1);
        auto h_next = h_is_y ? decomp.block_y(p) : decomp.block_x(p);
        auto l_prev = h_is_y ? decomp.block_x(p - 1) : decomp.block_y(p - 1);
        auto l_next = h_is_y ? decomp.block_x(p) : decomp.block_y(p);
        std::set<std::string> h_prev_set(h_prev.begin(), h_prev.end());
        std::set<std::string> l_prev_set(l_prev.begin(), l_prev.end());
        auto hi = intersect_in_order(h_next, h_prev_set); // kept, an initial segment of H_p
        auto hn = subtract_in_order(h_next, h_prev_set);  // new, preceding all old in the order
        auto li = intersect_in_order(l_next, l_prev_set);
        auto ln = subtract_in_order(l_next, l_prev_set);

        const int c = b.count_letter(s);
        struct Insertion {
            int pos;
            Letter letter;
            std::vector<std::string> vertices;
        };
        std::vector<Insertion> ins;
        if (static_cast<int>(hi.size()) <= c) {
            // The kept high block sits inside the a_s run: the binary-style
            // insertion applies (also covers the "back to the binary case"
            // subcase of the ternary configuration).
            if (!hn.empty()) {
                int pos = li.empty() ? b.before_first(s - 1)
                                     : b.after_kth(s - 1, static_cast<int>(li.size()));
                ins.push_back({pos, s, hn});
            }
            if (!ln.empty()) {
                int pos = hi.empty() ? b.before_first(s)
                                     : b.after_kth(s, static_cast<int>(hi.size()));
                ins.push_back({pos, static_cast<Letter>(s + 1), ln});
            }
        } else {
            // Kept high block spills onto a_{s-2}: grow a_{s-1} in place.
            if (!hn.empty()) {
                int pos = li.empty() ? b.before_first(s - 1)
                                     : b.after_kth(s - 1, static_cast<int>(li.size()));
                ins.push_back({pos, s, hn});
            }
            if (!ln.empty()) {
                int pos = b.after_kth(s - 2, static_cast<int>(hi.size()) - c);
                ins.push_back({pos, static_cast<Letter>(s - 1), ln});
            }
        }
        // Apply right-to-left so earlier indices stay valid; on a tie the
        // lower letter must end up first.
        std::stable_sort(ins.begin(), ins.end(), [](const Insertion& a, const Insertion& b2) {
            return a.pos < b2.pos || (a.pos == b2.pos && a.letter < b2.letter);
        });
        for (auto it = ins.rbegin(); it != ins.rend(); ++it)
            b.insert_block(it->pos, it->letter, it->vertices);
        bool introduced_new_letter =
            std::any_of(ins.begin(), ins.end(), [&](const Insertion& i) { return i.letter == s + 1; });
        if (introduced_new_letter) {
            ++s;
            h_is_y = !h_is_y;
        }
        snapshot(p);
    }

    verify_embedding(g, b);
    Word word(Alphabet(s), b.letters);
    return {word, b.embedding(s), trace};
}

// --------------------------------------------------------------- recognizers

std::optional<Word> recognize_binary(const BipartiteGraph& g) {
    if (g.empty())
        throw DomainError("binary recognition needs a nonempty graph");
    if (!is_connected(g))
        throw DomainError("binary recognition needs a connected graph");
    for (bool use_x : {true, false}) {
        const auto& side = use_x ? g.part_x() : g.part_y();
        if (side.empty())
            continue;
        std::vector<std::pair<std::set<std::string>, std::string>> nbhd;
        for (const auto& v : side)
            nbhd.emplace_back(neighbors(g, v), v);
        std::sort(nbhd.begin(), nbhd.end(), [](const auto& a, const auto& b) {
            if (a.first.size() != b.first.size())
                return a.first.size() > b.first.size();
            return a.second < b.second;
        });
        bool chain = true;
        for (std::size_t i = 0; i + 1 < nbhd.size() && chain; ++i) {
            chain = std::includes(nbhd[i].first.begin(), nbhd[i].first.end(),
                                  nbhd[i + 1].first.begin(), nbhd[i + 1].first.end());
        }
        if (!chain)
            continue;
        std::vector<Letter> letters;
        for (std::size_t i = 0; i < nbhd.size(); ++i) {
            letters.push_back(1);
            std::size_t next = i + 1 < nbhd.size() ? nbhd[i + 1].first.size() : 0;
            for (std::size_t k = next; k < nbhd[i].first.size(); ++k)
                letters.push_back(2);
        }
        return Word(Alphabet(2), std::move(letters));
    }
    return std::nullopt;
}

bool check_binary_via_chordality(const BipartiteGraph& g, int cap) {
    if (g.empty())
        throw DomainError("chordality recognition needs a nonempty graph");
    if (!is_connected(g))
        throw DomainError("chordality recognition needs a connected graph");
    if (!is_62_chordal(g, cap))
        return false;
    const int n = g.vertex_count();
    if (n == 1)
        return true; // no adjacent pair to ask for; K_1 is G(a)
    for (int xi = 0; xi < g.x_size(); ++xi) {
        int dx = static_cast<int>(g.x_neighbors(xi).size());
        for (int yi : g.x_neighbors(xi)) {
            int dy = static_cast<int>(g.y_neighbors(yi).size());
            if (dx + dy == n)
                return true;
        }
    }
    return false;
}

namespace {

struct TernaryWitness {
    std::vector<std::string> y_order;
    std::vector<std::pair<std::set<std::string>, std::string>> initial_types; // ascending chain
    std::vector<std::pair<std::set<std::string>, std::string>> end_types;     // ascending chain
};

bool is_chain_ascending(const std::vector<std::pair<std::set<std::string>, std::string>>& v) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (!std::includes(v[i + 1].first.begin(), v[i + 1].first.end(), v[i].first.begin(),
                           v[i].first.end()))
            return false;
    }
    return true;
}

// Searches for a linear order on `ys` making every neighborhood in
// `initial` a prefix and every neighborhood in `end` a suffix. Position
// windows are forced by the set sizes, so a greedy interval assignment
// settles feasibility exactly.
std::optional<std::vector<std::string>> consistent_order(
    const std::vector<std::string>& ys,
    const std::vector<std::pair<std::set<std::string>, std::string>>& initial,
    const std::vector<std::pair<std::set<std::string>, std::string>>& end_types) {
    const int m = static_cast<int>(ys.size());
    std::vector<int> lo(static_cast<std::size_t>(m), 1), hi(static_cast<std::size_t>(m), m);
    for (int i = 0; i < m; ++i) {
        const std::string& y = ys[static_cast<std::size_t>(i)];
        for (const auto& [nb, x] : initial) {
            int k = static_cast<int>(nb.size());
            if (nb.count(y))
                hi[static_cast<std::size_t>(i)] = std::min(hi[static_cast<std::size_t>(i)], k);
            else
                lo[static_cast<std::size_t>(i)] = std::max(lo[static_cast<std::size_t>(i)], k + 1);
        }
        for (const auto& [nb, x] : end_types) {
            int k = static_cast<int>(nb.size());
            if (nb.count(y))
                lo[static_cast<std::size_t>(i)] = std::max(lo[static_cast<std::size_t>(i)], m - k + 1);
            else
                hi[static_cast<std::size_t>(i)] = std::min(hi[static_cast<std::size_t>(i)], m - k);
        }
        if (lo[static_cast<std::size_t>(i)] > hi[static_cast<std::size_t>(i)])
            return std::nullopt;
    }
    std::vector<std::string> order;
    std::vector<bool> used(static_cast<std::size_t>(m), false);
    for (int p = 1; p <= m; ++p) {
        int best = -1;
        for (int i = 0; i < m; ++i) {
            if (used[static_cast<std::size_t>(i)] || lo[static_cast<std::size_t>(i)] > p ||
                hi[static_cast<std::size_t>(i)] < p)
                continue;
            if (best < 0 || hi[static_cast<std::size_t>(i)] < hi[static_cast<std::size_t>(best)])
                best = i;
        }
        if (best < 0)
            return std::nullopt;
        used[static_cast<std::size_t>(best)] = true;
        order.push_back(ys[static_cast<std::size_t>(best)]);
    }
    return order;
}

std::optional<TernaryWitness> ternary_search(const BipartiteGraph& g,
                                             const std::vector<std::string>& xs,
                                             const std::vector<std::string>& ys) {
    const int k = static_cast<int>(xs.size());
    if (k > 20)
        throw CapacityError("ternary type-assignment search capped at 20 vertices per part");
    if (k == 0 || ys.empty())
        return std::nullopt;
    std::vector<std::set<std::string>> nbhd;
    for (const auto& x : xs)
        nbhd.push_back(neighbors(g, x));
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
        TernaryWitness w;
        for (int i = 0; i < k; ++i) {
            auto& side = (mask >> i) & 1 ? w.end_types : w.initial_types;
            side.emplace_back(nbhd[static_cast<std::size_t>(i)], xs[static_cast<std::size_t>(i)]);
        }
        if (w.initial_types.empty() || w.end_types.empty())
            continue; // all one type is the binary case, handled upstream
        auto by_size = [](const auto& a, const auto& b) {
            if (a.first.size() != b.first.size())
                return a.first.size() < b.first.size();
            return a.second < b.second;
        };
        std::sort(w.initial_types.begin(), w.initial_types.end(), by_size);
        std::sort(w.end_types.begin(), w.end_types.end(), by_size);
        if (!is_chain_ascending(w.initial_types) || !is_chain_ascending(w.end_types))
            continue;
        auto order = consistent_order(ys, w.initial_types, w.end_types);
        if (!order)
            continue;
        w.y_order = *order;
        return w;
    }
    return std::nullopt;
}

Word merge_ternary(const TernaryWitness& w) {
    const int m = static_cast<int>(w.y_order.size());
    // c's of the bc-projection and a's of the ab-projection, bucketed by the
    // number of b's preceding them.
    std::vector<int> c_gap(static_cast<std::size_t>(m) + 1, 0);
    std::vector<int> a_gap(static_cast<std::size_t>(m) + 1, 0);
    // v = b^{|N1|} c b^{|N2|-|N1|} c ... : the i-th c follows |N_i| b's.
    for (const auto& [nb, x] : w.initial_types)
        ++c_gap[nb.size()];
    // v' = b^{m-|N_k'|} a ... a b^{|N_1|} : each a precedes its suffix.
    for (const auto& [nb, x] : w.end_types)
        ++a_gap[static_cast<std::size_t>(m) - nb.size()];
    std::vector<Letter> letters;
    for (int gap = 0; gap <= m; ++gap) {
        letters.insert(letters.end(), static_cast<std::size_t>(c_gap[static_cast<std::size_t>(gap)]), 3);
        letters.insert(letters.end(), static_cast<std::size_t>(a_gap[static_cast<std::size_t>(gap)]), 1);
        if (gap < m)
            letters.push_back(2);
    }
    return Word(Alphabet(3), std::move(letters));
}

} // namespace

std::optional<Word> recognize_ternary(const BipartiteGraph& g) {
    if (g.empty())
        throw DomainError("ternary recognition needs a nonempty graph");
    if (!is_connected(g))
        throw DomainError("ternary recognition needs a connected graph");
    if (auto binary = recognize_binary(g))
        return Word(Alphabet(3), binary->letters()); // binary words embed into the ternary alphabet
    for (bool y_role_is_part_y : {true, false}) {
        const auto& ys = y_role_is_part_y ? g.part_y() : g.part_x();
        const auto& xs = y_role_is_part_y ? g.part_x() : g.part_y();
        if (auto witness = ternary_search(g, xs, ys))
            return merge_ternary(*witness);
    }
    return std::nullopt;
}

// --------------------------------------------------------------- composition

Word compose_components(const std::vector<Word>& words) {
    for (const auto& w : words)
        if (w.empty())
            throw DomainError("composition blocks must be nonempty words");
    // Later blocks receive strictly smaller letter ranges, sized by the span
    // of each block's support so internal gaps survive the relabeling.
    std::vector<int> lo(words.size()), span(words.size());
    int total = 0;
    for (std::size_t i = 0; i < words.size(); ++i) {
        auto supp = support(words[i]);
        lo[i] = *supp.begin();
        span[i] = *supp.rbegin() - lo[i] + 1;
        total += span[i];
    }
    if (total == 0)
        return Word(Alphabet(1), {});
    std::vector<Letter> letters;
    int below = total;
    for (std::size_t i = 0; i < words.size(); ++i) {
        below -= span[i];
        for (Letter a : words[i].letters())
            letters.push_back(a - lo[i] + 1 + below);
    }
    return Word(Alphabet(total), std::move(letters));
}

std::optional<Word> synthesize_any(const BipartiteGraph& g, int cap) {
    std::vector<Word> blocks;
    for (const auto& component : connected_components(g)) {
        if (component.vertex_count() == 1) {
            blocks.emplace_back(Alphabet(1), std::vector<Letter>{1});
            continue;
        }
        try {
            blocks.push_back(synthesize_word(component, cap).word);
        } catch (const NotRepresentableError&) {
            return std::nullopt;
        }
    }
    return compose_components(blocks);
}

} // namespace parikh
