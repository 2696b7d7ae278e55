#include "parikh/parikh_core.hpp"

#include <algorithm>

namespace parikh {

std::string ParikhVertex::label(const Alphabet& alphabet) const {
    return alphabet.letter_name(letter) + ":" + std::to_string(occurrence);
}

int ParikhGraph::position_of_vertex(const ParikhVertex& v) const {
    for (int p = 1; p <= word.length(); ++p)
        if (vertex_by_position[static_cast<std::size_t>(p - 1)] == v)
            return p;
    throw DomainError("vertex (" + std::to_string(v.letter) + "," + std::to_string(v.occurrence) +
                      ") does not belong to this Parikh graph");
}

ParikhGraph parikh_graph(const Word& w) {
    if (w.empty())
        throw DomainError("Parikh graph of the empty word is undefined");
    const int s = w.alphabet().size();
    const int n = w.length();

    std::vector<ParikhVertex> by_position;
    std::vector<int> seen(static_cast<std::size_t>(s) + 1, 0);
    for (int i = 0; i < n; ++i) {
        Letter a = w.at(i);
        by_position.push_back({a, ++seen[static_cast<std::size_t>(a)]});
    }

    std::vector<std::string> xs, ys;
    for (Letter a = 1; a <= s; ++a) {
        auto& side = (a % 2 == 1) ? xs : ys;
        for (int l = 1; l <= seen[static_cast<std::size_t>(a)]; ++l)
            side.push_back(ParikhVertex{a, l}.label(w.alphabet()));
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Letter lo = w.at(i);
            Letter hi = w.at(j);
            if (hi != lo + 1)
                continue;
            const ParikhVertex& u = by_position[static_cast<std::size_t>(i)];
            const ParikhVertex& v = by_position[static_cast<std::size_t>(j)];
            const ParikhVertex& xv = (lo % 2 == 1) ? u : v;
            const ParikhVertex& yv = (lo % 2 == 1) ? v : u;
            edges.emplace_back(xv.label(w.alphabet()), yv.label(w.alphabet()));
        }
    }
    ParikhGraph out{w, BipartiteGraph(std::move(xs), std::move(ys), edges), std::move(by_position)};
    return out;
}

StrongOrdering canonical_strong_ordering(const Word& w) {
    if (w.empty())
        throw DomainError("canonical strong ordering of the empty word is undefined");
    auto supp = support(w);
    Letter max_letter = *supp.rbegin();
    for (Letter a = 1; a <= max_letter; ++a) {
        if (!supp.count(a))
            throw DomainError("support has a gap at letter " + std::to_string(a) +
                              "; relabel the word to consecutive letters starting at a_1");
    }
    const int s = w.alphabet().size();
    StrongOrdering so;
    auto append_letters = [&](std::vector<std::string>& order, Letter top) {
        for (Letter a = top; a >= 1; a -= 2)
            for (int l = 1; l <= w.count(a); ++l)
                order.push_back(ParikhVertex{a, l}.label(w.alphabet()));
    };
    Letter top_odd = 2 * ((s + 1) / 2) - 1;
    Letter top_even = 2 * (s / 2);
    append_letters(so.order_x, top_odd);
    if (top_even >= 2)
        append_letters(so.order_y, top_even);
    return so;
}

bool is_strong_ordering(const BipartiteGraph& g, const StrongOrdering& so) {
    auto check_cover = [](const std::vector<std::string>& order,
                          const std::vector<std::string>& part, const char* name) {
        if (std::set<std::string>(order.begin(), order.end()) !=
                std::set<std::string>(part.begin(), part.end()) ||
            order.size() != part.size())
            throw DomainError(std::string("ordering does not cover part ") + name + " exactly");
    };
    check_cover(so.order_x, g.part_x(), "X");
    check_cover(so.order_y, g.part_y(), "Y");

    std::map<std::string, int> rank_x, rank_y;
    for (int i = 0; i < static_cast<int>(so.order_x.size()); ++i)
        rank_x[so.order_x[static_cast<std::size_t>(i)]] = i;
    for (int i = 0; i < static_cast<int>(so.order_y.size()); ++i)
        rank_y[so.order_y[static_cast<std::size_t>(i)]] = i;

    auto edge_list = g.edges();
    for (const auto& [x, y] : edge_list) {
        for (const auto& [x2, y2] : edge_list) {
            if (rank_x[x] < rank_x[x2] && rank_y[y2] < rank_y[y]) {
                if (!g.has_edge(x, y2) || !g.has_edge(x2, y))
                    return false;
            }
        }
    }
    return true;
}

std::vector<int> binary_permutation(const Word& w) {
    if (w.alphabet().size() != 2)
        throw DomainError("binary permutation requires an alphabet of exactly two letters");
    const int count_b = w.count(2);
    std::vector<int> tau;
    int seen_a = 0, seen_b = 0;
    for (Letter a : w.letters())
        tau.push_back(a == 2 ? ++seen_b : count_b + ++seen_a);
    return tau;
}

bool is_permutation_realization(const BipartiteGraph& g,
                                const std::vector<std::string>& vertex_order,
                                const std::vector<int>& tau) {
    const int n = g.vertex_count();
    if (static_cast<int>(vertex_order.size()) != n || static_cast<int>(tau.size()) != n)
        throw DomainError("vertex order and permutation must both cover the graph");
    std::set<std::string> cover(vertex_order.begin(), vertex_order.end());
    if (static_cast<int>(cover.size()) != n)
        throw DomainError("vertex order repeats a label");
    for (const auto& label : vertex_order)
        if (!g.contains(label))
            throw DomainError("unknown vertex label '" + label + "' in vertex order");
    std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
    for (int t : tau) {
        if (t < 1 || t > n || hit[static_cast<std::size_t>(t)])
            throw DomainError("tau is not a permutation of 1..n");
        hit[static_cast<std::size_t>(t)] = true;
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            bool adjacent = g.has_edge(vertex_order[static_cast<std::size_t>(i)],
                                       vertex_order[static_cast<std::size_t>(j)]);
            bool inverted = tau[static_cast<std::size_t>(i)] > tau[static_cast<std::size_t>(j)];
            if (adjacent != inverted)
                return false;
        }
    }
    return true;
}

Word core_sigma(const Word& w) {
    const int s = w.alphabet().size();
    const int n = w.length();
    std::vector<bool> keep(static_cast<std::size_t>(n), false);
    for (Letter k = 1; k <= s - 1; ++k) {
        // An a_k contributes to |w|_{a_k a_{k+1}} iff some a_{k+1} follows it;
        // an a_{k+1} contributes iff some a_k precedes it. These are exactly
        // the positions of core(w, a_k a_{k+1}).
        std::vector<bool> high_after(static_cast<std::size_t>(n) + 1, false);
        for (int i = n - 1; i >= 0; --i)
            high_after[static_cast<std::size_t>(i)] =
                high_after[static_cast<std::size_t>(i) + 1] || w.at(i) == k + 1;
        bool low_before = false;
        for (int i = 0; i < n; ++i) {
            if (w.at(i) == k && high_after[static_cast<std::size_t>(i) + 1])
                keep[static_cast<std::size_t>(i)] = true;
            if (w.at(i) == k + 1 && low_before)
                keep[static_cast<std::size_t>(i)] = true;
            if (w.at(i) == k)
                low_before = true;
        }
    }
    std::vector<Letter> letters;
    for (int i = 0; i < n; ++i)
        if (keep[static_cast<std::size_t>(i)])
            letters.push_back(w.at(i));
    return Word(w.alphabet(), std::move(letters));
}

} // namespace parikh
