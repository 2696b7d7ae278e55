#include "parikh/analysis.hpp"

#include <algorithm>
#include <map>

namespace parikh {

std::string bound_source_name(BoundSource source) {
    switch (source) {
    case BoundSource::CoreWord:
        return "core-word";
    case BoundSource::CoreNonempty:
        return "core-nonempty";
    case BoundSource::General:
        return "general";
    }
    return "general";
}

DiameterReport diameter_report(const Word& w) {
    if (w.empty())
        throw DomainError("diameter report needs a nonempty word");
    const int s = w.alphabet().size();
    DiameterReport report;
    report.alphabet_size = s;
    report.word = w;

    Word ladder = letter_range_word(w.alphabet(), 1, s); // a_1 a_2 ... a_s
    Word ladder_core = core(w, ladder);
    report.core_nonempty = !ladder_core.empty();

    if (s >= 2 && ladder_core == w) {
        report.bound_source = BoundSource::CoreWord;
        report.applicable_bound = s + 1;
    } else if (s >= 2 && report.core_nonempty) {
        report.bound_source = BoundSource::CoreNonempty;
        report.applicable_bound = s == 2 ? 3 : s + 3;
    } else {
        report.bound_source = BoundSource::General;
        report.applicable_bound = 3 * s - 3;
    }

    ParikhGraph pg = parikh_graph(w);
    report.connected = is_connected(pg.graph);
    if (report.connected) {
        report.diameter = diameter(pg.graph);
        report.bound_holds = *report.diameter <= report.applicable_bound;
    }
    return report;
}

bool check_triple_subwords(const Word& w) {
    const int s = w.alphabet().size();
    if (s < 3)
        throw DomainError("triple-subword check needs an alphabet of size at least 3");
    if (static_cast<int>(support(w).size()) != s)
        throw DomainError("triple-subword check needs full support");
    if (!is_connected(parikh_graph(w).graph))
        throw DomainError("triple-subword check needs a connected Parikh graph");
    for (Letter i = 1; i <= s - 2; ++i) {
        Word triple(w.alphabet(), {i, i + 1, i + 2});
        if (subword_count(w, triple) == 0)
            return false;
    }
    return true;
}

Word longest_path_word(int alphabet_size) {
    if (alphabet_size < 2)
        throw DomainError("path-word construction needs an alphabet of size at least 2");
    std::vector<Letter> letters{1, 2, 1, 2}; // abab
    for (Letter t = 2; t < alphabet_size; ++t) {
        // Prefix with a_t a_{t+1} and drop an a_{t+1} right after the first a_t.
        auto first_t = std::find(letters.begin(), letters.end(), t);
        letters.insert(first_t + 1, t + 1);
        letters.insert(letters.begin(), {t, static_cast<Letter>(t + 1)});
    }
    return Word(Alphabet(alphabet_size), std::move(letters));
}

Word slender_word_for_partition(const std::vector<int>& partition) {
    if (partition.empty())
        throw DomainError("partition must have at least one part");
    int total = 0;
    for (int part : partition) {
        if (part < 1)
            throw DomainError("partition parts must be positive");
        total += part;
    }
    // Each part becomes a run of consecutive letters (a path); later blocks
    // take strictly smaller letters so no cross edges appear.
    std::vector<Letter> letters;
    int below = total;
    for (int part : partition) {
        below -= part;
        for (int i = 1; i <= part; ++i)
            letters.push_back(below + i);
    }
    return Word(Alphabet(total), std::move(letters));
}

namespace {

// Isomorphism of disjoint unions by matching components pairwise. The global
// part-respecting/part-swapping bijection of are_isomorphic is too rigid for
// disconnected graphs, where each component may flip its own bipartition.
bool union_isomorphic(const std::vector<BipartiteGraph>& a, const std::vector<BipartiteGraph>& b) {
    if (a.size() != b.size())
        return false;
    std::vector<bool> used(b.size(), false);
    for (const auto& component : a) {
        bool matched = false;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j])
                continue;
            if (are_isomorphic(component, b[j])) {
                used[j] = true;
                matched = true;
                break;
            }
        }
        if (!matched)
            return false;
    }
    return true;
}

std::string component_signature(const std::vector<BipartiteGraph>& components) {
    std::vector<std::pair<int, int>> shape;
    for (const auto& c : components)
        shape.emplace_back(c.vertex_count(), c.edge_count());
    std::sort(shape.begin(), shape.end());
    std::string out;
    for (const auto& [v, e] : shape)
        out += std::to_string(v) + ":" + std::to_string(e) + ";";
    return out;
}

} // namespace

int count_slender_classes(int alphabet_size, int cap) {
    if (alphabet_size < 2)
        throw DomainError("slender-class count needs an alphabet of size at least 2");
    if (alphabet_size > cap)
        throw CapacityError("slender-word enumeration capped at alphabet size " +
                            std::to_string(cap));
    std::vector<Letter> perm(static_cast<std::size_t>(alphabet_size));
    for (int i = 0; i < alphabet_size; ++i)
        perm[static_cast<std::size_t>(i)] = i + 1;
    // Bucket the s! slender graphs by graph isomorphism: cheap shape
    // signature first, then componentwise witness search per bucket.
    std::map<std::string, std::vector<std::vector<BipartiteGraph>>> buckets;
    int classes = 0;
    do {
        auto components =
            connected_components(parikh_graph(Word(Alphabet(alphabet_size), perm)).graph);
        auto& representatives = buckets[component_signature(components)];
        bool known = false;
        for (const auto& rep : representatives) {
            if (union_isomorphic(components, rep)) {
                known = true;
                break;
            }
        }
        if (!known) {
            representatives.push_back(std::move(components));
            ++classes;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return classes;
}

bool binary_hamiltonian(const Word& w) {
    if (w.alphabet().size() != 2)
        throw DomainError("binary Hamiltonicity criterion needs an alphabet of size 2");
    if (w.count(1) != w.count(2))
        return false;
    if (w.length() < 4)
        return false; // a cycle needs at least two letters per part
    int balance = 0;
    for (int i = 0; i < w.length() - 1; ++i) {
        balance += w.at(i) == 1 ? 1 : -1;
        if (balance <= 0)
            return false;
    }
    return true;
}

bool ternary_hamiltonian(const Word& w) {
    if (w.alphabet().size() != 3)
        throw DomainError("ternary Hamiltonicity criterion needs an alphabet of size 3");
    const int na = w.count(1), nb = w.count(2), nc = w.count(3);
    if (na + nc != nb)
        throw DomainError("criterion needs |w|_a + |w|_c = |w|_b; parts are unbalanced");
    if (!is_connected(parikh_graph(w).graph))
        throw DomainError("criterion needs a connected Parikh graph");
    if (w.length() < 4)
        return false;
    // (c,i) adjacent to (b,i+1): the i-th c comes after the (i+1)-th b.
    for (int i = 1; i <= nc; ++i) {
        if (i + 1 > nb)
            continue; // referenced b does not exist; the quadruple is absent
        if (position_of(w, 3, i) < position_of(w, 2, i + 1))
            return false;
    }
    // (a,|w|_a-i+1) adjacent to (b,|w|_b-i): counted from the rear.
    for (int i = 1; i <= na; ++i) {
        if (nb - i < 1)
            continue;
        if (position_of(w, 1, na - i + 1) > position_of(w, 2, nb - i))
            return false;
    }
    return true;
}

bool hamiltonian_via_strong_ordering(const BipartiteGraph& g, const StrongOrdering& so) {
    if (!is_strong_ordering(g, so))
        throw DomainError("ordering is not strong");
    const int k = static_cast<int>(so.order_x.size());
    if (k != static_cast<int>(so.order_y.size()) || k < 2)
        return false;
    for (int i = 0; i + 1 < k; ++i) {
        const auto& x1 = so.order_x[static_cast<std::size_t>(i)];
        const auto& x2 = so.order_x[static_cast<std::size_t>(i) + 1];
        const auto& y1 = so.order_y[static_cast<std::size_t>(i)];
        const auto& y2 = so.order_y[static_cast<std::size_t>(i) + 1];
        if (!g.has_edge(x1, y1) || !g.has_edge(x1, y2) || !g.has_edge(x2, y1) ||
            !g.has_edge(x2, y2))
            return false;
    }
    return true;
}

} // namespace parikh
