#pragma once

// The word -> graph direction: Parikh graphs, the canonical strong ordering
// and the binary permutation realization.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "parikh/graphs.hpp"
#include "parikh/words.hpp"

namespace parikh {

/// Vertex identity of a Parikh graph: the l-th occurrence of letter a_i.
struct ParikhVertex {
    Letter letter = 0;
    int occurrence = 0;

    auto operator<=>(const ParikhVertex&) const = default;

    /// Rendered form used as graph label, e.g. "c:2" for the second c.
    std::string label(const Alphabet& alphabet) const;
};

/// Parikh graph of a word: one vertex per letter position, an edge for each
/// occurrence of a consecutive-letter pair a_k a_{k+1}. Part X holds the odd
/// letter indices, part Y the even ones.
struct ParikhGraph {
    Word word;
    BipartiteGraph graph;
    std::vector<ParikhVertex> vertex_by_position; // index p-1 for position p

    /// Vertex corresponding to 1-based word position p.
    const ParikhVertex& vertex_at(int p) const {
        return vertex_by_position[static_cast<std::size_t>(p - 1)];
    }
    /// 1-based word position of a vertex.
    int position_of_vertex(const ParikhVertex& v) const;

    std::string label_of_position(int p) const { return vertex_at(p).label(word.alphabet()); }
};

/// Builds the Parikh graph of a nonempty word.
ParikhGraph parikh_graph(const Word& w);

/// Pair of linear orders on the two parts of a bipartite graph.
struct StrongOrdering {
    std::vector<std::string> order_x;
    std::vector<std::string> order_y;
};

/// The strong ordering of the canonical construction: part X lists the odd
/// letters by descending letter index, occurrences ascending; part Y does the
/// same with the even letters. Requires the support of w to be 1..max(supp);
/// a gap would scramble the bipartition, so it is rejected.
StrongOrdering canonical_strong_ordering(const Word& w);

/// Checks the strong-ordering condition: for edges (x,y), (x',y') with
/// x <_X x' and y' <_Y y, both (x,y') and (x',y) must be edges.
/// Throws DomainError when the orders do not cover the parts exactly.
bool is_strong_ordering(const BipartiteGraph& g, const StrongOrdering& so);

/// The permutation realizing G(w) for binary w: positions x < y are adjacent
/// iff tau(x) > tau(y). Returned vector is 0-indexed by position with 1-based
/// values. Throws DomainError unless the alphabet has exactly two letters.
std::vector<int> binary_permutation(const Word& w);

/// True iff adjacency along `vertex_order` coincides with inversions of tau.
bool is_permutation_realization(const BipartiteGraph& g,
                                const std::vector<std::string>& vertex_order,
                                const std::vector<int>& tau);

/// Positionwise union of core(w, a_k a_{k+1}) over all k: the letters of w
/// contributing an edge somewhere. G of it matches the non-isolated part of G(w).
Word core_sigma(const Word& w);

} // namespace parikh
