#pragma once

// The graph -> word direction: strong-ordering search, the interval
// decomposition, word synthesis, binary/ternary recognition and component
// composition.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "parikh/parikh_core.hpp"

namespace parikh {

inline constexpr int kDefaultOrderingSearchCap = 14;

/// Exact backtracking search for a strong ordering on a connected bipartite
/// graph; none means the graph is not a bipartite permutation graph.
/// Throws DomainError on disconnected input, CapacityError above `cap`.
std::optional<StrongOrdering> find_strong_ordering(const BipartiteGraph& g,
                                                   int cap = kDefaultOrderingSearchCap);

/// Half-open index range into an ordering.
struct IndexInterval {
    int lo = 0;
    int hi = 0;
    int size() const { return hi - lo; }
};

/// The block sequences X_1..X_n, Y_1..Y_n driving word synthesis: intervals
/// of the strong ordering whose products accumulate the edge set.
struct IntervalDecomposition {
    StrongOrdering ordering;
    std::vector<IndexInterval> blocks_x, blocks_y;

    int steps() const { return static_cast<int>(blocks_x.size()); }
    std::vector<std::string> block_x(int p) const; // labels of X_{p+1}, p 0-based
    std::vector<std::string> block_y(int p) const;
};

/// Constructive decomposition: X_1 = N(last of Y), Y_1 = N(last of X), then
/// blocks grown from the last vertices still incident on uncovered edges.
/// Validates the ordering and checks all structural block properties before
/// returning. Throws DomainError when the ordering is not strong.
IntervalDecomposition interval_decomposition(const BipartiteGraph& g, const StrongOrdering& so);

/// Explicit check of the five block properties (end/initial segments,
/// non-containment, progress, edge accumulation). Used by the suites.
bool check_interval_decomposition(const BipartiteGraph& g, const IntervalDecomposition& d);

/// One snapshot of the synthesis recursion.
struct SynthesisStep {
    Word word;                                    // w_l
    std::map<std::string, ParikhVertex> embedding; // phi_l on the grown subgraph
    int block_letters = 0; // distinct letters under the current block pair
};

/// Full record of a synthesis run.
struct SynthesisTrace {
    StrongOrdering ordering;
    IntervalDecomposition decomposition;
    bool part_x_low = true; // part X seeded onto a_1 (part Y onto a_2)
    std::vector<SynthesisStep> steps;
};

struct SynthesisResult {
    Word word;
    std::map<std::string, ParikhVertex> embedding;
    SynthesisTrace trace;
};

/// Builds a word whose Parikh graph is isomorphic to the connected input by
/// growing it block pair by block pair; the final embedding is verified
/// against the input's edges before returning.
/// Throws NotRepresentableError when no strong ordering exists.
SynthesisResult synthesize_word(const BipartiteGraph& g, int cap = kDefaultOrderingSearchCap);

/// Binary recognition via nested neighborhoods: if one part's neighborhood
/// family is a chain under inclusion, returns the witness word
/// a b^{d_1} a b^{d_2} ... over {a<b}; none otherwise.
std::optional<Word> recognize_binary(const BipartiteGraph& g);

/// Binary recognition via the cycle criterion: (6,2)-chordal and some
/// adjacent pair's degree sum equals the vertex count.
bool check_binary_via_chordality(const BipartiteGraph& g, int cap = kDefaultCycleCap);

/// Ternary recognition: searches for an order on one part making every
/// opposite neighborhood an initial or end segment, then merges the two
/// projection words on their shared b's. None when no such order exists.
std::optional<Word> recognize_ternary(const BipartiteGraph& g);

/// Relabels each word into a disjoint letter range, later blocks lower, and
/// concatenates; the Parikh graph of the result is the disjoint union of the
/// blocks' Parikh graphs.
Word compose_components(const std::vector<Word>& words);

/// Synthesis for arbitrary bipartite graphs: per-component synthesis glued by
/// compose_components; isolated vertices become single-letter words.
std::optional<Word> synthesize_any(const BipartiteGraph& g, int cap = kDefaultOrderingSearchCap);

} // namespace parikh
