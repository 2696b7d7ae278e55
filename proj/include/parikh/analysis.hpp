#pragma once

// Diameter bounds, the path-length hierarchy, slender-word partitions and
// the Hamiltonicity criteria for binary and ternary words.

#include <optional>
#include <string>
#include <vector>

#include "parikh/parikh_core.hpp"

namespace parikh {

inline constexpr int kDefaultSlenderCap = 8;

/// Which diameter bound applies to a word.
enum class BoundSource {
    CoreWord,     // core_{a_1..a_s}(w) = w           -> diameter <= s+1
    CoreNonempty, // core_{a_1..a_s}(w) nonempty      -> <= s+3 (3 when s=2)
    General,      // always                           -> <= 3s-3
};

std::string bound_source_name(BoundSource source);

/// Connectivity, diameter and the tightest applicable diameter bound of G(w).
struct DiameterReport {
    int alphabet_size = 0;
    Word word;
    bool connected = false;
    std::optional<int> diameter;     // empty when disconnected
    bool core_nonempty = false;      // |w|_{a_1 a_2 ... a_s} > 0
    int applicable_bound = 0;
    BoundSource bound_source = BoundSource::General;
    std::optional<bool> bound_holds; // empty when disconnected
};

DiameterReport diameter_report(const Word& w);

/// True iff |w|_{a_i a_{i+1} a_{i+2}} > 0 for every window; always true when
/// the preconditions (full support, connected, s >= 3) hold, so this is an
/// invariant probe. Violated preconditions raise DomainError.
bool check_triple_subwords(const Word& w);

/// Word over an alphabet of size s whose Parikh graph is a path of length
/// 3s-3, built by the prefix-and-insert recursion from abab.
Word longest_path_word(int alphabet_size);

/// Slender word (every letter once) whose Parikh graph is the disjoint union
/// of paths sized by the partition parts.
Word slender_word_for_partition(const std::vector<int>& partition);

/// Number of isomorphism classes of Parikh graphs of slender words over an
/// alphabet of size s; equals the number of integer partitions of s.
int count_slender_classes(int alphabet_size, int cap = kDefaultSlenderCap);

/// Binary Hamiltonicity criterion: balanced letter counts and every proper
/// nonempty prefix carrying strictly more a's than b's.
bool binary_hamiltonian(const Word& w);

/// Ternary Hamiltonicity criterion in position form: pos_c(i) > pos_b(i+1)
/// and pos_a(|w|_a-i+1) < pos_b(|w|_b-i) wherever the referenced occurrences
/// exist. Requires s = 3, |w|_a + |w|_c = |w|_b and G(w) connected.
bool ternary_hamiltonian(const Word& w);

/// The 4-cycle criterion along a strong ordering: Hamiltonian iff every
/// consecutive pair of ordering positions spans a complete quadrilateral.
/// False (not an error) when |X| != |Y|; DomainError when `so` is not strong.
bool hamiltonian_via_strong_ordering(const BipartiteGraph& g, const StrongOrdering& so);

} // namespace parikh
