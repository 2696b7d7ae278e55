#include <doctest.h>

#include "parikh/analysis.hpp"
#include "parikh/oracle.hpp"
#include "parikh/recognition.hpp"

using namespace parikh;

namespace {

Word w(const std::string& text, int alphabet = 0) {
    return parse_word(text, alphabet ? std::optional<int>(alphabet) : std::nullopt);
}

} // namespace

TEST_SUITE_BEGIN("analysis");

TEST_CASE("diameter report picks the tightest bound") {
    DiameterReport core_word = diameter_report(w("abab"));
    CHECK(core_word.connected);
    CHECK(core_word.diameter == 3);
    CHECK(core_word.bound_source == BoundSource::CoreWord);
    CHECK(core_word.applicable_bound == 3);
    CHECK(core_word.bound_holds == true);

    DiameterReport nonempty = diameter_report(w("deabcdeab"));
    CHECK(nonempty.connected);
    CHECK(nonempty.diameter == 8);
    CHECK(nonempty.bound_source == BoundSource::CoreNonempty);
    CHECK(nonempty.applicable_bound == 8); // s + 3 at s = 5
    CHECK(nonempty.bound_holds == true);

    DiameterReport general = diameter_report(w("bbccabdc"));
    CHECK(general.connected);
    CHECK(general.diameter == 5);
    CHECK_FALSE(general.core_nonempty);
    CHECK(general.bound_source == BoundSource::General);
    CHECK(general.applicable_bound == 9);
    CHECK(general.bound_holds == true);

    DiameterReport split = diameter_report(w("ba", 2));
    CHECK_FALSE(split.connected);
    CHECK_FALSE(split.diameter.has_value());
    CHECK_FALSE(split.bound_holds.has_value());

    CHECK_THROWS_AS(diameter_report(Word(Alphabet(2), {})), DomainError);
}

TEST_CASE("triple subwords") {
    CHECK(check_triple_subwords(w("bcabcab")));
    CHECK(check_triple_subwords(w("abcabc")));
    CHECK_THROWS_AS(check_triple_subwords(w("cba")), DomainError);  // disconnected
    CHECK_THROWS_AS(check_triple_subwords(w("ab")), DomainError);   // s < 3
    CHECK_THROWS_AS(check_triple_subwords(w("aabb", 3)), DomainError); // support gap
}

TEST_CASE("longest path words") {
    CHECK(word_text(longest_path_word(2)) == "abab");
    CHECK(word_text(longest_path_word(3)) == "bcabcab");
    CHECK(word_text(longest_path_word(4)) == "cdbcdabcab");
    CHECK(word_text(longest_path_word(5)) == "decdebcdabcab");
    CHECK_THROWS_AS(longest_path_word(1), DomainError);
}

TEST_CASE("longest path words really are paths of length 3s-3") {
    for (int s = 2; s <= 6; ++s) {
        BipartiteGraph g = parikh_graph(longest_path_word(s)).graph;
        CAPTURE(s);
        REQUIRE(g.vertex_count() == 3 * s - 2);
        REQUIRE(are_isomorphic(g, path_graph(3 * s - 2)));
        REQUIRE(diameter(g) == 3 * s - 3);
    }
}

TEST_CASE("slender words for partitions") {
    CHECK(word_text(slender_word_for_partition({4})) == "abcd");
    CHECK(word_text(slender_word_for_partition({3, 1})) == "bcda");
    CHECK(word_text(slender_word_for_partition({2, 2})) == "cdab");
    CHECK(word_text(slender_word_for_partition({2, 1, 1})) == "cdba");
    CHECK(word_text(slender_word_for_partition({1, 1, 1, 1})) == "dcba");
    CHECK_THROWS_AS(slender_word_for_partition({}), DomainError);
    CHECK_THROWS_AS(slender_word_for_partition({2, 0}), DomainError);
}

TEST_CASE("slender words realize their partitions as path unions") {
    for (const auto& partition : partitions_of(6)) {
        Word word = slender_word_for_partition(partition);
        auto components = connected_components(parikh_graph(word).graph);
        REQUIRE(components.size() == partition.size());
        std::multiset<int> expected(partition.begin(), partition.end());
        std::multiset<int> actual;
        for (const auto& c : components) {
            REQUIRE(c.edge_count() == c.vertex_count() - 1);
            actual.insert(c.vertex_count());
        }
        REQUIRE(actual == expected);
    }
}

TEST_CASE("slender class counts equal partition counts") {
    CHECK(count_slender_classes(2) == 2);
    CHECK(count_slender_classes(4) == 5);
    CHECK(count_slender_classes(6) == 11);
    CHECK(count_partitions(7) == 15);
    CHECK(count_partitions(8) == 22);
    CHECK_THROWS_AS(count_slender_classes(1), DomainError);
    CHECK_THROWS_AS(count_slender_classes(9), CapacityError);
}

TEST_CASE("binary Hamiltonicity criterion") {
    CHECK(binary_hamiltonian(w("aabb")));
    CHECK_FALSE(binary_hamiltonian(w("abab")));
    CHECK_FALSE(binary_hamiltonian(w("ab")));      // two vertices, no cycle
    CHECK_FALSE(binary_hamiltonian(w("aab", 2)));  // unbalanced
    CHECK(binary_hamiltonian(w("aababb")));
    CHECK_THROWS_AS(binary_hamiltonian(w("abc")), DomainError);
}

TEST_CASE("ternary Hamiltonicity criterion") {
    CHECK(ternary_hamiltonian(w("abbc")));
    CHECK_FALSE(ternary_hamiltonian(w("abcb")));
    CHECK(ternary_hamiltonian(w("aabb", 3))); // no c's: a-conditions only
    CHECK_THROWS_AS(ternary_hamiltonian(w("abc")), DomainError);   // unbalanced
    CHECK_THROWS_AS(ternary_hamiltonian(w("aabb")), DomainError);  // wrong arity
    CHECK_THROWS_AS(ternary_hamiltonian(w("bbca", 3)), DomainError); // disconnected
}

TEST_CASE("four-cycle criterion along a strong ordering") {
    BipartiteGraph k22 = complete_bipartite(2, 2);
    auto so = find_strong_ordering(k22);
    REQUIRE(so.has_value());
    CHECK(hamiltonian_via_strong_ordering(k22, *so));

    BipartiteGraph p4 = path_graph(4);
    auto p4so = find_strong_ordering(p4);
    REQUIRE(p4so.has_value());
    CHECK_FALSE(hamiltonian_via_strong_ordering(p4, *p4so));

    BipartiteGraph edge = complete_bipartite(1, 1);
    CHECK_FALSE(hamiltonian_via_strong_ordering(edge, {{"x1"}, {"y1"}})); // k < 2

    BipartiteGraph k23 = complete_bipartite(2, 3);
    auto k23so = find_strong_ordering(k23);
    REQUIRE(k23so.has_value());
    CHECK_FALSE(hamiltonian_via_strong_ordering(k23, *k23so)); // |X| != |Y|

    // a six-cycle has no strong ordering at all, so the criterion cannot apply
    BipartiteGraph c6 = cycle_graph(6);
    CHECK_FALSE(find_strong_ordering(c6).has_value());
    CHECK_THROWS_AS(hamiltonian_via_strong_ordering(c6, {c6.part_x(), c6.part_y()}), DomainError);
}

TEST_CASE("diameter bounds and triples hold on the wider per-arity corpora") {
    for (auto [alphabet, len] : {std::pair{2, 10}, {3, 9}}) {
        EnumerationSpec bounds;
        bounds.suite = "diameter-bounds";
        bounds.alphabet_size = alphabet;
        bounds.max_len = len;
        CHECK(run_suite(bounds).pass);
        EnumerationSpec triples;
        triples.suite = "triple-subwords";
        triples.alphabet_size = alphabet;
        triples.max_len = len;
        CHECK(run_suite(triples).pass);
    }
}

TEST_CASE("every component of every small Parikh graph has a strong ordering") {
    EnumerationSpec spec;
    spec.suite = "word-components";
    CHECK(run_suite(spec).pass);
}

TEST_CASE("bound source names") {
    CHECK(bound_source_name(BoundSource::CoreWord) == "core-word");
    CHECK(bound_source_name(BoundSource::CoreNonempty) == "core-nonempty");
    CHECK(bound_source_name(BoundSource::General) == "general");
}

TEST_SUITE_END();
