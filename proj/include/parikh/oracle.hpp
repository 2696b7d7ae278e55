#pragma once

// Brute-force enumeration and cross-checking engine behind the property
// suites: word/graph streams, canonical forms, independent counters and a
// registry of named exhaustive checks.

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "parikh/analysis.hpp"
#include "parikh/recognition.hpp"

namespace parikh {

inline constexpr int kMaxEnumerationVertices = 10;
inline constexpr int kMaxEnumerationLength = 12;
inline constexpr int kMaxEnumerationAlphabet = 8;
inline constexpr long long kMaxEnumerationWords = 20'000'000;
inline constexpr int kMaxJobs = 64;

/// Parameters of one suite run. Unset fields fall back to the suite's own
/// defaults; all values are clamped against the global enumeration limits.
struct EnumerationSpec {
    std::string suite;
    std::optional<int> max_len;
    std::optional<int> alphabet_size;
    std::optional<int> max_vertices;
    std::optional<int> jobs;
    std::optional<std::string> focus; // restrict the sweep to one input
};

/// A replayable mismatch found by a suite.
struct CounterexampleReport {
    std::string suite;
    std::string input; // word text or single-line graph JSON
    std::string expected;
    std::string actual;
    std::string repro; // command line re-deriving this mismatch
};

struct SuiteResult {
    std::string suite;
    bool pass = false;
    long long checked = 0;
    std::vector<CounterexampleReport> reports; // sorted by input
};

/// Lexicographic word stream over one alphabet and length range.
struct WordRange {
    int alphabet_size = 2;
    int min_len = 1;
    int max_len = 1;
    bool full_support_only = false;
};

void enumerate_words(const WordRange& range, const std::function<void(const Word&)>& fn);
std::vector<Word> enumerate_words_list(const WordRange& range);

/// All connected bipartite graphs on 2..max_vertices vertices, one per
/// isomorphism class, each with a fixed bipartition (part X never smaller).
void enumerate_bipartite_graphs(int max_vertices,
                                const std::function<void(const BipartiteGraph&)>& fn);

/// Isomorphism-invariant encoding: minimum adjacency-matrix code over
/// part-preserving and part-swapping relabelings. Equal keys iff isomorphic.
std::string canonical_key(const BipartiteGraph& g);

/// Canonical keys of G(w) for every word of exactly `len` letters over an
/// alphabet of exactly `alphabet_size`; memoized.
const std::set<std::string>& representable_keys(int alphabet_size, int len);

/// Independent integer-partition counter (recursive, no graph machinery).
long long count_partitions(int n);

/// All partitions of n with parts in non-increasing order, descending
/// lexicographically: [n], [n-1,1], ..., [1,1,...,1].
std::vector<std::vector<int>> partitions_of(int n);

/// Independent scattered-subword counter enumerating occurrence tuples
/// directly; exponential, test scale only.
BigCount naive_subword_count(const Word& w, const Word& u);

/// Runs the named exhaustive check. Deterministic for a fixed spec; reports
/// come back sorted by input. Throws DomainError for unknown suites and
/// CapacityError when the spec exceeds the global limits.
SuiteResult run_suite(const EnumerationSpec& spec);

std::vector<std::string> suite_names();

/// Adds or replaces a suite; the registry is the single source of truth
/// shared by the CLI and the test harness (fault-injection fixtures hook in
/// here).
void register_suite(const std::string& name,
                    std::function<void(const EnumerationSpec&, SuiteResult&)> fn);

} // namespace parikh
