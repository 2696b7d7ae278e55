#include "parikh/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <future>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "parikh/json_io.hpp"

namespace parikh {

// ------------------------------------------------------------- independent

long long count_partitions(int n) {
    if (n < 0)
        throw DomainError("partition count needs a non-negative integer");
    // ways[k] = partitions of k using the parts admitted so far
    std::vector<long long> ways(static_cast<std::size_t>(n) + 1, 0);
    ways[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int k = part; k <= n; ++k)
            ways[static_cast<std::size_t>(k)] += ways[static_cast<std::size_t>(k - part)];
    return ways[static_cast<std::size_t>(n)];
}

std::vector<std::vector<int>> partitions_of(int n) {
    if (n < 1)
        throw DomainError("partition enumeration needs a positive integer");
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

namespace {

void count_occurrences(const Word& w, const Word& u, int from, int matched, BigCount& total) {
    if (matched == u.length()) {
        ++total;
        return;
    }
    for (int p = from; p < w.length(); ++p)
        if (w.at(p) == u.at(matched))
            count_occurrences(w, u, p + 1, matched + 1, total);
}

} // namespace

BigCount naive_subword_count(const Word& w, const Word& u) {
    BigCount total = 0;
    count_occurrences(w, u, 0, 0, total);
    return total;
}

// -------------------------------------------------------------- enumeration

namespace {

long long power_checked(int base, int exponent) {
    long long value = 1;
    for (int i = 0; i < exponent; ++i) {
        value *= base;
        if (value > kMaxEnumerationWords)
            throw CapacityError("word corpus too large: " + std::to_string(base) + "^" +
                                std::to_string(exponent) + " words");
    }
    return value;
}

Word word_from_index(int alphabet_size, int len, long long index) {
    std::vector<Letter> letters(static_cast<std::size_t>(len));
    for (int k = len - 1; k >= 0; --k) {
        letters[static_cast<std::size_t>(k)] = static_cast<Letter>(index % alphabet_size) + 1;
        index /= alphabet_size;
    }
    return Word(Alphabet(alphabet_size), std::move(letters));
}

bool has_full_support(const Word& w) {
    return static_cast<int>(support(w).size()) == w.alphabet().size();
}

void validate_range(const WordRange& range) {
    if (range.alphabet_size < 1 || range.alphabet_size > kMaxEnumerationAlphabet)
        throw CapacityError("alphabet size " + std::to_string(range.alphabet_size) +
                            " outside the enumeration limit 1.." +
                            std::to_string(kMaxEnumerationAlphabet));
    if (range.min_len < 0 || range.max_len > kMaxEnumerationLength)
        throw CapacityError("word length range outside the enumeration limit 0.." +
                            std::to_string(kMaxEnumerationLength));
}

} // namespace

void enumerate_words(const WordRange& range, const std::function<void(const Word&)>& fn) {
    validate_range(range);
    for (int len = range.min_len; len <= range.max_len; ++len) {
        long long total = power_checked(range.alphabet_size, len);
        for (long long index = 0; index < total; ++index) {
            Word w = word_from_index(range.alphabet_size, len, index);
            if (range.full_support_only && !has_full_support(w))
                continue;
            fn(w);
        }
    }
}

std::vector<Word> enumerate_words_list(const WordRange& range) {
    std::vector<Word> out;
    enumerate_words(range, [&](const Word& w) { out.push_back(w); });
    return out;
}

std::string canonical_key(const BipartiteGraph& g) {
    const int p = g.x_size();
    const int q = g.y_size();
    auto key_for = [](int rows, int cols, const std::vector<std::uint32_t>& row_masks) {
        if (cols > 8)
            throw CapacityError("canonical form capped at 8 columns per orientation");
        std::vector<int> perm(static_cast<std::size_t>(cols));
        std::iota(perm.begin(), perm.end(), 0);
        std::string best;
        do {
            std::vector<std::uint32_t> mapped(static_cast<std::size_t>(rows), 0);
            for (int r = 0; r < rows; ++r)
                for (int j = 0; j < cols; ++j)
                    if ((row_masks[static_cast<std::size_t>(r)] >> j) & 1)
                        mapped[static_cast<std::size_t>(r)] |=
                            std::uint32_t{1} << perm[static_cast<std::size_t>(j)];
            std::sort(mapped.begin(), mapped.end());
            std::string key;
            key.reserve(static_cast<std::size_t>(rows) + 2);
            key.push_back(static_cast<char>(rows));
            key.push_back(static_cast<char>(cols));
            for (std::uint32_t v : mapped)
                key.push_back(static_cast<char>(v));
            if (best.empty() || key < best)
                best = key;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    };
    std::vector<std::uint32_t> rows_x(static_cast<std::size_t>(p), 0);
    for (int xi = 0; xi < p; ++xi)
        for (int yi : g.x_neighbors(xi))
            rows_x[static_cast<std::size_t>(xi)] |= std::uint32_t{1} << yi;
    std::vector<std::uint32_t> rows_y(static_cast<std::size_t>(q), 0);
    for (int yi = 0; yi < q; ++yi)
        for (int xi : g.y_neighbors(yi))
            rows_y[static_cast<std::size_t>(yi)] |= std::uint32_t{1} << xi;
    std::string best;
    if (p >= q && p > 0)
        best = key_for(p, q, rows_x);
    if (q >= p && q > 0) {
        std::string other = key_for(q, p, rows_y);
        if (best.empty() || other < best)
            best = other;
    }
    return best; // empty string encodes the empty graph
}

namespace {

// Enumerates p non-increasing row masks in [1, 2^q) and reports each
// connected, column-covering matrix.
void enumerate_matrices(int p, int q, std::vector<std::uint32_t>& rows,
                        const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
    if (static_cast<int>(rows.size()) == p) {
        std::uint32_t covered = 0;
        for (std::uint32_t r : rows)
            covered |= r;
        if (covered != (std::uint32_t{1} << q) - 1)
            return; // isolated column vertex
        // connectivity over p + q vertices
        std::vector<bool> seen_row(static_cast<std::size_t>(p), false);
        std::vector<bool> seen_col(static_cast<std::size_t>(q), false);
        std::vector<int> stack{0};
        seen_row[0] = true;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (v < p) {
                for (int j = 0; j < q; ++j) {
                    if (((rows[static_cast<std::size_t>(v)] >> j) & 1) &&
                        !seen_col[static_cast<std::size_t>(j)]) {
                        seen_col[static_cast<std::size_t>(j)] = true;
                        ++reached;
                        stack.push_back(p + j);
                    }
                }
            } else {
                int j = v - p;
                for (int r = 0; r < p; ++r) {
                    if (((rows[static_cast<std::size_t>(r)] >> j) & 1) &&
                        !seen_row[static_cast<std::size_t>(r)]) {
                        seen_row[static_cast<std::size_t>(r)] = true;
                        ++reached;
                        stack.push_back(r);
                    }
                }
            }
        }
        if (reached == p + q)
            fn(rows);
        return;
    }
    std::uint32_t limit = rows.empty() ? (std::uint32_t{1} << q) - 1 : rows.back();
    for (std::uint32_t value = limit; value >= 1; --value) {
        rows.push_back(value);
        enumerate_matrices(p, q, rows, fn);
        rows.pop_back();
    }
}

BipartiteGraph graph_from_rows(int p, int q, const std::vector<std::uint32_t>& rows) {
    std::vector<std::string> xs, ys;
    for (int i = 1; i <= p; ++i)
        xs.push_back("x" + std::to_string(i));
    for (int j = 1; j <= q; ++j)
        ys.push_back("y" + std::to_string(j));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j)
            if ((rows[static_cast<std::size_t>(i)] >> j) & 1)
                edges.emplace_back(xs[static_cast<std::size_t>(i)], ys[static_cast<std::size_t>(j)]);
    return BipartiteGraph(std::move(xs), std::move(ys), edges);
}

} // namespace

void enumerate_bipartite_graphs(int max_vertices,
                                const std::function<void(const BipartiteGraph&)>& fn) {
    if (max_vertices < 0)
        throw DomainError("vertex cap must be non-negative");
    if (max_vertices > kMaxEnumerationVertices)
        throw CapacityError("graph enumeration capped at " +
                            std::to_string(kMaxEnumerationVertices) + " vertices");
    for (int n = 2; n <= max_vertices; ++n) {
        std::set<std::string> seen;
        for (int q = 1; q <= n / 2; ++q) {
            int p = n - q;
            std::vector<std::uint32_t> rows;
            enumerate_matrices(p, q, rows, [&](const std::vector<std::uint32_t>& matrix) {
                BipartiteGraph g = graph_from_rows(p, q, matrix);
                if (seen.insert(canonical_key(g)).second)
                    fn(g);
            });
        }
    }
}

const std::set<std::string>& representable_keys(int alphabet_size, int len) {
    static std::map<std::pair<int, int>, std::set<std::string>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({alphabet_size, len});
    if (it != cache.end())
        return it->second;
    std::set<std::string> keys;
    enumerate_words({alphabet_size, len, len, false},
                    [&](const Word& w) { keys.insert(canonical_key(parikh_graph(w).graph)); });
    return cache.emplace(std::make_pair(alphabet_size, len), std::move(keys)).first->second;
}

// -------------------------------------------------------------- suite plumbing

namespace {

struct SuiteRun {
    std::string name;
    int max_alphabet = 0;
    int max_len = 0;
    int max_vertices = 0;
    int jobs = 1;
    std::optional<std::string> focus;

    std::atomic<long long> checked{0};
    std::mutex mutex;
    std::vector<CounterexampleReport> reports;

    bool skip(const std::string& input) const { return focus && *focus != input; }

    std::string repro(const std::string& input) const {
        std::ostringstream cmd;
        cmd << "parikh verify --suite " << name;
        if (max_len > 0)
            cmd << " --max-len " << max_len;
        if (max_alphabet > 0)
            cmd << " --alphabet-size " << max_alphabet;
        if (max_vertices > 0)
            cmd << " --max-vertices " << max_vertices;
        cmd << " --focus '" << input << "'";
        return cmd.str();
    }

    void report(const std::string& input, const std::string& expected, const std::string& actual) {
        std::lock_guard<std::mutex> lock(mutex);
        reports.push_back({name, input, expected, actual, repro(input)});
    }
};

int resolve(std::optional<int> value, int fallback, int hard_cap, const char* what) {
    int v = value.value_or(fallback);
    if (v < 0 || v > hard_cap)
        throw CapacityError(std::string(what) + " " + std::to_string(v) +
                            " outside the configured limit 0.." + std::to_string(hard_cap));
    return v;
}

// Splits [0, total) into contiguous slices and runs them on `jobs` workers;
// slice order is fixed so runs are deterministic regardless of scheduling.
void parallel_slices(SuiteRun& run, long long total,
                     const std::function<void(long long, long long)>& body) {
    int jobs = std::max(1, run.jobs);
    if (jobs == 1 || total < 2048) {
        body(0, total);
        return;
    }
    long long slices = std::min<long long>(total, jobs * 4L);
    std::atomic<long long> next{0};
    auto worker = [&]() {
        while (true) {
            long long slice = next.fetch_add(1);
            if (slice >= slices)
                return;
            long long begin = total * slice / slices;
            long long end = total * (slice + 1) / slices;
            body(begin, end);
        }
    };
    std::vector<std::future<void>> futures;
    for (int t = 0; t < jobs; ++t)
        futures.push_back(std::async(std::launch::async, worker));
    for (auto& f : futures)
        f.get();
}

void sweep_words(SuiteRun& run, int min_s, int max_s, int min_len, int max_len, bool full_support,
                 const std::function<void(SuiteRun&, const Word&)>& check) {
    for (int s = min_s; s <= max_s; ++s) {
        for (int len = min_len; len <= max_len; ++len) {
            long long total = power_checked(s, len);
            parallel_slices(run, total, [&](long long begin, long long end) {
                for (long long index = begin; index < end; ++index) {
                    Word w = word_from_index(s, len, index);
                    if (full_support && !has_full_support(w))
                        continue;
                    if (run.skip(word_text(w)))
                        continue;
                    ++run.checked;
                    check(run, w);
                }
            });
        }
    }
}

void sweep_graphs(SuiteRun& run, int max_vertices,
                  const std::function<void(SuiteRun&, const BipartiteGraph&)>& check) {
    std::vector<BipartiteGraph> classes;
    enumerate_bipartite_graphs(max_vertices,
                               [&](const BipartiteGraph& g) { classes.push_back(g); });
    parallel_slices(run, static_cast<long long>(classes.size()), [&](long long begin, long long end) {
        for (long long i = begin; i < end; ++i) {
            const BipartiteGraph& g = classes[static_cast<std::size_t>(i)];
            if (run.skip(graph_json_line(g)))
                continue;
            ++run.checked;
            check(run, g);
        }
    });
}

bool is_path_shape(const BipartiteGraph& g) {
    if (g.empty() || !is_connected(g) || g.edge_count() != g.vertex_count() - 1)
        return false;
    for (int xi = 0; xi < g.x_size(); ++xi)
        if (g.x_neighbors(xi).size() > 2)
            return false;
    for (int yi = 0; yi < g.y_size(); ++yi)
        if (g.y_neighbors(yi).size() > 2)
            return false;
    return true;
}

bool word_representable_at(const BipartiteGraph& g, int max_alphabet) {
    std::string key = canonical_key(g);
    for (int s = 1; s <= max_alphabet; ++s)
        if (representable_keys(s, g.vertex_count()).count(key))
            return true;
    return false;
}

// Compares the label-level induced subgraph against the Parikh graph of the
// corresponding subword through the occurrence-renumbering map.
bool induced_matches_subword(const ParikhGraph& pg, const std::vector<int>& positions) {
    std::set<std::string> labels;
    for (int p : positions)
        labels.insert(pg.label_of_position(p));
    BipartiteGraph induced = induced_subgraph(pg.graph, labels);

    std::vector<Letter> letters;
    for (int p : positions)
        letters.push_back(pg.word.at(p - 1));
    Word subword(pg.word.alphabet(), letters);
    if (subword.empty())
        return induced.empty();
    ParikhGraph sub = parikh_graph(subword);

    // The r-th kept occurrence of a letter becomes occurrence r in the subword.
    std::map<std::string, std::string> relabel;
    std::map<Letter, int> seen;
    for (int p : positions) {
        Letter a = pg.word.at(p - 1);
        relabel[pg.label_of_position(p)] =
            ParikhVertex{a, ++seen[a]}.label(subword.alphabet());
    }
    for (const auto& [from, to] : relabel) {
        auto from_nbrs = neighbors(induced, from);
        std::set<std::string> mapped;
        for (const auto& nb : from_nbrs)
            mapped.insert(relabel.at(nb));
        if (mapped != neighbors(sub.graph, to))
            return false;
    }
    return true;
}

using SuiteFn = std::function<void(const EnumerationSpec&, SuiteResult&)>;

std::map<std::string, SuiteFn>& registry();

// Shared wrapper: resolves limits, runs the body, then sorts and summarizes.
SuiteFn make_suite(int def_alphabet, int def_len, int def_vertices,
                   std::function<void(SuiteRun&)> body) {
    return [=](const EnumerationSpec& spec, SuiteResult& result) {
        SuiteRun run;
        run.name = spec.suite;
        run.max_alphabet = resolve(spec.alphabet_size, def_alphabet, kMaxEnumerationAlphabet,
                                   "alphabet size");
        run.max_len = resolve(spec.max_len, def_len, kMaxEnumerationLength, "max length");
        run.max_vertices =
            resolve(spec.max_vertices, def_vertices, kMaxEnumerationVertices, "vertex cap");
        run.jobs = resolve(spec.jobs, 1, kMaxJobs, "jobs");
        if (run.jobs < 1)
            run.jobs = 1;
        run.focus = spec.focus;
        body(run);
        result.checked = run.checked.load();
        result.reports = std::move(run.reports);
    };
}

// ----------------------------------------------------------- built-in suites

void register_builtin_suites() {
    auto& suites = registry();

    suites["edge-count"] = make_suite(4, 8, 0, [](SuiteRun& run) {
        sweep_words(run, 1, run.max_alphabet, 1, run.max_len, false, [](SuiteRun& r, const Word& w) {
            BigCount expected = 0;
            for (Letter k = 1; k < w.alphabet().size(); ++k)
                expected += subword_count(w, Word(w.alphabet(), {k, k + 1}));
            BigCount actual = parikh_graph(w).graph.edge_count();
            if (expected != actual)
                r.report(word_text(w), expected.str(), actual.str());
        });
    });

    suites["bipartition-parity"] = make_suite(4, 8, 0, [](SuiteRun& run) {
        sweep_words(run, 1, run.max_alphabet, 1, run.max_len, false, [](SuiteRun& r, const Word& w) {
            ParikhGraph pg = parikh_graph(w);
            for (int i = 1; i <= w.length(); ++i) {
                for (int j = 1; j <= w.length(); ++j) {
                    if (i == j)
                        continue;
                    const auto& u = pg.vertex_at(i);
                    const auto& v = pg.vertex_at(j);
                    if (pg.graph.has_edge(pg.label_of_position(i), pg.label_of_position(j)) &&
                        (u.letter + v.letter) % 2 == 0) {
                        r.report(word_text(w), "edges join odd to even letters",
                                 "edge between letters of equal parity");
                        return;
                    }
                }
            }
        });
    });

    suites["strong-ordering"] = make_suite(4, 8, 0, [](SuiteRun& run) {
        sweep_words(run, 1, run.max_alphabet, 1, run.max_len, true, [](SuiteRun& r, const Word& w) {
            ParikhGraph pg = parikh_graph(w);
            if (!is_strong_ordering(pg.graph, canonical_strong_ordering(w)))
                r.report(word_text(w), "canonical ordering is strong", "strong-ordering check failed");
        });
    });

    suites["word-components"] = make_suite(4, 8, 0, [](SuiteRun& run) {
        sweep_words(run, 1, run.max_alphabet, 1, run.max_len, false, [](SuiteRun& r, const Word& w) {
            for (const auto& component : connected_components(parikh_graph(w).graph)) {
                if (!find_strong_ordering(component)) {
                    r.report(word_text(w), "every component of a Parikh graph has a strong ordering",
                             "search failed on a component");
                    return;
                }
            }
        });
    });

    suites["binary-permutation"] = make_suite(2, 10, 0, [](SuiteRun& run) {
        sweep_words(run, 2, 2, 1, run.max_len, false, [](SuiteRun& r, const Word& w) {
            ParikhGraph pg = parikh_graph(w);
            std::vector<std::string> order;
            for (int p = 1; p <= w.length(); ++p)
                order.push_back(pg.label_of_position(p));
            if (!is_permutation_realization(pg.graph, order, binary_permutation(w)))
                r.report(word_text(w), "adjacency iff inversion", "realization check failed");
        });
    });

    suites["induced-subgraphs"] = make_suite(3, 7, 0, [](SuiteRun& run) {
        sweep_words(run, 1, run.max_alphabet, 1, run.max_len, false, [](SuiteRun& r, const Word& w) {
            ParikhGraph pg = parikh_graph(w);
            const int n = w.length();
            for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
                std::vector<int> positions;
                for (int p = 1; p <= n; ++p)
                    if ((mask >> (p - 1)) & 1)
                        positions.push_back(p);
                if (!induced_matches_subword(pg, positions)) {
                    r.report(word_text(w) + " positions mask " + std::to_string(mask),
                             "induced subgraph matches subword graph", "mismatch");
                    return;
                }
            }
        });
    });

    suites["core-subgraph"] = make_suite(3, 7, 0, [](SuiteRun& run) {
        sweep_words(run, 1, run.max_alphabet, 1, run.max_len, false, [](SuiteRun& r, const Word& w) {
            ParikhGraph pg = parikh_graph(w);
            std::vector<int> non_isolated;
            for (int p = 1; p <= w.length(); ++p)
                if (!neighbors(pg.graph, pg.label_of_position(p)).empty())
                    non_isolated.push_back(p);
            Word cs = core_sigma(w);
            std::vector<Letter> expected;
            for (int p : non_isolated)
                expected.push_back(w.at(p - 1));
            if (cs.letters() != expected) {
                r.report(word_text(w), "core positions are the non-isolated vertices",
                         "position sets differ");
                return;
            }
            if (!non_isolated.empty() && !induced_matches_subword(pg, non_isolated))
                r.report(word_text(w), "G(core) matches induced non-isolated subgraph", "mismatch");
        });
    });

    suites["subword-dp"] = make_suite(3, 8, 0, [](SuiteRun& run) {
        sweep_words(run, 1, run.max_alphabet, 0, run.max_len, false, [](SuiteRun& r, const Word& w) {
            WordRange patterns{w.alphabet().size(), 0, std::min(4, w.length()), false};
            enumerate_words(patterns, [&](const Word& u) {
                BigCount dp = subword_count(w, u);
                BigCount brute = naive_subword_count(w, u);
                if (dp != brute)
                    r.report(word_text(w) + " pattern " + word_text(u), brute.str(), dp.str());
            });
        });
    });

    suites["core-identities"] = make_suite(3, 7, 0, [](SuiteRun& run) {
        sweep_words(run, 1, run.max_alphabet, 1, run.max_len, false, [](SuiteRun& r, const Word& w) {
            WordRange patterns{w.alphabet().size(), 1, 3, false};
            enumerate_words(patterns, [&](const Word& v) {
                Word c = core(w, v);
                if (subword_count(c, v) != subword_count(w, v)) {
                    r.report(word_text(w) + " pattern " + word_text(v),
                             "core preserves the subword count", "count changed");
                    return;
                }
                if (core(c, v) != c)
                    r.report(word_text(w) + " pattern " + word_text(v), "core is idempotent",
                             "core(core) != core");
            });
        });
    });

    suites["round-trip"] = make_suite(0, 0, 8, [](SuiteRun& run) {
        sweep_graphs(run, run.max_vertices, [](SuiteRun& r, const BipartiteGraph& g) {
            if (!find_strong_ordering(g))
                return;
            SynthesisResult res = synthesize_word(g);
            if (!are_isomorphic(parikh_graph(res.word).graph, g)) {
                r.report(graph_json_line(g), "synthesized word represents the graph",
                         "G(" + word_text(res.word) + ") not isomorphic");
                return;
            }
            for (const auto& step : res.trace.steps) {
                if (step.block_letters > 3) {
                    r.report(graph_json_line(g), "block pair spans at most 3 letters",
                             std::to_string(step.block_letters) + " letters");
                    return;
                }
            }
        });
    });

    suites["non-representable"] = make_suite(0, 0, 6, [](SuiteRun& run) {
        sweep_graphs(run, run.max_vertices, [](SuiteRun& r, const BipartiteGraph& g) {
            bool found = find_strong_ordering(g).has_value();
            bool exists = word_representable_at(g, g.vertex_count());
            if (found != exists)
                r.report(graph_json_line(g),
                         std::string("strong ordering ") + (found ? "found" : "absent") +
                             " iff word exists",
                         std::string("exhaustive word search says ") + (exists ? "yes" : "no"));
        });
    });

    suites["diameter-bounds"] = make_suite(4, 8, 0, [](SuiteRun& run) {
        sweep_words(run, 1, run.max_alphabet, 1, run.max_len, false, [](SuiteRun& r, const Word& w) {
            DiameterReport report = diameter_report(w);
            if (report.connected && !report.bound_holds.value_or(false))
                r.report(word_text(w),
                         "diameter <= " + std::to_string(report.applicable_bound) + " (" +
                             bound_source_name(report.bound_source) + ")",
                         "diameter " + std::to_string(report.diameter.value_or(-1)));
        });
    });

    suites["triple-subwords"] = make_suite(4, 8, 0, [](SuiteRun& run) {
        sweep_words(run, 3, run.max_alphabet, 1, run.max_len, true, [](SuiteRun& r, const Word& w) {
            if (!is_connected(parikh_graph(w).graph))
                return;
            if (!check_triple_subwords(w))
                r.report(word_text(w), "every consecutive letter triple occurs", "a triple is absent");
        });
    });

    suites["hierarchy"] = make_suite(4, 0, 0, [](SuiteRun& run) {
        for (int s = 3; s <= std::max(3, run.max_alphabet); ++s) {
            Word w = longest_path_word(s);
            if (run.skip(word_text(w)))
                continue;
            ++run.checked;
            BipartiteGraph g = parikh_graph(w).graph;
            if (!is_path_shape(g) || g.vertex_count() != 3 * s - 2) {
                run.report(word_text(w), "path graph on " + std::to_string(3 * s - 2) + " vertices",
                           "different shape");
                continue;
            }
            // The same path must be out of reach one alphabet below, for any
            // word length up to its vertex count.
            std::string key = canonical_key(g);
            for (int len = 1; len <= g.vertex_count(); ++len) {
                if (representable_keys(s - 1, len).count(key)) {
                    run.report(word_text(w),
                               "no word over the smaller alphabet represents the path",
                               "represented at length " + std::to_string(len));
                    break;
                }
            }
        }
    });

    suites["binary-recognition"] = make_suite(0, 0, 8, [](SuiteRun& run) {
        sweep_graphs(run, run.max_vertices, [](SuiteRun& r, const BipartiteGraph& g) {
            auto word = recognize_binary(g);
            bool via_chordality = check_binary_via_chordality(g);
            bool via_search = representable_keys(2, g.vertex_count()).count(canonical_key(g)) > 0;
            if (word.has_value() != via_chordality || word.has_value() != via_search) {
                r.report(graph_json_line(g),
                         "nested neighborhoods, chordality criterion and word search agree",
                         std::string("nested=") + (word ? "yes" : "no") +
                             " chordal=" + (via_chordality ? "yes" : "no") +
                             " search=" + (via_search ? "yes" : "no"));
                return;
            }
            if (word && !are_isomorphic(parikh_graph(*word).graph, g))
                r.report(graph_json_line(g), "witness word represents the graph",
                         "G(" + word_text(*word) + ") not isomorphic");
        });
    });

    suites["ternary-recognition"] = make_suite(0, 0, 8, [](SuiteRun& run) {
        sweep_graphs(run, run.max_vertices, [](SuiteRun& r, const BipartiteGraph& g) {
            auto word = recognize_ternary(g);
            bool via_search = representable_keys(3, g.vertex_count()).count(canonical_key(g)) > 0;
            if (word.has_value() != via_search) {
                r.report(graph_json_line(g), "segment recognition agrees with word search",
                         std::string("segment=") + (word ? "yes" : "no") +
                             " search=" + (via_search ? "yes" : "no"));
                return;
            }
            if (word && !are_isomorphic(parikh_graph(*word).graph, g))
                r.report(graph_json_line(g), "witness word represents the graph",
                         "G(" + word_text(*word) + ") not isomorphic");
        });
    });

    suites["hamiltonian-binary"] = make_suite(2, 10, 0, [](SuiteRun& run) {
        sweep_words(run, 2, 2, 1, run.max_len, false, [](SuiteRun& r, const Word& w) {
            bool criterion = binary_hamiltonian(w);
            bool oracle = has_hamiltonian_cycle(parikh_graph(w).graph);
            if (criterion != oracle)
                r.report(word_text(w), std::string("oracle says ") + (oracle ? "yes" : "no"),
                         std::string("criterion says ") + (criterion ? "yes" : "no"));
        });
    });

    suites["hamiltonian-ternary"] = make_suite(3, 9, 0, [](SuiteRun& run) {
        sweep_words(run, 3, 3, 1, run.max_len, false, [](SuiteRun& r, const Word& w) {
            if (w.count(1) + w.count(3) != w.count(2))
                return;
            ParikhGraph pg = parikh_graph(w);
            if (!is_connected(pg.graph))
                return;
            bool criterion = ternary_hamiltonian(w);
            bool oracle = has_hamiltonian_cycle(pg.graph);
            if (criterion != oracle)
                r.report(word_text(w), std::string("oracle says ") + (oracle ? "yes" : "no"),
                         std::string("criterion says ") + (criterion ? "yes" : "no"));
        });
    });

    suites["hamiltonian-ordering"] = make_suite(0, 0, 10, [](SuiteRun& run) {
        sweep_graphs(run, run.max_vertices, [](SuiteRun& r, const BipartiteGraph& g) {
            if (g.x_size() != g.y_size())
                return;
            auto so = find_strong_ordering(g);
            if (!so)
                return;
            bool criterion = hamiltonian_via_strong_ordering(g, *so);
            bool oracle = has_hamiltonian_cycle(g);
            if (criterion != oracle)
                r.report(graph_json_line(g), std::string("oracle says ") + (oracle ? "yes" : "no"),
                         std::string("4-cycle criterion says ") + (criterion ? "yes" : "no"));
        });
    });

    suites["slender-partitions"] = make_suite(8, 0, 0, [](SuiteRun& run) {
        for (int s = 2; s <= std::max(2, run.max_alphabet); ++s) {
            std::string input = "s=" + std::to_string(s);
            if (run.skip(input))
                continue;
            ++run.checked;
            int classes = count_slender_classes(s);
            long long partitions = count_partitions(s);
            if (classes != partitions)
                run.report(input, std::to_string(partitions) + " partition classes",
                           std::to_string(classes) + " graph classes");
        }
    });

    suites["path-words"] = make_suite(6, 0, 0, [](SuiteRun& run) {
        for (int s = 2; s <= std::max(2, run.max_alphabet); ++s) {
            Word w = longest_path_word(s);
            if (run.skip(word_text(w)))
                continue;
            ++run.checked;
            BipartiteGraph g = parikh_graph(w).graph;
            if (!is_path_shape(g) || g.vertex_count() != 3 * s - 2)
                run.report(word_text(w),
                           "path graph on " + std::to_string(3 * s - 2) + " vertices",
                           "different shape");
        }
    });
}

std::map<std::string, SuiteFn>& registry() {
    static std::map<std::string, SuiteFn> suites;
    return suites;
}

std::once_flag builtin_flag;

void ensure_builtins() {
    std::call_once(builtin_flag, register_builtin_suites);
}

} // namespace

SuiteResult run_suite(const EnumerationSpec& spec) {
    ensure_builtins();
    auto& suites = registry();
    auto it = suites.find(spec.suite);
    if (it == suites.end())
        throw DomainError("unknown suite '" + spec.suite + "'");
    SuiteResult result;
    result.suite = spec.suite;
    it->second(spec, result);
    std::sort(result.reports.begin(), result.reports.end(),
              [](const CounterexampleReport& a, const CounterexampleReport& b) {
                  return a.input < b.input;
              });
    result.pass = result.reports.empty();
    return result;
}

std::vector<std::string> suite_names() {
    ensure_builtins();
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry())
        names.push_back(name);
    return names;
}

void register_suite(const std::string& name,
                    std::function<void(const EnumerationSpec&, SuiteResult&)> fn) {
    ensure_builtins();
    registry()[name] = std::move(fn);
}

} // namespace parikh

