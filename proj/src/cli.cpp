#include "parikh/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "parikh/analysis.hpp"
#include "parikh/json_io.hpp"
#include "parikh/oracle.hpp"
#include "parikh/recognition.hpp"

namespace parikh::cli {

namespace {

using nlohmann::json;

std::optional<int> env_int(const char* name) {
    const char* value = std::getenv(name);
    if (!value || !*value)
        return std::nullopt;
    try {
        return std::stoi(value);
    } catch (const std::exception&) {
        throw DomainError(std::string(name) + " must be an integer, got '" + value + "'");
    }
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file)
        throw DomainError("cannot open input file '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

std::optional<int> flag_or_env(const CLI::Option* opt, int value, const char* env_name) {
    if (opt && opt->count() > 0)
        return value;
    return env_int(env_name);
}

json ordering_json(const StrongOrdering& so) {
    return json{{"x", so.order_x}, {"y", so.order_y}};
}

json embedding_json(const std::map<std::string, ParikhVertex>& embedding, const Alphabet& alphabet) {
    json j = json::object();
    for (const auto& [label, vertex] : embedding)
        j[label] = vertex.label(alphabet);
    return j;
}

json trace_json(const SynthesisTrace& trace) {
    json blocks = json::array();
    for (int p = 0; p < trace.decomposition.steps(); ++p)
        blocks.push_back(json{{"x", trace.decomposition.block_x(p)},
                              {"y", trace.decomposition.block_y(p)}});
    json steps = json::array();
    for (const auto& step : trace.steps)
        steps.push_back(json{{"word", word_text(step.word)},
                             {"alphabet_size", step.word.alphabet().size()},
                             {"embedding", embedding_json(step.embedding, step.word.alphabet())},
                             {"block_letters", step.block_letters}});
    return json{{"ordering", ordering_json(trace.ordering)},
                {"part_x_low", trace.part_x_low},
                {"blocks", blocks},
                {"steps", steps}};
}

struct CommandContext {
    std::ostream& out;
    std::ostream& err;
};

int cmd_build(CommandContext ctx, const std::string& word_text_arg, std::optional<int> alphabet,
              const std::string& format) {
    Word w = parse_word(word_text_arg, alphabet);
    ParikhGraph pg = parikh_graph(w);
    if (format == "dot")
        ctx.out << graph_to_dot(pg.graph);
    else
        ctx.out << graph_to_json(pg.graph).dump() << "\n";
    return 0;
}

int cmd_recognize(CommandContext ctx, const std::string& input, const std::string& arity, int cap) {
    BipartiteGraph g = graph_from_json_text(read_input(input));
    json result{{"representable", false},
                {"arity", nullptr},
                {"word", nullptr},
                {"strong_ordering", nullptr}};
    std::optional<Word> word;
    if (arity == "2") {
        word = recognize_binary(g);
    } else if (arity == "3") {
        word = recognize_ternary(g);
    } else {
        word = synthesize_any(g, cap);
        if (is_connected(g)) {
            json minimal = nullptr;
            if (recognize_binary(g))
                minimal = 2;
            else if (recognize_ternary(g))
                minimal = 3;
            result["minimal_arity"] = minimal;
        }
    }
    if (word) {
        result["representable"] = true;
        result["arity"] = word->alphabet().size();
        result["word"] = word_text(*word);
        if (!g.empty() && is_connected(g)) {
            if (auto so = find_strong_ordering(g, cap))
                result["strong_ordering"] = ordering_json(*so);
        }
    }
    ctx.out << result.dump() << "\n";
    return 0;
}

int cmd_synthesize(CommandContext ctx, const std::string& input, bool trace, int cap) {
    BipartiteGraph g = graph_from_json_text(read_input(input));
    json result;
    if (!g.empty() && is_connected(g)) {
        SynthesisResult res = synthesize_word(g, cap);
        result["word"] = word_text(res.word);
        result["alphabet_size"] = res.word.alphabet().size();
        result["embedding"] = embedding_json(res.embedding, res.word.alphabet());
        if (trace)
            result["trace"] = trace_json(res.trace);
    } else {
        auto word = synthesize_any(g, cap);
        if (!word)
            throw NotRepresentableError("a component admits no strong ordering");
        result["word"] = word_text(*word);
        result["alphabet_size"] = word->alphabet().size();
        result["embedding"] = nullptr;
        if (trace)
            result["trace"] = nullptr; // per-component traces are not recorded
    }
    ctx.out << result.dump() << "\n";
    return 0;
}

int cmd_diameter(CommandContext ctx, const std::string& word_arg, std::optional<int> alphabet) {
    DiameterReport report = diameter_report(parse_word(word_arg, alphabet));
    json j{{"word", word_text(report.word)},
           {"alphabet_size", report.alphabet_size},
           {"connected", report.connected},
           {"diameter", report.diameter ? json(*report.diameter) : json(nullptr)},
           {"core_nonempty", report.core_nonempty},
           {"applicable_bound", report.applicable_bound},
           {"bound_source", bound_source_name(report.bound_source)},
           {"bound_holds", report.bound_holds ? json(*report.bound_holds) : json(nullptr)}};
    ctx.out << j.dump() << "\n";
    return 0;
}

int cmd_hamiltonian(CommandContext ctx, const std::string& word_arg, std::optional<int> alphabet) {
    Word w = parse_word(word_arg, alphabet);
    const int s = w.alphabet().size();
    bool result;
    std::string criterion;
    if (s == 2) {
        result = binary_hamiltonian(w);
        criterion = "binary-prefix";
    } else if (s == 3) {
        result = ternary_hamiltonian(w);
        criterion = "ternary-position";
    } else {
        throw DomainError("Hamiltonicity criteria exist for alphabet sizes 2 and 3 only");
    }
    json j{{"word", word_text(w)},
           {"alphabet_size", s},
           {"criterion", criterion},
           {"hamiltonian", result}};
    ctx.out << j.dump() << "\n";
    return 0;
}

int cmd_slender(CommandContext ctx, int size, bool count_only) {
    if (count_only) {
        ctx.out << count_slender_classes(size) << "\n";
        return 0;
    }
    json classes = json::array();
    for (const auto& partition : partitions_of(size))
        classes.push_back(json{{"partition", partition},
                               {"word", word_text(slender_word_for_partition(partition))}});
    json j{{"size", size}, {"partition_count", count_partitions(size)}, {"classes", classes}};
    ctx.out << j.dump() << "\n";
    return 0;
}

int cmd_longest_path(CommandContext ctx, int arity) {
    Word w = longest_path_word(arity);
    json j{{"alphabet_size", arity}, {"word", word_text(w)}, {"path_length", 3 * arity - 3}};
    ctx.out << j.dump() << "\n";
    return 0;
}

int cmd_compose(CommandContext ctx, const std::vector<std::string>& word_args) {
    std::vector<Word> words;
    for (const auto& text : word_args)
        words.push_back(parse_word(text));
    ctx.out << word_text(compose_components(words)) << "\n";
    return 0;
}

int cmd_core(CommandContext ctx, const std::string& word_arg, const std::string& pattern_arg,
             std::optional<int> alphabet) {
    Word w = parse_word(word_arg, alphabet);
    Word v = parse_word(pattern_arg, w.alphabet().size());
    ctx.out << word_text(core(w, v)) << "\n";
    return 0;
}

int cmd_verify(CommandContext ctx, const EnumerationSpec& spec, bool list) {
    if (list) {
        for (const auto& name : suite_names())
            ctx.out << name << "\n";
        return 0;
    }
    SuiteResult result = run_suite(spec);
    for (const auto& report : result.reports) {
        json j{{"suite", report.suite},
               {"input", report.input},
               {"expected", report.expected},
               {"actual", report.actual},
               {"repro", report.repro}};
        ctx.out << j.dump() << "\n";
    }
    ctx.err << "suite " << result.suite << ": " << (result.pass ? "pass" : "FAIL") << " ("
            << result.checked << " inputs checked, " << result.reports.size()
            << " counterexamples)\n";
    return result.pass ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Parikh word representable graphs: build, recognize, synthesize, verify"};
    app.name("parikh");
    app.require_subcommand(1);
    CommandContext ctx{out, err};

    // build
    auto* build = app.add_subcommand("build", "Parikh graph of a word (JSON or DOT)");
    std::string build_word;
    std::optional<int> build_alphabet;
    std::string build_format = "json";
    build->add_option("word", build_word, "word (letters or comma-separated indices)")->required();
    build->add_option("--alphabet-size", build_alphabet, "alphabet size (default: max letter)");
    build->add_option("--format", build_format, "output format")
        ->check(CLI::IsMember({"json", "dot"}));

    // recognize
    auto* recognize = app.add_subcommand("recognize", "decide representability of a graph");
    std::string recognize_input;
    std::string recognize_arity = "any";
    int recognize_cap = kDefaultOrderingSearchCap;
    recognize->add_option("--input", recognize_input, "graph JSON file or -")->required();
    recognize->add_option("--arity", recognize_arity, "2, 3 or any")
        ->check(CLI::IsMember({"2", "3", "any"}));
    auto* recognize_cap_opt =
        recognize->add_option("--max-vertices", recognize_cap, "search cap per component");

    // synthesize
    auto* synthesize = app.add_subcommand("synthesize", "construct a representing word");
    std::string synthesize_input;
    bool synthesize_trace = false;
    int synthesize_cap = kDefaultOrderingSearchCap;
    synthesize->add_option("--input", synthesize_input, "graph JSON file or -")->required();
    synthesize->add_flag("--trace", synthesize_trace, "dump the synthesis trace");
    auto* synthesize_cap_opt =
        synthesize->add_option("--max-vertices", synthesize_cap, "search cap per component");

    // diameter
    auto* diameter_cmd = app.add_subcommand("diameter", "diameter report with the tightest bound");
    std::string diameter_word;
    std::optional<int> diameter_alphabet;
    diameter_cmd->add_option("word", diameter_word)->required();
    diameter_cmd->add_option("--alphabet-size", diameter_alphabet);

    // hamiltonian
    auto* hamiltonian = app.add_subcommand("hamiltonian", "Hamiltonicity criterion for s = 2 or 3");
    std::string hamiltonian_word;
    std::optional<int> hamiltonian_alphabet;
    hamiltonian->add_option("word", hamiltonian_word)->required();
    hamiltonian->add_option("--alphabet-size", hamiltonian_alphabet);

    // slender
    auto* slender = app.add_subcommand("slender", "slender-word classes per partition");
    int slender_size = 0;
    bool slender_count = false;
    slender->add_option("--size", slender_size, "alphabet size")->required();
    slender->add_flag("--count", slender_count, "print only the class count");

    // longest-path
    auto* longest = app.add_subcommand("longest-path", "longest representable path word");
    int longest_arity = 0;
    longest->add_option("--arity", longest_arity, "alphabet size")->required();

    // compose
    auto* compose = app.add_subcommand("compose", "compose words into one disjoint-union word");
    std::vector<std::string> compose_words;
    compose->add_option("words", compose_words, "component words")->required()->expected(-1);

    // core
    auto* core_cmd = app.add_subcommand("core", "v-core of a word");
    std::string core_word, core_pattern;
    std::optional<int> core_alphabet;
    core_cmd->add_option("word", core_word)->required();
    core_cmd->add_option("pattern", core_pattern)->required();
    core_cmd->add_option("--alphabet-size", core_alphabet);

    // verify
    auto* verify = app.add_subcommand("verify", "run an exhaustive verification suite");
    EnumerationSpec spec;
    bool verify_list = false;
    int verify_max_len = 0, verify_alphabet = 0, verify_vertices = 0, verify_jobs = 0;
    std::string verify_focus;
    verify->add_option("--suite", spec.suite, "suite name (see --list)");
    auto* len_opt = verify->add_option("--max-len", verify_max_len, "max word length");
    auto* alpha_opt = verify->add_option("--alphabet-size", verify_alphabet, "max alphabet size");
    auto* vert_opt = verify->add_option("--max-vertices", verify_vertices, "graph vertex cap");
    auto* jobs_opt = verify->add_option("--jobs", verify_jobs, "parallel workers");
    auto* focus_opt = verify->add_option("--focus", verify_focus, "restrict to one input");
    verify->add_flag("--list", verify_list, "list available suites");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << app.help();
        return 2;
    }

    try {
        if (*build)
            return cmd_build(ctx, build_word, build_alphabet, build_format);
        if (*recognize) {
            int cap = flag_or_env(recognize_cap_opt, recognize_cap, "PARIKH_MAX_VERTICES")
                          .value_or(kDefaultOrderingSearchCap);
            return cmd_recognize(ctx, recognize_input, recognize_arity, cap);
        }
        if (*synthesize) {
            int cap = flag_or_env(synthesize_cap_opt, synthesize_cap, "PARIKH_MAX_VERTICES")
                          .value_or(kDefaultOrderingSearchCap);
            return cmd_synthesize(ctx, synthesize_input, synthesize_trace, cap);
        }
        if (*diameter_cmd)
            return cmd_diameter(ctx, diameter_word, diameter_alphabet);
        if (*hamiltonian)
            return cmd_hamiltonian(ctx, hamiltonian_word, hamiltonian_alphabet);
        if (*slender)
            return cmd_slender(ctx, slender_size, slender_count);
        if (*longest)
            return cmd_longest_path(ctx, longest_arity);
        if (*compose)
            return cmd_compose(ctx, compose_words);
        if (*core_cmd)
            return cmd_core(ctx, core_word, core_pattern, core_alphabet);
        if (*verify) {
            if (!verify_list && spec.suite.empty())
                throw DomainError("verify needs --suite or --list");
            if (len_opt->count())
                spec.max_len = verify_max_len;
            if (alpha_opt->count())
                spec.alphabet_size = verify_alphabet;
            spec.max_vertices = flag_or_env(vert_opt, verify_vertices, "PARIKH_MAX_VERTICES");
            spec.jobs = flag_or_env(jobs_opt, verify_jobs, "PARIKH_JOBS");
            if (focus_opt->count())
                spec.focus = verify_focus;
            return cmd_verify(ctx, spec, verify_list);
        }
    } catch (const CapacityError& e) {
        err << "capacity error: " << e.what() << "\n";
        return 2;
    } catch (const NotRepresentableError& e) {
        err << "not representable: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace parikh::cli
