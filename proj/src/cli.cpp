#include "bei/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "bei/batch.hpp"
#include "bei/graph_io.hpp"
#include "bei/report.hpp"
#include "bei/verify.hpp"

namespace bei {

namespace {

enum class InputFormat { Auto, EdgeList, Graph6 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int default_cap() {
    const char* env = std::getenv("BEI_MAX_N");
    if (env == nullptr || *env == '\0') return kDefaultVertexCap;
    try {
        std::size_t used = 0;
        const int cap = std::stoi(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument(env);
        make_parse_options(cap);
        return cap;
    } catch (const std::exception&) {
        throw UsageError("BEI_MAX_N must be an integer in [1, " + std::to_string(kHardVertexLimit) + "], got '" +
                         std::string(env) + "'");
    }
}

ParseOptions options_for(int cap) {
    try {
        return make_parse_options(cap);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Graph load_graph(const std::string& path, InputFormat format, const ParseOptions& options) {
    const std::string text = read_file(path);
    if (format == InputFormat::Auto) {
        const bool g6 = path.ends_with(".g6") || std::string_view(text).starts_with(">>graph6<<");
        format = g6 ? InputFormat::Graph6 : InputFormat::EdgeList;
    }
    if (format == InputFormat::EdgeList) return parse_edge_list(text, options);

    std::istringstream lines(text);
    std::vector<std::string> records;
    for (std::string line; std::getline(lines, line);) {
        if (!line.empty() && line != "\r") records.push_back(line);
    }
    if (records.size() != 1) {
        throw UsageError("expected exactly one graph6 record in '" + path + "', found " +
                         std::to_string(records.size()) + " (use 'screen' for corpora)");
    }
    return parse_graph6(records.front(), options);
}

int report_parse_error(const GraphParseError& e, std::ostream& err) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ParseErrorKind::Oversize ? kExitSizeCap : kExitInputError;
}

int print_verify(int max_n, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    const auto outcomes = run_property_suite(max_n, [&](int n) { err << "checked all graphs on " << n << " vertices\n"; });
    bool all_passed = true;
    for (const auto& o : outcomes) {
        out << (o.passed() ? "PASS " : "FAIL ") << o.name << "  (" << o.checked << " checks";
        if (!o.passed()) out << ", " << o.failure_count << " failures";
        out << ")\n";
        for (const auto& f : o.failures) out << "    counterexample " << f << '\n';
        all_passed = all_passed && o.passed();
    }
    const auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out << (all_passed ? "all properties hold" : "property violations found") << " for n <= " << max_n << " ("
        << seconds << " s)\n";
    return all_passed ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Binomial edge ideal invariants and Cohen-Macaulay screening", "bei"};
    app.require_subcommand(1);

    const std::map<std::string, InputFormat> formats{
        {"auto", InputFormat::Auto}, {"edgelist", InputFormat::EdgeList}, {"graph6", InputFormat::Graph6}};

    std::string path;
    InputFormat format = InputFormat::Auto;
    bool as_json = false;
    std::optional<int> max_n;
    std::string out_path;
    unsigned parallel = 1;
    int verify_max_n = 5;

    auto* invariants = app.add_subcommand("invariants", "Report every invariant of one graph");
    invariants->add_option("file", path, "Edge-list or graph6 file")->required();
    invariants->add_option("--format", format, "edgelist, graph6 or auto (by extension / header)")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    invariants->add_flag("--json", as_json, "Emit exact JSON");
    invariants->add_option("--max-n", max_n, "Vertex cap (default 24 or BEI_MAX_N)");

    auto* primes = app.add_subcommand("primes", "List the minimal primes of J_G");
    primes->add_option("file", path, "Edge-list or graph6 file")->required();
    primes->add_option("--format", format, "edgelist, graph6 or auto")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    primes->add_option("--max-n", max_n, "Vertex cap (default 24 or BEI_MAX_N)");

    auto* screen = app.add_subcommand("screen", "Screen a graph6 corpus, writing JSONL");
    screen->add_option("file", path, "Newline-separated graph6 corpus")->required();
    screen->add_option("--out", out_path, "JSONL output path")->required();
    screen->add_option("--parallel", parallel, "Worker threads (0 = hardware concurrency)");
    screen->add_option("--max-n", max_n, "Vertex cap (default 24 or BEI_MAX_N)");

    auto* verify = app.add_subcommand("verify", "Check every property over all small labelled graphs");
    verify->add_option("--max-n", verify_max_n, "Largest vertex count, 3..7");

    std::vector<const char*> argv{"bei"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (verify->parsed()) {
            if (verify_max_n < kVerifyMinVertices || verify_max_n > kVerifyMaxVertices) {
                err << "error: --max-n must lie in [" << kVerifyMinVertices << ", " << kVerifyMaxVertices
                    << "], got " << verify_max_n << '\n';
                return kExitInputError;
            }
            return print_verify(verify_max_n, out, err);
        }

        const ParseOptions options = options_for(max_n.value_or(default_cap()));

        if (screen->parsed()) {
            std::ifstream in(path, std::ios::binary);
            if (!in) throw UsageError("cannot read '" + path + "'");
            std::ofstream sink(out_path, std::ios::binary | std::ios::trunc);
            if (!sink) throw UsageError("cannot write '" + out_path + "'");
            if (parallel == 0) parallel = std::max(1U, std::thread::hardware_concurrency());
            const BatchSummary s = screen_corpus(in, sink, parallel, options);
            out << "records           " << s.records << '\n'
                << "cm-certified      " << s.certified << '\n'
                << "not-cm-certified  " << s.not_certified << '\n'
                << "inconclusive      " << s.inconclusive << '\n'
                << "errors            " << s.errors << '\n';
            return (s.records == 0 || s.errors < s.records) ? kExitOk : kExitInputError;
        }

        const Graph g = load_graph(path, format, options);
        if (primes->parsed()) {
            out << render_primes(primes_in_listing_order(minimal_primes(g)));
            return kExitOk;
        }
        const InvariantReport report = build_report(g);
        if (as_json) {
            out << to_json(report).dump(2) << '\n';
        } else {
            out << render_table(report);
        }
        return kExitOk;
    } catch (const GraphParseError& e) {
        return report_parse_error(e, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

}  // namespace bei
