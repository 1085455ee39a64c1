#include "subsec/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "subsec/certificates.hpp"
#include "subsec/enumerate.hpp"
#include "subsec/generators.hpp"
#include "subsec/graph_io.hpp"
#include "subsec/harness.hpp"
#include "subsec/subdivision.hpp"

namespace subsec {

namespace {

struct RunConfig {
    std::string input = "-";
    std::string format = "g6";
    std::string output_format;
    std::string family;
    std::size_t n = 0;
    std::size_t k = 0;
    std::optional<double> p;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> theorems;
    std::string cert_theorem;
    std::string labels_path;
    SolverBudget budget;
    std::size_t threads = 0;
    bool naive = false;
    bool fail_on_violation = false;
    bool all_graphs = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<GraphRecord> load(const RunConfig& cfg, std::istream& in) {
    const GraphFormat format = parse_format(cfg.format);
    if (cfg.input == "-") return read_graphs(in, format);
    std::ifstream file(cfg.input);
    if (!file) throw UsageError("cannot open input '" + cfg.input + "'");
    return read_graphs(file, format);
}

void write_graph(std::ostream& out, const Graph& g, const std::string& format) {
    if (parse_format(format) == GraphFormat::Graph6)
        out << emit_graph6(g) << '\n';
    else
        out << emit_edge_list(g);
}

std::string join_ids(const std::vector<VertexId>& ids) {
    std::string s;
    for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + std::to_string(ids[i]);
    return s;
}

HarnessOptions harness_options(const RunConfig& cfg, std::size_t solver_threads) {
    HarnessOptions h;
    h.budget = cfg.budget;
    h.solver.mode = cfg.naive ? SearchMode::Naive : SearchMode::Pruned;
    h.solver.threads = solver_threads;
    return h;
}

std::size_t workers(const RunConfig& cfg) { return cfg.threads ? cfg.threads : default_worker_count(); }

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
    if (cfg.family == "random" && (!cfg.p || !cfg.seed)) throw UsageError("--family random needs --p and --seed");
    Graph g = generate(parse_family(cfg.family), cfg.n, cfg.p, cfg.seed);
    write_graph(out, g, cfg.output_format.empty() ? cfg.format : cfg.output_format);
    return 0;
}

int cmd_enum(const RunConfig& cfg, std::ostream& out) {
    for (const auto& g : cfg.all_graphs ? enumerate_all(cfg.n) : enumerate_connected(cfg.n)) out << emit_graph6(g) << '\n';
    return 0;
}

int cmd_subdivide(const RunConfig& cfg, std::istream& in, std::ostream& out) {
    std::ofstream labels;
    if (!cfg.labels_path.empty()) {
        labels.open(cfg.labels_path);
        if (!labels) throw UsageError("cannot open label file '" + cfg.labels_path + "'");
    }
    for (const auto& rec : load(cfg, in)) {
        const auto map = subdivide(rec.graph, cfg.k);
        write_graph(out, map.derived(), cfg.output_format.empty() ? cfg.format : cfg.output_format);
        if (labels) labels << map.label_table();
    }
    return 0;
}

int cmd_gamma(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err, bool secure) {
    SolverOptions opts;
    opts.mode = cfg.naive ? SearchMode::Naive : SearchMode::Pruned;
    opts.threads = workers(cfg);
    for (const auto& rec : load(cfg, in)) {
        const auto res = secure ? gamma_s_exact(rec.graph, cfg.budget, opts) : gamma_exact(rec.graph, cfg.budget, opts);
        out << "value=" << (res.value ? std::to_string(*res.value) : "-") << " status=" << to_string(res.status)
            << " witness=" << (res.witness ? join_ids(res.witness->members()) : "-") << '\n';
        if (!res.exact()) err << "skipped " << rec.id << ": " << res.detail << '\n';
    }
    return 0;
}

void print_certificate(std::ostream& out, const Certificate& c, const SubdivisionMap& map) {
    const auto ids = c.set.members();
    out << "theorem=" << c.theorem_id << " k=" << map.k() << " size=" << ids.size() << " claimed_size=" << c.claimed_size
        << " validated=" << (c.validated ? "true" : "false") << '\n';
    out << "set=" << join_ids(ids) << '\n';
    for (auto id : ids) {
        const auto label = map.label(id);
        out << id << '\t';
        if (const auto* x = std::get_if<Internal>(&label))
            out << "x_" << x->l << "^{" << x->u << "," << x->v << "}";
        else
            out << std::get<Original>(label).u;
        out << '\n';
    }
}

int cmd_cert(const RunConfig& cfg, std::istream& in, std::ostream& out) {
    const std::string& t = cfg.cert_theorem;
    std::size_t k = 0;
    if (t == "half") k = 2;
    else if (t == "third") k = 3;
    else if (t == "quarter") k = 4;
    else if (t == "fifth") k = 5;
    else if (t == "star" || t == "general") {
        k = cfg.k ? cfg.k : cfg.n;
        if (!k) throw UsageError("--theorem " + t + " needs --k/--n");
    }
    const auto graphs = load(cfg, in);
    for (const auto& rec : graphs) {
        if (graphs.size() > 1) out << "graph=" << rec.id << '\n';
        const auto map = subdivide(rec.graph, k);
        if (t == "half") {
            auto [internal, original] = cert_half(map);
            print_certificate(out, internal, map);
            print_certificate(out, original, map);
        } else if (t == "star") {
            print_certificate(out, cert_star(map), map);
        } else if (t == "third") {
            print_certificate(out, cert_third(map), map);
        } else if (t == "quarter") {
            print_certificate(out, cert_quarter(map), map);
        } else if (t == "fifth") {
            print_certificate(out, cert_fifth(map), map);
        } else {
            print_certificate(out, cert_general(map), map);
        }
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg, std::istream& in, std::ostream& out) {
    const auto corpus = load(cfg, in);
    std::vector<std::string> theorems;
    for (const auto& spec : cfg.theorems) {
        std::stringstream ss(spec);
        for (std::string id; std::getline(ss, id, ',');)
            if (!id.empty()) theorems.push_back(id);
    }
    if (theorems.empty()) throw UsageError("verify needs at least one --theorem");
    TheoremParams params;
    if (cfg.n) params.n = cfg.n;
    const auto checks = run_corpus(corpus, theorems, params, harness_options(cfg, 1), workers(cfg));
    const bool jsonl = cfg.output_format == "jsonl";
    if (!jsonl) out << tsv_header() << '\n';
    for (const auto& c : checks) out << (jsonl ? to_jsonl(c) : to_tsv(c)) << '\n';
    if (!jsonl) out << summary_line(checks) << '\n';
    const bool violated = status_counts(checks).at(CheckStatus::Violated) > 0;
    return cfg.fail_on_violation && violated ? kExitViolation : 0;
}

int cmd_conjecture(const RunConfig& cfg, std::istream& in, std::ostream& out) {
    const auto report = conjecture_scan(load(cfg, in), harness_options(cfg, 1), workers(cfg));
    out << (cfg.output_format == "jsonl" ? to_jsonl(report) : to_text(report));
    return 0;
}

void add_input(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("-i,--input,--corpus", cfg.input, "graph file, or - for standard input");
    cmd->add_option("-f,--format", cfg.format, "input format")->check(CLI::IsMember({"g6", "edges"}));
}

void add_budget(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--max-vertices", cfg.budget.max_vertices, "largest graph solved exactly")
        ->check(CLI::Range(std::size_t{1}, kMaxSolverVertices));
    cmd->add_option("--max-nodes", cfg.budget.max_nodes, "search-node cap")->check(CLI::PositiveNumber);
    cmd->add_option("--time-ms", cfg.budget.time_ms, "wall-clock cap per solve")->check(CLI::PositiveNumber);
    cmd->add_option("--threads", cfg.threads, "worker threads (default: SUBSEC_THREADS or all cores)")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--naive", cfg.naive, "unpruned subset enumeration");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact secure domination toolkit for graph subdivisions", "subsec"};
    app.require_subcommand(1, 1);
    RunConfig cfg;

    auto* gen = app.add_subcommand("gen", "generate a named graph");
    gen->add_option("--family", cfg.family)->required()->check(
        CLI::IsMember({"path", "cycle", "star", "complete", "wheel", "random"}));
    gen->add_option("-n,--n", cfg.n)->required();
    gen->add_option("--p", cfg.p, "edge probability (random)");
    gen->add_option("--seed", cfg.seed, "seed (random)");
    gen->add_option("-f,--format", cfg.format)->check(CLI::IsMember({"g6", "edges"}));

    auto* en = app.add_subcommand("enum", "all connected graphs on n <= 7 vertices up to isomorphism");
    en->add_option("-n,--n", cfg.n)->required()->check(CLI::Range(std::size_t{1}, kMaxEnumerationOrder));
    en->add_flag("--all", cfg.all_graphs, "include disconnected graphs");

    auto* sub = app.add_subcommand("subdivide", "k-subdivide each input graph");
    add_input(sub, cfg);
    sub->add_option("-k,--k", cfg.k)->required()->check(CLI::PositiveNumber);
    sub->add_option("--output-format", cfg.output_format)->check(CLI::IsMember({"g6", "edges"}));
    sub->add_option("--labels", cfg.labels_path, "write the id/label table here");

    auto* gamma = app.add_subcommand("gamma", "domination number");
    auto* gamma_s = app.add_subcommand("gamma-s", "secure domination number");
    for (auto* cmd : {gamma, gamma_s}) {
        add_input(cmd, cfg);
        add_budget(cmd, cfg);
    }

    auto* cert = app.add_subcommand("cert", "build and validate a proof construction");
    add_input(cert, cfg);
    cert->add_option("--theorem", cfg.cert_theorem)->required()->check(
        CLI::IsMember({"half", "star", "third", "quarter", "fifth", "general"}));
    cert->add_option("-k,--k", cfg.k, "subdivision parameter (star)");
    cert->add_option("-n,--n", cfg.n, "subdivision parameter (general)");

    auto* verify = app.add_subcommand("verify", "evaluate claims over a corpus");
    add_input(verify, cfg);
    add_budget(verify, cfg);
    verify->add_option("--theorem", cfg.theorems, "claim tags, repeatable or comma-separated")->required();
    verify->add_option("-n,--n", cfg.n, "subdivision parameter for g16/r024");
    verify->add_option("-o,--output", cfg.output_format)->check(CLI::IsMember({"tsv", "jsonl"}));
    verify->add_flag("--fail-on-violation", cfg.fail_on_violation, "exit 2 if any claim is violated");

    auto* conj = app.add_subcommand("conjecture", "scan gamma_s(G^{1/2}) / |V(G)| over a corpus");
    add_input(conj, cfg);
    add_budget(conj, cfg);
    conj->add_option("-o,--output", cfg.output_format)->check(CLI::IsMember({"text", "jsonl"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*gen) return cmd_gen(cfg, out);
        if (*en) return cmd_enum(cfg, out);
        if (*sub) return cmd_subdivide(cfg, in, out);
        if (*gamma) return cmd_gamma(cfg, in, out, err, false);
        if (*gamma_s) return cmd_gamma(cfg, in, out, err, true);
        if (*cert) return cmd_cert(cfg, in, out);
        if (*verify) return cmd_verify(cfg, in, out);
        if (*conj) return cmd_conjecture(cfg, in, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const GraphError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace subsec
