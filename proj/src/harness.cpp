#include "subsec/harness.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "subsec/parallel.hpp"
#include "subsec/subdivision.hpp"

namespace subsec {

namespace {

std::string num(std::size_t v) { return std::to_string(v); }

BoundCheck skipped(BoundCheck c, std::string detail) {
    c.exact.reset();
    c.status = CheckStatus::Skipped;
    c.detail = std::move(detail);
    return c;
}

std::size_t require_n(const TheoremParams& params, std::string_view id) {
    if (!params.n) throw std::invalid_argument(std::string(id) + " needs the subdivision parameter n");
    if (*params.n < 6) throw std::invalid_argument(std::string(id) + " needs n >= 6, got " + num(*params.n));
    return *params.n;
}

bool residue_024(std::size_t n) {
    const auto r = n % 7;
    return r == 0 || r == 2 || r == 4;
}

// Solves γ_s on the k-subdivision and records it, or the skip reason.
BoundCheck solve_into(BoundCheck c, const Graph& g, std::size_t k, const HarnessOptions& options) {
    const auto map = subdivide(g, k);
    const auto res = gamma_s_exact(map.derived(), options.budget, options.solver);
    if (!res.exact())
        return skipped(std::move(c), "G^{1/" + num(k) + "}: " + res.detail);
    c.exact = res.value;
    classify(c);
    return c;
}

}  // namespace

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Holds: return "holds";
        case CheckStatus::Tight: return "tight";
        case CheckStatus::Violated: return "violated";
        case CheckStatus::Skipped: return "skipped";
    }
    return "?";
}

void classify(BoundCheck& c) {
    if (!c.exact) {
        c.status = CheckStatus::Skipped;
        return;
    }
    const std::size_t x = *c.exact;
    std::vector<std::string> broken;
    if (c.lower && x < *c.lower) broken.push_back("exact " + num(x) + " below lower bound " + num(*c.lower));
    if (c.upper && x > *c.upper) broken.push_back("exact " + num(x) + " above upper bound " + num(*c.upper));
    if (c.equality && x != *c.equality)
        broken.push_back("exact " + num(x) + (x > *c.equality ? " above" : " below") + " claimed value " +
                         num(*c.equality));
    std::string note;
    if (!broken.empty()) {
        c.status = CheckStatus::Violated;
        for (const auto& b : broken) note += (note.empty() ? "" : "; ") + b;
    } else {
        std::vector<std::string> met;
        if (c.equality && x == *c.equality) met.push_back("equality");
        if (c.lower && x == *c.lower) met.push_back("lower");
        if (c.upper && x == *c.upper) met.push_back("upper");
        c.status = met.empty() ? CheckStatus::Holds : CheckStatus::Tight;
        for (const auto& m : met) note += (note.empty() ? "tight at " : " and ") + m;
    }
    if (c.detail.empty())
        c.detail = note;
    else if (!note.empty())
        c.detail += "; " + note;
}

const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids{"g12", "star2", "g13", "g14", "g15", "g16", "r024", "prop1", "conj"};
    return ids;
}

BoundCheck check_theorem(const Graph& g, std::string_view theorem_id, const TheoremParams& params,
                         const HarnessOptions& options, std::optional<std::string> graph_id) {
    BoundCheck c;
    c.graph_id = graph_id ? std::move(*graph_id) : emit_graph6(g);
    c.theorem_id = std::string(theorem_id);
    const std::size_t n = g.n();
    const std::size_t m = g.m();

    if (theorem_id == "g12") {
        c.upper = std::min(m, n);
        if (is_star(g)) return skipped(std::move(c), "precondition: star");
        return solve_into(std::move(c), g, 2, options);
    }
    if (theorem_id == "star2") {
        c.equality = n;
        if (!is_star(g)) return skipped(std::move(c), "precondition: not a star");
        return solve_into(std::move(c), g, 2, options);
    }
    if (theorem_id == "g13") {
        c.lower = n;
        c.upper = 2 * m;
        return solve_into(std::move(c), g, 3, options);
    }
    if (theorem_id == "g14") {
        c.equality = 2 * m;
        return solve_into(std::move(c), g, 4, options);
    }
    if (theorem_id == "g15") {
        c.lower = 2 * m + 1;
        c.upper = 3 * m - max_degree(g) + 1;
        return solve_into(std::move(c), g, 5, options);
    }
    if (theorem_id == "g16") {
        const std::size_t k = require_n(params, theorem_id);
        c.equality = path_secure_formula(k + 1) * m;
        if (residue_024(k))
            return skipped(std::move(c), "precondition: n=" + num(k) + " is 0, 2 or 4 mod 7");
        return solve_into(std::move(c), g, k, options);
    }
    if (theorem_id == "r024") {
        const std::size_t k = require_n(params, theorem_id);
        c.lower = n + path_secure_formula(k - 3) * m;
        c.upper = path_secure_formula(k + 1) * m;
        if (!residue_024(k))
            return skipped(std::move(c), "precondition: n=" + num(k) + " is not 0, 2 or 4 mod 7");
        return solve_into(std::move(c), g, k, options);
    }
    if (theorem_id == "prop1") {
        const auto dom = gamma_exact(g, options.budget, options.solver);
        if (!dom.exact()) return skipped(std::move(c), "gamma: " + dom.detail);
        c.lower = dom.value;
        const auto sec = gamma_s_exact(g, options.budget, options.solver);
        if (!sec.exact()) return skipped(std::move(c), "gamma_s: " + sec.detail);
        c.exact = sec.value;
        c.detail = "gamma=" + num(*dom.value);
        classify(c);
        return c;
    }
    if (theorem_id == "conj") {
        // Strict bound γ_s > 4n/5 as the smallest integer above 4n/5.
        c.lower = 4 * n / 5 + 1;
        if (n == 0) return skipped(std::move(c), "precondition: empty graph");
        auto out = solve_into(std::move(c), g, 2, options);
        if (out.exact) {
            std::ostringstream ratio;
            ratio << "ratio " << *out.exact << "/" << n << "=" << std::fixed << std::setprecision(4)
                  << static_cast<double>(*out.exact) / static_cast<double>(n);
            out.detail = out.detail.empty() ? ratio.str() : ratio.str() + "; " + out.detail;
        }
        return out;
    }
    throw std::invalid_argument("unknown theorem id '" + std::string(theorem_id) + "'");
}

std::vector<BoundCheck> run_corpus(const std::vector<GraphRecord>& corpus, const std::vector<std::string>& theorems,
                                   const TheoremParams& params, const HarnessOptions& options, std::size_t workers) {
    for (const auto& t : theorems)
        if (std::find(theorem_ids().begin(), theorem_ids().end(), t) == theorem_ids().end())
            throw std::invalid_argument("unknown theorem id '" + t + "'");
    std::vector<BoundCheck> out(corpus.size() * theorems.size());
    parallel_for_index(corpus.size(), workers, [&](std::size_t i) {
        for (std::size_t j = 0; j < theorems.size(); ++j)
            out[i * theorems.size() + j] = check_theorem(corpus[i].graph, theorems[j], params, options, corpus[i].id);
    });
    return out;
}

std::map<CheckStatus, std::size_t> status_counts(const std::vector<BoundCheck>& checks) {
    std::map<CheckStatus, std::size_t> counts{
        {CheckStatus::Holds, 0}, {CheckStatus::Tight, 0}, {CheckStatus::Violated, 0}, {CheckStatus::Skipped, 0}};
    for (const auto& c : checks) ++counts[c.status];
    return counts;
}

std::string summary_line(const std::vector<BoundCheck>& checks) {
    std::ostringstream out;
    out << "# checks=" << checks.size();
    for (auto [status, count] : status_counts(checks)) out << ' ' << to_string(status) << '=' << count;
    return out.str();
}

std::string tsv_header() { return "graph_id\ttheorem\tlower\tupper\tequality\texact\tstatus\tdetail"; }

std::string to_tsv(const BoundCheck& c) {
    auto field = [](const std::optional<std::size_t>& v) { return v ? num(*v) : std::string("-"); };
    std::ostringstream out;
    out << c.graph_id << '\t' << c.theorem_id << '\t' << field(c.lower) << '\t' << field(c.upper) << '\t'
        << field(c.equality) << '\t' << field(c.exact) << '\t' << to_string(c.status) << '\t'
        << (c.detail.empty() ? "-" : c.detail);
    return out.str();
}

std::string to_jsonl(const BoundCheck& c) {
    auto field = [](const std::optional<std::size_t>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
    nlohmann::ordered_json j;
    j["graph_id"] = c.graph_id;
    j["theorem"] = c.theorem_id;
    j["lower"] = field(c.lower);
    j["upper"] = field(c.upper);
    j["equality"] = field(c.equality);
    j["exact"] = field(c.exact);
    j["status"] = to_string(c.status);
    j["detail"] = c.detail;
    return j.dump();
}

ConjectureReport conjecture_scan(const std::vector<GraphRecord>& corpus, const HarnessOptions& options,
                                 std::size_t workers) {
    ConjectureReport report;
    report.rows.resize(corpus.size());
    parallel_for_index(corpus.size(), workers, [&](std::size_t i) {
        const Graph& g = corpus[i].graph;
        ConjectureRow& row = report.rows[i];
        row.graph_id = corpus[i].id;
        row.order = g.n();
        if (g.n() == 0) {
            row.detail = "empty graph";
            return;
        }
        const auto map = subdivide(g, 2);
        const auto res = gamma_s_exact(map.derived(), options.budget, options.solver);
        if (res.exact())
            row.value = res.value;
        else
            row.detail = "G^{1/2}: " + res.detail;
    });
    for (const auto& row : report.rows) {
        auto r = row.ratio();
        if (!r) {
            report.skipped.push_back(row.graph_id);
            continue;
        }
        if (!report.min_ratio || *r < *report.min_ratio) {
            report.min_ratio = r;
            report.minimizers.clear();
        }
        if (*r == *report.min_ratio) report.minimizers.push_back(row.graph_id);
        if (row.counterexample()) report.counterexamples.push_back(row.graph_id);
    }
    return report;
}

std::string to_text(const ConjectureReport& report) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(6);
    for (const auto& row : report.rows) {
        out << row.graph_id << "\tn=" << row.order << '\t';
        if (auto r = row.ratio())
            out << "gamma_s=" << *row.value << "\tratio=" << r->num << '/' << r->den << '=' << r->value()
                << (row.counterexample() ? "\tCOUNTEREXAMPLE" : "");
        else
            out << "skipped\t" << row.detail;
        out << '\n';
    }
    out << "# graphs=" << report.rows.size() << " skipped=" << report.skipped.size()
        << " counterexamples=" << report.counterexamples.size() << '\n';
    if (report.min_ratio) {
        out << "# min_ratio=" << report.min_ratio->num << '/' << report.min_ratio->den << '='
            << report.min_ratio->value() << " attained_by=";
        for (std::size_t i = 0; i < report.minimizers.size(); ++i) out << (i ? "," : "") << report.minimizers[i];
        out << '\n';
    }
    out << "# verdict=" << (report.counterexamples.empty() ? "no counterexample" : "counterexample found") << '\n';
    return out.str();
}

std::string to_jsonl(const ConjectureReport& report) {
    std::ostringstream out;
    for (const auto& row : report.rows) {
        nlohmann::ordered_json j;
        j["graph_id"] = row.graph_id;
        j["order"] = row.order;
        j["gamma_s"] = row.value ? nlohmann::json(*row.value) : nlohmann::json(nullptr);
        j["ratio"] = row.ratio() ? nlohmann::json(row.ratio()->value()) : nlohmann::json(nullptr);
        j["counterexample"] = row.counterexample();
        j["detail"] = row.detail;
        out << j.dump() << '\n';
    }
    nlohmann::ordered_json s;
    s["summary"] = true;
    s["graphs"] = report.rows.size();
    s["min_ratio"] = report.min_ratio ? nlohmann::json(std::to_string(report.min_ratio->num) + "/" +
                                                       std::to_string(report.min_ratio->den))
                                      : nlohmann::json(nullptr);
    s["attained_by"] = report.minimizers;
    s["counterexamples"] = report.counterexamples;
    s["skipped"] = report.skipped;
    out << s.dump() << '\n';
    return out.str();
}

}  // namespace subsec
