#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subsec/domination.hpp"
#include "subsec/graph_io.hpp"

namespace subsec {

enum class CheckStatus { Holds, Tight, Violated, Skipped };

std::string to_string(CheckStatus s);

/// One claim evaluated on one graph.
struct BoundCheck {
    std::string graph_id;
    std::string theorem_id;
    std::optional<std::size_t> lower;
    std::optional<std::size_t> upper;
    std::optional<std::size_t> equality;
    std::optional<std::size_t> exact;
    CheckStatus status = CheckStatus::Skipped;
    std::string detail;
};

/// Sets status (and, unless already set, detail) from the claim fields and
/// exact value: violated iff exact breaks a present claim, tight iff it meets
/// one, skipped iff exact is absent.
void classify(BoundCheck& check);

/// Known claim tags: g12 star2 g13 g14 g15 g16 r024 prop1 conj.
const std::vector<std::string>& theorem_ids();

struct TheoremParams {
    std::optional<std::size_t> n;  // subdivision parameter for g16 / r024
};

struct HarnessOptions {
    SolverBudget budget;
    SolverOptions solver;
};

/// Builds the subdivision a claim is about, solves it exactly and fills in
/// the claimed bounds. Unmet theorem preconditions give status skipped with a
/// "precondition: ..." detail. Throws std::invalid_argument for unknown tags
/// or missing/invalid parameters.
BoundCheck check_theorem(const Graph& g, std::string_view theorem_id, const TheoremParams& params = {},
                         const HarnessOptions& options = {}, std::optional<std::string> graph_id = std::nullopt);

/// Every (graph, theorem) pair in input-major order. Graphs are spread over
/// `workers` threads; output order does not depend on scheduling.
std::vector<BoundCheck> run_corpus(const std::vector<GraphRecord>& corpus, const std::vector<std::string>& theorems,
                                   const TheoremParams& params, const HarnessOptions& options, std::size_t workers = 1);

std::map<CheckStatus, std::size_t> status_counts(const std::vector<BoundCheck>& checks);
std::string summary_line(const std::vector<BoundCheck>& checks);

std::string tsv_header();
std::string to_tsv(const BoundCheck& check);
std::string to_jsonl(const BoundCheck& check);

// ---------------------------------------------------------------------------
// Conjecture scan: γ_s(G^{1/2}) > 4|V(G)|/5
// ---------------------------------------------------------------------------

struct Ratio {
    std::size_t num = 0;
    std::size_t den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator<(const Ratio& a, const Ratio& b) { return a.num * b.den < b.num * a.den; }
    friend bool operator==(const Ratio& a, const Ratio& b) { return a.num * b.den == b.num * a.den; }
};

struct ConjectureRow {
    std::string graph_id;
    std::size_t order = 0;               // |V(G)|
    std::optional<std::size_t> value;    // γ_s(G^{1/2})
    std::string detail;                  // skip reason

    std::optional<Ratio> ratio() const {
        if (!value || order == 0) return std::nullopt;
        return Ratio{*value, order};
    }
    /// ratio <= 4/5
    bool counterexample() const { return value && order > 0 && 5 * *value <= 4 * order; }
};

struct ConjectureReport {
    std::vector<ConjectureRow> rows;
    std::optional<Ratio> min_ratio;
    std::vector<std::string> minimizers;
    std::vector<std::string> counterexamples;
    std::vector<std::string> skipped;
};

ConjectureReport conjecture_scan(const std::vector<GraphRecord>& corpus, const HarnessOptions& options,
                                 std::size_t workers = 1);

std::string to_text(const ConjectureReport& report);
std::string to_jsonl(const ConjectureReport& report);

}  // namespace subsec
