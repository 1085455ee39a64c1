#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subsec/graph.hpp"

namespace subsec {

// ---------------------------------------------------------------------------
// Definitional checks
// ---------------------------------------------------------------------------

/// How the swap condition is evaluated for a candidate defender.
///
/// Incremental tests only the vertices that the defender dominates privately;
/// Full rebuilds D - v + u and re-runs the domination check.
enum class SwapCheck { Incremental, Full };

/// True iff every vertex outside D has a neighbor in D.
bool is_dominating(const Graph& g, const VertexSet& d);

/// All v in N(u) ∩ D for which (D - v) + u is dominating, ascending.
/// Throws GraphError if u is in D.
std::vector<VertexId> defenders(const Graph& g, const VertexSet& d, VertexId u,
                                SwapCheck mode = SwapCheck::Incremental);

bool is_secure_dominating(const Graph& g, const VertexSet& d, SwapCheck mode = SwapCheck::Incremental);

// ---------------------------------------------------------------------------
// Exact solvers
// ---------------------------------------------------------------------------

inline constexpr std::size_t kMaxSolverVertices = 64;

struct SolverBudget {
    std::size_t max_vertices = 40;
    std::uint64_t max_nodes = 500'000'000;
    std::uint64_t time_ms = 120'000;

    /// Throws std::invalid_argument unless every cap is positive and
    /// max_vertices <= kMaxSolverVertices.
    void validate() const;
};

enum class SearchMode {
    Pruned,  // only dominating candidates are generated
    Naive,   // every subset of each size, no pruning
};

struct SolverOptions {
    SearchMode mode = SearchMode::Pruned;
    /// Worker threads splitting each size level by smallest member; 0 means
    /// the default worker count (see default_worker_count()).
    std::size_t threads = 1;
};

enum class SolveStatus { Exact, Skipped };

struct SolveResult {
    std::optional<std::size_t> value;
    std::optional<VertexSet> witness;  // lexicographically smallest optimum
    SolveStatus status = SolveStatus::Skipped;
    std::uint64_t nodes = 0;
    std::string detail;  // reason for a skip

    bool exact() const { return status == SolveStatus::Exact; }
};

/// γ(G): size-increasing search, so the first feasible size is optimal.
SolveResult gamma_exact(const Graph& g, const SolverBudget& budget = {}, const SolverOptions& options = {});

/// γ_s(G). Pruned mode starts at γ(G) and applies the secure check only to
/// dominating candidates; naive mode starts at 0 and tests every subset.
SolveResult gamma_s_exact(const Graph& g, const SolverBudget& budget = {}, const SolverOptions& options = {});

/// ⌈3n/7⌉, the secure domination number of the path on n vertices.
std::size_t path_secure_formula(std::size_t n);

/// Worker count from SUBSEC_THREADS, else the hardware concurrency (at least 1).
std::size_t default_worker_count();

std::string to_string(SolveStatus s);

}  // namespace subsec
