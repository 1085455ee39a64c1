#include "subsec/domination.hpp"

#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace subsec {

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

Mask bit(std::size_t v) { return Mask{1} << v; }

// Graph packed into 64-bit rows for the search.
struct MaskGraph {
    std::size_t n = 0;
    Mask full = 0;
    std::vector<Mask> open;
    std::vector<Mask> closed;
    // dead[i]: vertices whose closed neighborhood lies entirely below i, so no
    // member with id >= i can dominate them.
    std::vector<Mask> dead;
    std::size_t max_closed = 0;

    explicit MaskGraph(const Graph& g) : n(g.n()), open(n), closed(n), dead(n + 1, 0) {
        full = n == 64 ? ~Mask{0} : bit(n) - 1;
        for (VertexId v = 0; v < n; ++v) {
            const auto& nb = g.neighbors(v);
            for (auto w = nb.find_first(); w != Bitset::npos; w = nb.find_next(w)) open[v] |= bit(w);
            closed[v] = open[v] | bit(v);
            max_closed = std::max<std::size_t>(max_closed, std::popcount(closed[v]));
            const std::size_t top = 63 - std::countl_zero(closed[v]);
            for (std::size_t i = top + 1; i <= n; ++i) dead[i] |= bit(v);
        }
    }

    Mask coverage(Mask d) const {
        Mask c = 0;
        for (Mask rest = d; rest; rest &= rest - 1) c |= closed[std::countr_zero(rest)];
        return c;
    }

    bool dominating(Mask d) const { return coverage(d) == full; }

    // Swap test through private neighborhoods.
    bool secure_incremental(Mask d) const {
        Mask once = 0, many = 0;
        for (Mask rest = d; rest; rest &= rest - 1) {
            const Mask nb = closed[std::countr_zero(rest)];
            many |= once & nb;
            once |= nb;
        }
        if (once != full) return false;
        once &= ~many;
        for (Mask outside = full & ~d; outside; outside &= outside - 1) {
            const std::size_t u = std::countr_zero(outside);
            bool defended = false;
            for (Mask cand = open[u] & d; cand && !defended; cand &= cand - 1) {
                const std::size_t v = std::countr_zero(cand);
                defended = (closed[v] & once & ~closed[u]) == 0;
            }
            if (!defended) return false;
        }
        return true;
    }

    // Swap test by rebuilding each swapped set.
    bool secure_full(Mask d) const {
        if (!dominating(d)) return false;
        for (Mask outside = full & ~d; outside; outside &= outside - 1) {
            const std::size_t u = std::countr_zero(outside);
            bool defended = false;
            for (Mask cand = open[u] & d; cand && !defended; cand &= cand - 1) {
                const std::size_t v = std::countr_zero(cand);
                defended = dominating((d & ~bit(v)) | bit(u));
            }
            if (!defended) return false;
        }
        return true;
    }
};

enum class Goal { Dominating, SecureDominating };

struct BudgetExhausted {
    std::string reason;
};

// Shared node accounting for every worker of one solve call.
class Effort {
public:
    Effort(const SolverBudget& budget) : budget_(budget), deadline_(Clock::now() + std::chrono::milliseconds(budget.time_ms)) {}

    std::uint64_t nodes() const { return nodes_.load(); }
    bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }

    const std::string& reason() const { return reason_; }

    // Returns false once a cap is hit.
    bool charge(std::uint64_t batch) {
        const auto total = nodes_.fetch_add(batch) + batch;
        if (total > budget_.max_nodes) {
            fail("node budget of " + std::to_string(budget_.max_nodes) + " exceeded");
            return false;
        }
        if (Clock::now() > deadline_) {
            fail("time budget of " + std::to_string(budget_.time_ms) + " ms exceeded");
            return false;
        }
        return !exhausted();
    }

private:
    void fail(std::string why) {
        std::lock_guard lock(mutex_);
        if (!exhausted_.exchange(true)) reason_ = std::move(why);
    }

    SolverBudget budget_;
    Clock::time_point deadline_;
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> exhausted_{false};
    std::mutex mutex_;
    std::string reason_;
};

// Lexicographic enumeration of the size-t subsets whose smallest member is
// `first`, stopping at the first one that meets the goal.
class SubtreeSearch {
public:
    static constexpr std::uint64_t kBatch = 1024;

    SubtreeSearch(const MaskGraph& g, std::size_t t, Goal goal, SearchMode mode, Effort& effort,
                  const std::atomic<std::size_t>& best_first, std::size_t first)
        : g_(g), t_(t), goal_(goal), mode_(mode), effort_(effort), best_first_(best_first), first_(first) {}

    ~SubtreeSearch() { effort_.charge(pending_); }

    std::optional<Mask> run() {
        if (mode_ == SearchMode::Pruned && (g_.full & g_.dead[first_])) return std::nullopt;
        if (descend(first_, 1, bit(first_), g_.closed[first_])) return found_;
        return std::nullopt;
    }

private:
    bool tick() {
        if (++pending_ < kBatch) return !stop_;
        const bool ok = effort_.charge(pending_);
        pending_ = 0;
        if (!ok || best_first_.load(std::memory_order_relaxed) < first_) stop_ = true;
        return !stop_;
    }

    bool accept(Mask chosen, Mask covered) {
        if (goal_ == Goal::Dominating) return covered == g_.full;
        if (covered != g_.full) return false;
        return mode_ == SearchMode::Naive ? g_.secure_full(chosen) : g_.secure_incremental(chosen);
    }

    bool descend(std::size_t last, std::size_t depth, Mask chosen, Mask covered) {
        if (!tick()) return false;
        if (depth == t_) {
            if (accept(chosen, covered)) {
                found_ = chosen;
                return true;
            }
            return false;
        }
        const std::size_t remaining = t_ - depth;
        const Mask uncovered = g_.full & ~covered;
        if (mode_ == SearchMode::Pruned) {
            if (uncovered & g_.dead[last + 1]) return false;
            if (static_cast<std::size_t>(std::popcount(uncovered)) > remaining * g_.max_closed) return false;
        }
        for (std::size_t c = last + 1; c + remaining <= g_.n; ++c) {
            // Every later choice is above c - 1 as well, so a vertex already dead here stays dead.
            if (mode_ == SearchMode::Pruned && (uncovered & g_.dead[c])) break;
            if (descend(c, depth + 1, chosen | bit(c), covered | g_.closed[c])) return true;
            if (stop_) return false;
        }
        return false;
    }

    const MaskGraph& g_;
    std::size_t t_;
    Goal goal_;
    SearchMode mode_;
    Effort& effort_;
    const std::atomic<std::size_t>& best_first_;
    std::size_t first_;
    std::uint64_t pending_ = 0;
    bool stop_ = false;
    Mask found_ = 0;
};

// Searches one size level across `threads` workers. Workers claim smallest
// members in increasing order; the answer is the hit with the smallest
// first member, which is the lexicographically smallest set of this size.
std::optional<Mask> search_level(const MaskGraph& g, std::size_t t, Goal goal, SearchMode mode, Effort& effort,
                                 std::size_t threads) {
    if (t == 0) {
        const bool ok = goal == Goal::Dominating ? g.dominating(0)
                                                 : (mode == SearchMode::Naive ? g.secure_full(0) : g.secure_incremental(0));
        return ok ? std::optional<Mask>(0) : std::nullopt;
    }
    const std::size_t limit = g.n - t + 1;  // first member ranges over 0..n-t
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best_first{limit};
    std::vector<std::optional<Mask>> hits(limit);

    auto worker = [&] {
        for (;;) {
            const std::size_t f = next.fetch_add(1);
            if (f >= limit || f > best_first.load() || effort.exhausted()) return;
            std::optional<Mask> hit;
            {
                SubtreeSearch search(g, t, goal, mode, effort, best_first, f);
                hit = search.run();
            }
            if (hit) {
                hits[f] = hit;
                std::size_t cur = best_first.load();
                while (f < cur && !best_first.compare_exchange_weak(cur, f)) {
                }
            }
        }
    };

    const std::size_t workers = std::max<std::size_t>(1, std::min(threads, limit));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
    }
    if (effort.exhausted()) throw BudgetExhausted{effort.reason()};
    const std::size_t f = best_first.load();
    if (f < limit) return hits[f];
    return std::nullopt;
}

std::size_t search_from(const MaskGraph& g, std::size_t start, Goal goal, SearchMode mode, Effort& effort,
                        std::size_t threads, Mask& witness) {
    for (std::size_t t = start; t <= g.n; ++t) {
        if (auto hit = search_level(g, t, goal, mode, effort, threads)) {
            witness = *hit;
            return t;
        }
    }
    throw std::logic_error("no feasible set found, including the full vertex set");
}

VertexSet to_vertex_set(std::size_t n, Mask m) {
    VertexSet s(n);
    for (; m; m &= m - 1) s.insert(std::countr_zero(m));
    return s;
}

SolveResult solve(const Graph& g, const SolverBudget& budget, const SolverOptions& options, Goal goal) {
    budget.validate();
    SolveResult result;
    if (g.n() > budget.max_vertices) {
        result.detail = "graph has " + std::to_string(g.n()) + " vertices, above the cap of " +
                        std::to_string(budget.max_vertices);
        return result;
    }
    const MaskGraph mg(g);
    Effort effort(budget);
    const std::size_t threads = options.threads == 0 ? default_worker_count() : options.threads;
    try {
        Mask witness = 0;
        std::size_t start = 0;
        if (goal == Goal::SecureDominating && options.mode == SearchMode::Pruned) {
            Mask dom = 0;
            start = search_from(mg, 0, Goal::Dominating, SearchMode::Pruned, effort, threads, dom);
        }
        const std::size_t value = search_from(mg, start, goal, options.mode, effort, threads, witness);
        result.value = value;
        result.witness = to_vertex_set(g.n(), witness);
        result.status = SolveStatus::Exact;
    } catch (const BudgetExhausted& e) {
        result.detail = e.reason;
    }
    result.nodes = effort.nodes();
    return result;
}

}  // namespace

void SolverBudget::validate() const {
    if (max_vertices == 0 || max_vertices > kMaxSolverVertices)
        throw std::invalid_argument("max_vertices must lie in 1.." + std::to_string(kMaxSolverVertices));
    if (max_nodes == 0) throw std::invalid_argument("max_nodes must be positive");
    if (time_ms == 0) throw std::invalid_argument("time_ms must be positive");
}

SolveResult gamma_exact(const Graph& g, const SolverBudget& budget, const SolverOptions& options) {
    return solve(g, budget, options, Goal::Dominating);
}

SolveResult gamma_s_exact(const Graph& g, const SolverBudget& budget, const SolverOptions& options) {
    return solve(g, budget, options, Goal::SecureDominating);
}

std::size_t default_worker_count() {
    if (const char* env = std::getenv("SUBSEC_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace subsec
