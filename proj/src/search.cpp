#include "unidom/search.hpp"

#include "unidom/bounds.hpp"
#include "unidom/domination.hpp"
#include "unidom/graph.hpp"
#include "unidom/graph_io.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <thread>

namespace unidom {

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kPrefixBits = 8;
constexpr std::uint64_t kDeadlineStride = 4096;

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("UNIDOM_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

// Next integer with the same popcount (Gosper).
std::uint64_t next_same_popcount(std::uint64_t x) {
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    return (((r ^ x) >> 2) / c) | r;
}

struct Side {
    std::vector<Vertex> a, b;
    // scatter[m] maps a bitmask over positions in b to a vertex mask.
    std::vector<std::uint64_t> scatter;
};

std::vector<Side> side_assignments(int n) {
    std::vector<Side> out;
    for (std::uint64_t rest = 0; rest < (std::uint64_t{1} << (n - 1)); ++rest) {
        const std::uint64_t a_mask = 1 | (rest << 1);
        Side s;
        for (Vertex v = 0; v < n; ++v) ((a_mask >> v) & 1U ? s.a : s.b).push_back(v);
        s.scatter.assign(std::size_t{1} << s.b.size(), 0);
        for (std::size_t m = 0; m < s.scatter.size(); ++m) {
            for (std::size_t j = 0; j < s.b.size(); ++j) {
                if ((m >> j) & 1U) s.scatter[m] |= std::uint64_t{1} << s.b[j];
            }
        }
        out.push_back(std::move(s));
    }
    return out;
}

struct Task {
    std::size_t side;
    std::uint64_t prefix;
    int low_bits_count;
};

class Enumerator {
public:
    Enumerator(int n, int gamma, std::optional<int> exact_size, const SearchOptions& options)
        : n_(n), gamma_(gamma), exact_size_(exact_size), options_(options),
          sides_(side_assignments(n)) {
        for (std::size_t s = 0; s < sides_.size(); ++s) {
            const int pairs = static_cast<int>(sides_[s].a.size() * sides_[s].b.size());
            const int prefix_bits = std::min(pairs, kPrefixBits);
            const int low = pairs - prefix_bits;
            for (std::uint64_t p = 0; p < (std::uint64_t{1} << prefix_bits); ++p) {
                if (exact_size_) {
                    const int need = *exact_size_ - std::popcount(p);
                    if (need < 0 || need > low) continue;
                }
                tasks_.push_back({s, p, low});
            }
        }
    }

    SearchResult run() {
        const auto start = Clock::now();
        if (options_.budget) {
            deadline_ = start + std::chrono::duration_cast<Clock::duration>(*options_.budget);
        }
        last_progress_ = start;

        const unsigned threads = resolve_threads(options_.threads);
        std::vector<Local> locals(threads);
        if (threads == 1) {
            work(locals[0]);
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < threads; ++t) pool.emplace_back([&, t] { work(locals[t]); });
            for (auto& th : pool) th.join();
        }

        SearchResult result;
        result.n = n_;
        result.gamma = gamma_;
        result.graphs_scanned = scanned_.load();
        result.umd_graphs_found = umd_found_.load();
        result.expected_scan = exact_size_ ? labeled_bipartite_scan_count(n_, *exact_size_)
                                           : labeled_bipartite_scan_count(n_);
        result.complete = !stop_.load();
        for (const auto& l : locals) result.max_size = std::max(result.max_size, l.best);

        ClassMap merged;
        for (auto& l : locals) {
            if (l.best != result.max_size || result.max_size < 0) continue;
            for (auto& [key, graphs] : l.classes) {
                for (auto& g : graphs) add_class(merged, std::move(g));
            }
        }
        for (const auto& [key, graphs] : merged) {
            for (const auto& g : graphs) result.witnesses.push_back(emit_graph6(g.graph));
        }
        std::sort(result.witnesses.begin(), result.witnesses.end());
        result.elapsed = Clock::now() - start;

        if (result.complete && result.graphs_scanned != result.expected_scan) {
            throw std::logic_error("search bookkeeping: scanned " +
                                   std::to_string(result.graphs_scanned) + " graphs, expected " +
                                   std::to_string(result.expected_scan));
        }
        return result;
    }

private:
    // Isomorphism classes bucketed by invariant hash.
    using ClassMap = std::map<std::uint64_t, std::vector<RefinedGraph>>;

    struct Local {
        int best = -1;
        ClassMap classes;
    };

    static void add_class(ClassMap& classes, RefinedGraph g) {
        // Keep the smallest graph6 of each class so the result does not depend on scheduling.
        auto& bucket = classes[g.hash];
        const auto it = std::find_if(bucket.begin(), bucket.end(),
                                     [&](const RefinedGraph& h) { return are_isomorphic(g, h); });
        if (it == bucket.end()) {
            bucket.push_back(std::move(g));
        } else if (emit_graph6(g.graph) < emit_graph6(it->graph)) {
            *it = std::move(g);
        }
    }

    void work(Local& local) {
        for (;;) {
            if (deadline_ && Clock::now() > *deadline_) stop_.store(true);
            if (stop_.load(std::memory_order_relaxed)) return;
            const std::size_t t = next_task_.fetch_add(1);
            if (t >= tasks_.size()) return;
            run_task(tasks_[t], local);
            report_progress();
        }
    }

    void run_task(const Task& task, Local& local) {
        const Side& side = sides_[task.side];
        const std::uint64_t high = task.prefix << task.low_bits_count;
        const std::uint64_t low_limit = std::uint64_t{1} << task.low_bits_count;
        std::uint64_t visited = 0;

        auto visit = [&](std::uint64_t low) {
            consider(side, high | low, local);
            if (++visited % kDeadlineStride == 0) {
                scanned_.fetch_add(kDeadlineStride, std::memory_order_relaxed);
                if (deadline_ && Clock::now() > *deadline_) stop_.store(true);
                return !stop_.load(std::memory_order_relaxed);
            }
            return true;
        };

        if (!exact_size_) {
            for (std::uint64_t low = 0; low < low_limit; ++low) {
                if (!visit(low)) break;
            }
        } else {
            const int need = *exact_size_ - std::popcount(task.prefix);
            if (need == 0) {
                visit(0);
            } else {
                for (std::uint64_t low = (std::uint64_t{1} << need) - 1; low < low_limit;
                     low = next_same_popcount(low)) {
                    if (!visit(low)) break;
                }
            }
        }
        scanned_.fetch_add(visited % kDeadlineStride, std::memory_order_relaxed);
    }

    void consider(const Side& side, std::uint64_t mask, Local& local) {
        const int size = std::popcount(mask);
        if (!exact_size_) {
            const int floor = best_.load(std::memory_order_relaxed);
            if (options_.collect_witnesses ? size < floor : size <= floor) return;
            if (size < local.best) return;
        }

        const std::size_t width = side.b.size();
        const std::uint64_t chunk_mask = low_bits(static_cast<int>(width));
        std::uint64_t covered = 0;
        std::array<std::uint64_t, kMaxSearchOrder> chunks{};
        for (std::size_t i = 0; i < side.a.size(); ++i) {
            chunks[i] = (mask >> (i * width)) & chunk_mask;
            if (chunks[i] == 0) return;
            covered |= chunks[i];
        }
        if (covered != chunk_mask || width == 0) return;

        std::vector<std::uint64_t> rows(n_, 0);
        for (std::size_t i = 0; i < side.a.size(); ++i) {
            rows[side.a[i]] = side.scatter[chunks[i]];
            for (std::uint64_t b = chunks[i]; b != 0; b &= b - 1) {
                rows[side.b[std::countr_zero(b)]] |= std::uint64_t{1} << side.a[i];
            }
        }
        const Graph g = Graph::from_rows(std::move(rows));

        DominationSolver solver(g);
        if (solver.has_dominating_set_of_size(gamma_ - 1)) return;
        if (solver.dominating_sets_up_to(gamma_, 2).size() != 1) return;

        // Independent recomputation; is_umd also runs the private-neighbor audit.
        const DominationReport report = is_umd(g);
        if (!report.unique || report.gamma != gamma_) {
            throw std::logic_error("search: solver and report disagree on " + emit_graph6(g));
        }
        umd_found_.fetch_add(1, std::memory_order_relaxed);

        if (size > local.best) {
            local.best = size;
            local.classes.clear();
        }
        if (options_.collect_witnesses || exact_size_) add_class(local.classes, refine(g));
        int seen = best_.load(std::memory_order_relaxed);
        while (size > seen && !best_.compare_exchange_weak(seen, size)) {
        }
    }

    void report_progress() {
        if (!options_.progress) return;
        std::lock_guard lock(progress_mutex_);
        const auto now = Clock::now();
        if (now - last_progress_ < std::chrono::seconds(1)) return;
        last_progress_ = now;
        options_.progress(scanned_.load(), best_.load());
    }

    const int n_;
    const int gamma_;
    const std::optional<int> exact_size_;
    const SearchOptions& options_;
    const std::vector<Side> sides_;
    std::vector<Task> tasks_;

    std::optional<Clock::time_point> deadline_;
    std::atomic<std::size_t> next_task_{0};
    std::atomic<std::uint64_t> scanned_{0};
    std::atomic<std::uint64_t> umd_found_{0};
    std::atomic<int> best_{-1};
    std::atomic<bool> stop_{false};
    std::mutex progress_mutex_;
    Clock::time_point last_progress_;
};

void check_search_params(int n, int gamma) {
    if (n < 1 || n > kMaxSearchOrder) {
        throw SearchError("search order must be in [1, " + std::to_string(kMaxSearchOrder) + "]");
    }
    if (gamma < 2) throw SearchError("search needs gamma >= 2");
}

}  // namespace

SearchResult max_umd_bipartite_size(int n, int gamma, const SearchOptions& options) {
    check_search_params(n, gamma);
    return Enumerator(n, gamma, std::nullopt, options).run();
}

SearchResult count_extremal_witnesses(int n, int gamma, int size, const SearchOptions& options) {
    check_search_params(n, gamma);
    if (size < 0) throw SearchError("size must be non-negative");
    return Enumerator(n, gamma, size, options).run();
}

std::uint64_t labeled_bipartite_scan_count(int n) {
    std::uint64_t total = 0;
    for (int a = 1; a <= n; ++a) total += binomial(n - 1, a - 1) << (a * (n - a));
    return total;
}

std::uint64_t labeled_bipartite_scan_count(int n, int size) {
    std::uint64_t total = 0;
    for (int a = 1; a <= n; ++a) total += binomial(n - 1, a - 1) * binomial(a * (n - a), size);
    return total;
}

int brute_force_min_forest_edges(int n) {
    if (n < 3 || n > 7) throw SearchError("brute_force_min_forest_edges: n must be in [3, 7]");
    std::vector<Edge> pairs;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) pairs.emplace_back(i, j);
    }
    int best = static_cast<int>(pairs.size()) + 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        const int size = std::popcount(mask);
        if (size >= best) continue;
        std::array<std::uint64_t, 7> rows{};
        for (std::uint64_t b = mask; b != 0; b &= b - 1) {
            const auto [u, v] = pairs[std::countr_zero(b)];
            rows[u] |= std::uint64_t{1} << v;
            rows[v] |= std::uint64_t{1} << u;
        }
        bool ok = true;
        for (Vertex v = 0; v < n && ok; ++v) {
            if (rows[v] == 0) ok = false;
            if (std::popcount(rows[v]) == 1) {
                const Vertex u = std::countr_zero(rows[v]);
                if (std::popcount(rows[u]) == 1) ok = false;
            }
        }
        if (ok) best = size;
    }
    return best;
}

bool verify_forest_lemma(int n) { return brute_force_min_forest_edges(n) == min_forest_edges(n); }

}  // namespace unidom
