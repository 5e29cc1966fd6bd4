#include "gpf/list_colouring.hpp"

#include "gpf/errors.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace gpf {

std::optional<int> ListAssignment::uniform_size() const {
    if (lists.empty()) return std::nullopt;
    size_t s = lists.front().size();
    for (const auto& l : lists)
        if (l.size() != s) return std::nullopt;
    return static_cast<int>(s);
}

namespace {

struct DenseLists {
    std::vector<int> palette;            // dense index -> colour
    std::vector<std::uint64_t> masks;    // per edge
};

DenseLists densify(const GPGraph& g, const ListAssignment& lists) {
    if (static_cast<int>(lists.lists.size()) != g.edge_count())
        throw InvalidParameters("list assignment must cover every edge");
    std::map<int, int> index;
    DenseLists out;
    for (const auto& l : lists.lists) {
        if (l.empty()) throw InvalidParameters("every edge needs a nonempty colour list");
        for (int c : l)
            if (index.emplace(c, 0).second) out.palette.push_back(c);
    }
    std::sort(out.palette.begin(), out.palette.end());
    if (out.palette.size() > 64)
        throw InvalidParameters("more than 64 distinct list colours are not supported");
    for (size_t i = 0; i < out.palette.size(); i++) index[out.palette[i]] = static_cast<int>(i);
    out.masks.reserve(lists.lists.size());
    for (const auto& l : lists.lists) {
        std::uint64_t m = 0;
        for (int c : l) m |= std::uint64_t{1} << index[c];
        out.masks.push_back(m);
    }
    return out;
}

}  // namespace

ListColouringResult solve_list_colouring(const GPGraph& g, const ListAssignment& lists,
                                         const ListSolverOptions& opts) {
    if (g.edge_count() > opts.max_edges) {
        std::ostringstream msg;
        msg << "solve_list_colouring: " << g.edge_count() << " edges exceeds the bound of "
            << opts.max_edges;
        throw InstanceTooLarge(msg.str());
    }
    DenseLists dense = densify(g, lists);
    int ne = g.edge_count();

    std::vector<std::uint64_t> used(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<int> chosen(static_cast<size_t>(ne), -1);  // dense colour index
    std::uint64_t nodes = 0;

    // smallest remaining candidate set first, lowest edge id on ties
    auto pick = [&]() {
        int best = -1, best_count = 65;
        for (int e = 0; e < ne; e++) {
            if (chosen[static_cast<size_t>(e)] >= 0) continue;
            const Edge& ed = g.edge(e);
            std::uint64_t avail = dense.masks[static_cast<size_t>(e)] &
                                  ~(used[static_cast<size_t>(ed.a)] | used[static_cast<size_t>(ed.b)]);
            int cnt = std::popcount(avail);
            if (cnt < best_count) {
                best_count = cnt;
                best = e;
                if (cnt == 0) break;
            }
        }
        return best;
    };

    int assigned = 0;
    auto solve = [&](auto&& solve_) -> bool {
        if (assigned == ne) return true;
        int e = pick();
        const Edge& ed = g.edge(e);
        std::uint64_t avail = dense.masks[static_cast<size_t>(e)] &
                              ~(used[static_cast<size_t>(ed.a)] | used[static_cast<size_t>(ed.b)]);
        while (avail) {
            int idx = std::countr_zero(avail);
            std::uint64_t bit = std::uint64_t{1} << idx;
            avail &= ~bit;
            nodes++;
            chosen[static_cast<size_t>(e)] = idx;
            used[static_cast<size_t>(ed.a)] |= bit;
            used[static_cast<size_t>(ed.b)] |= bit;
            assigned++;
            if (solve_(solve_)) return true;
            assigned--;
            chosen[static_cast<size_t>(e)] = -1;
            used[static_cast<size_t>(ed.a)] &= ~bit;
            used[static_cast<size_t>(ed.b)] &= ~bit;
        }
        return false;
    };

    ListColouringResult result;
    if (solve(solve)) {
        EdgeColouring col(g);
        for (int e = 0; e < ne; e++)
            col.set(e, dense.palette[static_cast<size_t>(chosen[static_cast<size_t>(e)])]);
        result.colouring = std::move(col);
    }
    result.nodes_explored = nodes;
    return result;
}

bool check_list_colouring(const GPGraph& g, const ListAssignment& lists,
                          const EdgeColouring& colouring) {
    if (!colouring.total()) return false;
    for (int e = 0; e < g.edge_count(); e++) {
        const auto& l = lists.lists[static_cast<size_t>(e)];
        if (std::find(l.begin(), l.end(), colouring.colour(e)) == l.end()) return false;
    }
    return colouring.proper();
}

namespace {

// Unbiased draw from [0, n); rejection keeps the stream independent of any
// library's distribution implementation.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
        std::uint64_t r = rng();
        if (r >= threshold) return r % n;
    }
}

}  // namespace

ListAssignment random_lists(const GPGraph& g, int palette_size, int list_size,
                            std::uint64_t seed) {
    if (list_size < 1 || palette_size < list_size)
        throw InvalidParameters("random_lists: need 1 <= list_size <= palette_size");
    std::mt19937_64 rng(seed);
    ListAssignment out;
    out.lists.reserve(static_cast<size_t>(g.edge_count()));
    std::vector<int> pool(static_cast<size_t>(palette_size));
    for (int e = 0; e < g.edge_count(); e++) {
        for (int i = 0; i < palette_size; i++) pool[static_cast<size_t>(i)] = i + 1;
        std::vector<int> list(static_cast<size_t>(list_size));
        for (int j = 0; j < list_size; j++) {
            std::uint64_t pick = static_cast<std::uint64_t>(j) +
                                 bounded(rng, static_cast<std::uint64_t>(palette_size - j));
            std::swap(pool[static_cast<size_t>(j)], pool[static_cast<size_t>(pick)]);
            list[static_cast<size_t>(j)] = pool[static_cast<size_t>(j)];
        }
        std::sort(list.begin(), list.end());
        out.lists.push_back(std::move(list));
    }
    return out;
}

ChoosabilityReport verify_choosability_sample(int k, int trials, int palette_size,
                                              std::uint64_t seed, int threads) {
    if (k < 1) throw InvalidParameters("verify_choosability_sample: k must be positive");
    if (trials < 1) throw InvalidParameters("verify_choosability_sample: trials must be >= 1");
    if (palette_size < 3) throw InvalidParameters("verify_choosability_sample: palette must hold a size-3 list");
    GPGraph g = GPGraph::build(3 * k, k);
    ListSolverOptions solver_opts;
    if (g.edge_count() > solver_opts.max_edges) {
        std::ostringstream msg;
        msg << "verify_choosability_sample: " << g.edge_count()
            << " edges exceeds the solver bound of " << solver_opts.max_edges;
        throw InstanceTooLarge(msg.str());
    }

    auto start = std::chrono::steady_clock::now();
    std::vector<char> failed(static_cast<size_t>(trials), 0);

    auto run_trial = [&](int t) {
        std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(t);
        ListAssignment lists = random_lists(g, palette_size, 3, trial_seed);
        ListColouringResult res = solve_list_colouring(g, lists, solver_opts);
        if (!res.solved()) {
            failed[static_cast<size_t>(t)] = 1;
            return;
        }
        if (!check_list_colouring(g, lists, *res.colouring))
            throw std::logic_error("solver returned a colouring that fails the checker");
    };

    if (threads <= 1) {
        for (int t = 0; t < trials; t++) run_trial(t);
    } else {
        std::atomic<int> next{0};
        std::exception_ptr first_error;
        std::mutex error_mutex;
        auto worker = [&]() {
            try {
                for (;;) {
                    int t = next.fetch_add(1);
                    if (t >= trials) return;
                    run_trial(t);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        };
        std::vector<std::thread> pool;
        int nthreads = std::min(threads, trials);
        pool.reserve(static_cast<size_t>(nthreads));
        for (int i = 0; i < nthreads; i++) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    ChoosabilityReport report;
    report.k = k;
    report.trials = trials;
    for (int t = 0; t < trials; t++) {
        if (failed[static_cast<size_t>(t)])
            report.failures.push_back({t, seed + static_cast<std::uint64_t>(t)});
        else
            report.successes++;
    }
    auto end = std::chrono::steady_clock::now();
    report.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
    return report;
}

}  // namespace gpf
