#ifndef GPF_LIST_COLOURING_HPP
#define GPF_LIST_COLOURING_HPP

#include "gpf/colouring.hpp"
#include "gpf/gp_graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace gpf {

// Per-edge colour lists, indexed by edge id; colours are arbitrary positive
// integers, each list sorted ascending.
struct ListAssignment {
    std::vector<std::vector<int>> lists;

    // The common list size, or nullopt when lists differ in size.
    std::optional<int> uniform_size() const;
};

struct ListSolverOptions {
    int max_edges = 60;  // refuse larger instances
};

// Either a colouring drawn from the lists, or a completed exhaustive
// search: `solved() == false` certifies that no list colouring exists.
struct ListColouringResult {
    std::optional<EdgeColouring> colouring;
    std::uint64_t nodes_explored = 0;

    bool solved() const { return colouring.has_value(); }
};

// Complete backtracking with smallest-remaining-list edge selection and
// forward checking.  Throws InstanceTooLarge above the edge bound and
// InvalidParameters on an empty list.
ListColouringResult solve_list_colouring(const GPGraph& g, const ListAssignment& lists,
                                         const ListSolverOptions& opts = {});

// Independent soundness pass: total, proper, and every colour inside its
// edge's list.
bool check_list_colouring(const GPGraph& g, const ListAssignment& lists,
                          const EdgeColouring& colouring);

// Uniform random size-`list_size` subsets of {1..palette_size}, one per
// edge in edge-id order.  Deterministic for a fixed seed: mt19937_64 with
// rejection-sampled bounded draws, so the stream is identical on every
// platform.
ListAssignment random_lists(const GPGraph& g, int palette_size, int list_size,
                            std::uint64_t seed);

struct TrialFailure {
    int trial;
    std::uint64_t seed;
};

struct ChoosabilityReport {
    int k = 0;
    int trials = 0;
    int successes = 0;
    std::vector<TrialFailure> failures;
    std::int64_t elapsed_ms = 0;
};

// Runs `trials` random size-3 list assignments on GP(3k,k) through the
// solver; trial t uses seed + t, so trials are replayable and independent
// of the thread count.
ChoosabilityReport verify_choosability_sample(int k, int trials, int palette_size,
                                              std::uint64_t seed, int threads = 1);

}  // namespace gpf

#endif
