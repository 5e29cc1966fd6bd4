#ifndef GPF_FACTORISATION_HPP
#define GPF_FACTORISATION_HPP

#include "gpf/bigint.hpp"
#include "gpf/colouring.hpp"
#include "gpf/gp_graph.hpp"
#include "gpf/triple_graph.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace gpf {

// The colour triples phi_1..phi_{k+1} of an outer-cycle colouring of
// GP(3k,k): phi_i = (colour of u_i u_{i+1}, of u_{k+i} u_{k+i+1}, of
// u_{2k+i} u_{2k+i+1}), indices 1-based mod 3k.  phi_{k+1} is always the
// left cyclic shift of phi_1.
struct TripleSequence {
    int k = 0;
    std::vector<ColourTriple> triples;  // size k+1; triples[i-1] is phi_i

    const ColourTriple& phi(int i) const { return triples[static_cast<size_t>(i - 1)]; }
};

// Requires every outer edge assigned (IncompleteColouring otherwise) and
// the graph in triangle form (NotApplicable otherwise).
TripleSequence triples_of(const EdgeColouring& outer);

// Whether (s, t) is an arc of a triangle or hexagon triple graph under some
// relabelling of the colours; equivalently, whether the propagation of
// spoke and triangle colours between these two consecutive triples has a
// proper solution.
bool compatible_step(const ColourTriple& s, const ColourTriple& t);

// Outcome of extending an outer-cycle colouring to the whole graph.  On
// failure, first_bad_triple is the smallest 1-based i for which phi_i is
// monochromatic or (phi_i, phi_{i+1}) is not an arc of the triple graphs.
struct ExtensionResult {
    std::optional<EdgeColouring> colouring;
    int first_bad_triple = 0;

    bool ok() const { return colouring.has_value(); }
};

// Extends an outer colouring to the unique total proper colouring agreeing
// with it, by forced propagation of spoke and triangle colours, or reports
// why none exists.  Accepts arbitrary outer assignments (improper ones
// simply fail).
ExtensionResult extend_outer(const EdgeColouring& outer);

// A perfect matching as a sorted list of edge ids.
using Matching = std::vector<int>;

// Three disjoint perfect matchings covering the edge set, canonicalised as
// lexicographically sorted matchings so equality ignores colour naming.
struct OneFactorisation {
    std::array<Matching, 3> factors;

    static OneFactorisation from_colouring(const EdgeColouring& total);

    bool operator==(const OneFactorisation& o) const { return factors == o.factors; }
    bool operator<(const OneFactorisation& o) const { return factors < o.factors; }
};

// Number of 1-factorisations of GP(3k,k), computed from triple-graph walk
// counts (triangle walks plus three hexagon classes).
BigInt count_factorisations(int k);

// The same count split into positive and negative 1-factorisations.
SignedCount signed_factorisation_counts(int k);

// positive minus negative; nonzero for every k >= 1.
BigInt alon_tarsi_sum(int k);

// Streams every 1-factorisation of GP(3k,k) exactly once, in a fixed
// deterministic order (start-triple class 123, 112, 121, 211, then
// lexicographic walk order within a class), together with its canonical
// representative colouring.
void for_each_factorisation(
    int k, const std::function<void(const OneFactorisation&, const EdgeColouring&)>& fn);

// Collects the stream; threads > 1 splits by start-triple class with the
// merged result identical to the sequential order.
std::vector<OneFactorisation> enumerate_factorisations(int k, int threads = 1);

// Sign of a total proper colouring of GP(3k,k): the product over all
// vertices of +1/-1 according to whether the colours in rotation order form
// an even permutation of (1,2,3).  Throws NotApplicable off triangle form.
int sign_of(const EdgeColouring& total);

// The same sign computed along the colour-triple walk: product of the
// signed triple-graph arc signs of (phi_i, phi_{i+1}).
int sign_product_along_triples(const EdgeColouring& total);

struct BruteForceOptions {
    int max_vertices = 40;  // refuse larger instances
    int threads = 1;
};

// Every proper 3-edge-colouring of g, by backtracking over the edges in a
// fixed order (outer edges along the cycle first).  Independent of the
// walk-based counting; the list has 6 colourings per 1-factorisation.
std::vector<EdgeColouring> brute_force_colourings(const GPGraph& g,
                                                  const BruteForceOptions& opts = {});

// Number of total proper colourings extending a partial one, by the same
// backtracking.  Oracle for the uniqueness of outer-cycle extensions.
std::uint64_t count_extensions(const GPGraph& g, const EdgeColouring& partial);

}  // namespace gpf

#endif
