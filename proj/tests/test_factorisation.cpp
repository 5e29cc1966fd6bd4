#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gpf/errors.hpp"
#include "gpf/factorisation.hpp"
#include "gpf/json_io.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace gpf;

TEST_CASE("triples_of on the prism") {
    GPGraph g = GPGraph::build(3, 1);
    // colours of (u1u2, u2u3, u3u1) = (1,2,3), i.e. outer edge m -> [3,1,2]
    EdgeColouring outer = EdgeColouring::outer_only(g, {3, 1, 2});
    TripleSequence seq = triples_of(outer);
    CHECK(seq.k == 1);
    CHECK(seq.phi(1) == ColourTriple(1, 2, 3));
    CHECK(seq.phi(2) == ColourTriple(2, 3, 1));  // left cyclic shift
}

TEST_CASE("triples_of constant and regression fixtures") {
    GPGraph g = GPGraph::build(6, 2);
    TripleSequence all_ones = triples_of(EdgeColouring::outer_only(g, {1, 1, 1, 1, 1, 1}));
    CHECK(all_ones.phi(1) == ColourTriple(1, 1, 1));
    CHECK(all_ones.phi(2) == ColourTriple(1, 1, 1));
    CHECK(all_ones.phi(3) == ColourTriple(1, 1, 1));

    // colours (1,2,1,3,1,2) along u1u2..u6u1 put outer edge m at [2,1,2,1,3,1]
    TripleSequence seq = triples_of(EdgeColouring::outer_only(g, {2, 1, 2, 1, 3, 1}));
    CHECK(seq.phi(1) == ColourTriple(1, 1, 1));
    CHECK(seq.phi(2) == ColourTriple(2, 3, 2));
    CHECK(seq.phi(3) == seq.phi(1).rotated_left());
}

TEST_CASE("triples_of rejects incomplete colourings") {
    GPGraph g = GPGraph::build(6, 2);
    EdgeColouring partial(g);
    partial.set(g.outer_edge(0), 1);
    CHECK_THROWS_AS(triples_of(partial), IncompleteColouring);
    CHECK_THROWS_AS(triples_of(EdgeColouring(GPGraph::build(5, 2))), NotApplicable);
}

TEST_CASE("phi_{k+1} is always the left shift of phi_1") {
    GPGraph g = GPGraph::build(9, 3);
    std::vector<int> outer(9);
    for (int seedling = 0; seedling < 50; seedling++) {
        for (int m = 0; m < 9; m++) outer[m] = 1 + (seedling * 7 + m * m + m / 2) % 3;
        TripleSequence seq = triples_of(EdgeColouring::outer_only(g, outer));
        CHECK(seq.phi(4) == seq.phi(1).rotated_left());
    }
}

TEST_CASE("extend_outer on the prism") {
    GPGraph g = GPGraph::build(3, 1);
    EdgeColouring outer = EdgeColouring::outer_only(g, {3, 1, 2});
    ExtensionResult ext = extend_outer(outer);
    REQUIRE(ext.ok());
    const EdgeColouring& full = *ext.colouring;
    // spokes (u1v1, u2v2, u3v3) = (2,3,1)
    CHECK(full.colour(g.spoke_edge(1)) == 2);
    CHECK(full.colour(g.spoke_edge(2)) == 3);
    CHECK(full.colour(g.spoke_edge(0)) == 1);
    // inner triangle (v1v2, v2v3, v3v1) = (1,2,3)
    CHECK(full.colour(g.inner_edge(1)) == 1);
    CHECK(full.colour(g.inner_edge(2)) == 2);
    CHECK(full.colour(g.inner_edge(0)) == 3);
    CHECK(full.total());
    CHECK(full.proper());
    // the oracle agrees the extension exists and is unique
    CHECK(count_extensions(g, outer) == 1);
}

TEST_CASE("extend_outer failure cases") {
    GPGraph g = GPGraph::build(6, 2);
    // monochromatic first triple
    EdgeColouring with_mono = EdgeColouring::outer_only(g, {2, 1, 2, 1, 3, 1});
    ExtensionResult mono = extend_outer(with_mono);
    CHECK_FALSE(mono.ok());
    CHECK(mono.first_bad_triple == 1);
    CHECK(count_extensions(g, with_mono) == 0);
    // improper outer colouring
    EdgeColouring not_proper = EdgeColouring::outer_only(g, {1, 1, 2, 3, 2, 3});
    ExtensionResult improper = extend_outer(not_proper);
    CHECK_FALSE(improper.ok());
    CHECK(count_extensions(g, not_proper) == 0);
    CHECK_THROWS_AS(extend_outer(EdgeColouring(g)), IncompleteColouring);
    EdgeColouring off_palette = EdgeColouring::outer_only(g, {1, 2, 4, 1, 2, 3});
    CHECK_THROWS_AS(extend_outer(off_palette), InvalidParameters);
}

TEST_CASE("extend_outer on a triangle walk for k = 2") {
    GPGraph g = GPGraph::build(6, 2);
    // triples (123, 312, 231) correspond to outer edges [2,1,3,2,1,3]
    EdgeColouring outer = EdgeColouring::outer_only(g, {2, 1, 3, 2, 1, 3});
    TripleSequence seq = triples_of(outer);
    CHECK(seq.phi(1) == ColourTriple(1, 2, 3));
    CHECK(seq.phi(2) == ColourTriple(3, 1, 2));
    CHECK(seq.phi(3) == ColourTriple(2, 3, 1));
    ExtensionResult ext = extend_outer(outer);
    REQUIRE(ext.ok());
    CHECK(ext.colouring->proper());
    CHECK(count_extensions(g, outer) == 1);
}

TEST_CASE("compatible_step matches triple graph arcs") {
    CHECK(compatible_step(ColourTriple(1, 2, 3), ColourTriple(2, 3, 1)));
    CHECK(compatible_step(ColourTriple(1, 2, 3), ColourTriple(3, 1, 2)));
    CHECK_FALSE(compatible_step(ColourTriple(1, 2, 3), ColourTriple(1, 3, 2)));
    CHECK_FALSE(compatible_step(ColourTriple(1, 2, 3), ColourTriple(1, 2, 3)));
    CHECK(compatible_step(ColourTriple(1, 1, 2), ColourTriple(2, 3, 3)));
    CHECK(compatible_step(ColourTriple(1, 1, 2), ColourTriple(3, 2, 3)));
    CHECK_FALSE(compatible_step(ColourTriple(1, 1, 2), ColourTriple(1, 2, 1)));
    CHECK_FALSE(compatible_step(ColourTriple(1, 1, 2), ColourTriple(2, 1, 1)));
    // mixed pattern classes never form an arc
    for (int a = 1; a <= 3; a++)
        for (int b = 1; b <= 3; b++)
            for (int c = 1; c <= 3; c++) {
                ColourTriple t(a, b, c);
                if (t.two_equal()) CHECK_FALSE(compatible_step(ColourTriple(1, 2, 3), t));
            }
}

TEST_CASE("counts for small k") {
    CHECK(count_factorisations(1) == 1);
    CHECK(count_factorisations(2) == 4);
    CHECK(count_factorisations(3) == 3);
    CHECK(count_factorisations(4) == 20);
    CHECK(count_factorisations(5) == 11);
    CHECK(count_factorisations(6) == 84);
    for (int k = 1; k <= 16; k++) {
        BigInt expected = (k % 2 == 1) ? jacobsthal(k) : 4 * jacobsthal(k);
        CHECK(count_factorisations(k) == expected);
    }
    CHECK_THROWS_AS(count_factorisations(0), InvalidParameters);
}

TEST_CASE("signed counts and sign sums for small k") {
    CHECK(signed_factorisation_counts(2) == SignedCount(4, 0));
    CHECK(signed_factorisation_counts(3) == SignedCount(3, 0));
    CHECK(signed_factorisation_counts(4) == SignedCount(4, 16));
    CHECK(alon_tarsi_sum(2) == 4);
    CHECK(alon_tarsi_sum(4) == -12);
    CHECK(alon_tarsi_sum(5) == -9);
    for (int k = 1; k <= 20; k++) {
        CHECK(signed_factorisation_counts(k).total() == count_factorisations(k));
        CHECK(alon_tarsi_sum(k) != 0);
    }
}

TEST_CASE("enumeration of the prism") {
    auto all = enumerate_factorisations(1);
    REQUIRE(all.size() == 1);
    GPGraph g = GPGraph::build(3, 1);
    for (const Matching& m : all[0].factors) {
        REQUIRE(m.size() == 3);
        std::set<EdgeRole> roles;
        for (int id : m) roles.insert(g.edge(id).role);
        CHECK(roles.size() == 3);  // one outer, one spoke, one inner edge
    }
}

TEST_CASE("enumeration sizes and distinctness") {
    CHECK(enumerate_factorisations(2).size() == 4);
    CHECK(enumerate_factorisations(3).size() == 3);
    for (int k = 1; k <= 8; k++) {
        auto all = enumerate_factorisations(k);
        CHECK(BigInt(static_cast<long>(all.size())) == count_factorisations(k));
        auto sorted = all;
        std::sort(sorted.begin(), sorted.end());
        CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
        // factors partition the edge set
        GPGraph g = GPGraph::build(3 * k, k);
        for (const auto& f : all) {
            std::set<int> ids;
            for (const Matching& m : f.factors) ids.insert(m.begin(), m.end());
            CHECK(static_cast<int>(ids.size()) == g.edge_count());
        }
    }
}

TEST_CASE("parallel enumeration matches sequential") {
    for (int k : {2, 3, 5}) CHECK(enumerate_factorisations(k, 4) == enumerate_factorisations(k));
}

TEST_CASE("enumeration is deterministic") {
    auto a = enumerate_factorisations(4);
    auto b = enumerate_factorisations(4);
    CHECK(a == b);
}

TEST_CASE("brute force colouring counts") {
    GPGraph prism = GPGraph::build(3, 1);
    GPGraph durer = GPGraph::build(6, 2);
    GPGraph petersen = GPGraph::build(5, 2);
    GPGraph g93 = GPGraph::build(9, 3);
    CHECK(brute_force_colourings(prism).size() == 6);
    CHECK(brute_force_colourings(durer).size() == 24);
    CHECK(brute_force_colourings(petersen).empty());
    for (const auto& col : brute_force_colourings(g93)) {
        CHECK(col.total());
        CHECK(col.proper());
    }
}

TEST_CASE("brute force size bound") {
    GPGraph too_big = GPGraph::build(21, 7);
    CHECK_THROWS_AS(brute_force_colourings(too_big), InstanceTooLarge);
    BruteForceOptions tight;
    tight.max_vertices = 20;
    GPGraph g124 = GPGraph::build(12, 4);
    GPGraph g93 = GPGraph::build(9, 3);
    CHECK_THROWS_AS(brute_force_colourings(g124, tight), InstanceTooLarge);
    CHECK_NOTHROW(brute_force_colourings(g93, tight));
}

TEST_CASE("parallel brute force matches sequential") {
    BruteForceOptions par;
    par.threads = 3;
    GPGraph g = GPGraph::build(9, 3);
    auto seq = brute_force_colourings(g);
    auto thr = brute_force_colourings(g, par);
    REQUIRE(seq.size() == thr.size());
    for (size_t i = 0; i < seq.size(); i++) CHECK(seq[i] == thr[i]);
}

TEST_CASE("enumeration agrees with the brute-force oracle") {
    for (int k = 1; k <= 4; k++) {
        GPGraph g = GPGraph::build(3 * k, k);
        std::set<OneFactorisation> from_brute;
        for (const auto& col : brute_force_colourings(g))
            from_brute.insert(OneFactorisation::from_colouring(col));
        auto enumerated = enumerate_factorisations(k);
        std::set<OneFactorisation> from_walks(enumerated.begin(), enumerated.end());
        CHECK(from_brute == from_walks);
    }
}

TEST_CASE("sign of the prism colouring") {
    GPGraph g = GPGraph::build(3, 1);
    ExtensionResult ext = extend_outer(EdgeColouring::outer_only(g, {3, 1, 2}));
    REQUIRE(ext.ok());
    CHECK(sign_of(*ext.colouring) == -1);
    CHECK(sign_product_along_triples(*ext.colouring) == -1);
}

TEST_CASE("sign_of requires the triangle structure") {
    GPGraph petersen = GPGraph::build(5, 2);
    CHECK_THROWS_AS(sign_of(EdgeColouring(petersen)), NotApplicable);
    GPGraph g = GPGraph::build(3, 1);
    CHECK_THROWS_AS(sign_of(EdgeColouring(g)), InvalidParameters);  // not total
}

TEST_CASE("colour swaps preserve the sign") {
    for (int k : {2, 3}) {
        GPGraph g = GPGraph::build(3 * k, k);
        for (const auto& col : brute_force_colourings(g)) {
            int base = sign_of(col);
            for (int x = 1; x <= 3; x++)
                for (int y = x + 1; y <= 3; y++) {
                    EdgeColouring swapped = col;
                    for (int id = 0; id < g.edge_count(); id++) {
                        if (col.colour(id) == x) swapped.set(id, y);
                        if (col.colour(id) == y) swapped.set(id, x);
                    }
                    CHECK(sign_of(swapped) == base);
                }
        }
    }
}

TEST_CASE("sign product identity on all colourings up to k = 5") {
    for (int k : {1, 2, 3, 4, 5}) {
        GPGraph g = GPGraph::build(3 * k, k);
        for (const auto& col : brute_force_colourings(g))
            CHECK(sign_of(col) == sign_product_along_triples(col));
    }
}

TEST_CASE("rotation by k preserves properness and sign") {
    for (int k : {1, 2, 3}) {
        GPGraph g = GPGraph::build(3 * k, k);
        for (const auto& col : brute_force_colourings(g)) {
            EdgeColouring rot(g);
            for (int m = 0; m < g.n(); m++) {
                rot.set(g.outer_edge(m + k), col.colour(g.outer_edge(m)));
                rot.set(g.spoke_edge(m + k), col.colour(g.spoke_edge(m)));
                rot.set(g.inner_edge(m + k), col.colour(g.inner_edge(m)));
            }
            REQUIRE(rot.total());
            CHECK(rot.proper());
            CHECK(sign_of(rot) == sign_of(col));
        }
    }
}

TEST_CASE("oracle signed counts for k <= 3") {
    for (int k : {1, 2, 3}) {
        GPGraph g = GPGraph::build(3 * k, k);
        std::map<OneFactorisation, std::vector<int>> classes;
        for (const auto& col : brute_force_colourings(g))
            classes[OneFactorisation::from_colouring(col)].push_back(sign_of(col));
        SignedCount tally;
        for (const auto& [f, signs] : classes) {
            REQUIRE(signs.size() == 6);
            for (int s : signs) CHECK(s == signs.front());
            if (signs.front() > 0)
                tally.pos++;
            else
                tally.neg++;
        }
        CHECK(tally == signed_factorisation_counts(k));
    }
}

TEST_CASE("canonical factorisations ignore colour naming") {
    GPGraph g = GPGraph::build(6, 2);
    auto colourings = brute_force_colourings(g);
    REQUIRE(!colourings.empty());
    const EdgeColouring& col = colourings.front();
    EdgeColouring swapped = col;
    for (int id = 0; id < g.edge_count(); id++)
        swapped.set(id, col.colour(id) == 1 ? 2 : col.colour(id) == 2 ? 1 : 3);
    CHECK(OneFactorisation::from_colouring(col) == OneFactorisation::from_colouring(swapped));
}

TEST_CASE("extension sweep for k <= 2 against the oracle") {
    for (int k : {1, 2}) {
        GPGraph g = GPGraph::build(3 * k, k);
        int n = g.n();
        std::vector<int> outer(n, 1);
        for (;;) {
            EdgeColouring phi = EdgeColouring::outer_only(g, outer);
            std::uint64_t completions = count_extensions(g, phi);
            ExtensionResult ext = extend_outer(phi);
            CHECK(completions <= 1);
            CHECK(ext.ok() == (completions == 1));
            if (ext.ok()) CHECK(ext.colouring->outer_colours() == outer);
            int pos = 0;
            while (pos < n && outer[pos] == 3) outer[pos++] = 1;
            if (pos == n) break;
            outer[pos]++;
        }
    }
}

TEST_CASE("factorisation json shape") {
    GPGraph g = GPGraph::build(3, 1);
    auto all = enumerate_factorisations(1);
    auto j = factorisation_json(g, all[0]);
    CHECK(j["k"] == 1);
    REQUIRE(j["factors"].size() == 3);
    for (const auto& factor : j["factors"]) {
        CHECK(factor.size() == 3);
        for (const auto& e : factor) CHECK(e.size() == 2);
    }
    auto j2 = signed_count_json(4, signed_factorisation_counts(4));
    CHECK(j2["count"] == "20");
    CHECK(j2["positive"] == "4");
    CHECK(j2["negative"] == "16");
    CHECK(j2["sign_sum"] == "-12");
}
