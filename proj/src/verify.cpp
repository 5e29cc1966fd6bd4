#include "gpf/verify.hpp"

#include "gpf/factorisation.hpp"
#include "gpf/gp_graph.hpp"
#include "gpf/list_colouring.hpp"
#include "gpf/triple_graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gpf {

namespace {

struct Check {
    bool ok = true;
    std::string message;

    void fail(const std::string& msg) {
        if (ok) {
            ok = false;
            message = msg;
        }
    }
    template <typename A, typename B>
    void equal(const A& a, const B& b, const std::string& what) {
        if (!(a == b)) fail(what);
    }
    void require(bool cond, const std::string& what) {
        if (!cond) fail(what);
    }
};

std::string at_k(const char* what, int k) {
    std::ostringstream s;
    s << what << " at k=" << k;
    return s.str();
}

Check jacobsthal_forms(int k_max) {
    Check c;
    const long expected[] = {0, 1, 1, 3, 5, 11, 21, 43, 85, 171, 341};
    for (int k = 0; k <= 10; k++) c.equal(jacobsthal(k), BigInt(expected[k]), at_k("sequence prefix", k));
    for (int k = 1; k <= std::max(k_max, 10); k++)
        c.equal(jacobsthal(k), closed_form_t(k, 1), at_k("recurrence vs closed form", k));
    for (int k = 2; k <= std::max(k_max, 10); k++)
        c.equal(jacobsthal(k), jacobsthal(k - 1) + 2 * jacobsthal(k - 2),
                at_k("recurrence step", k));
    return c;
}

Check walk_closed_forms(int k_max) {
    Check c;
    const TripleGraph& t = TripleGraph::t();
    const TripleGraph& h = TripleGraph::h();
    const TripleGraph& ts = TripleGraph::t_signed();
    const TripleGraph& hs = TripleGraph::h_signed();
    for (int k = 0; k <= k_max; k++) {
        c.equal(count_walks(t, k, 0, 0).total(), closed_form_t(k, 0), at_k("closed triangle walks", k));
        c.equal(count_walks(t, k, 0, 1).total(), jacobsthal(k), at_k("triangle walks x0->x1", k));
        c.equal(count_walks(t, k, 0, 2).total(), closed_form_t(k, 1), at_k("triangle walks x0->x2", k));
        BigInt hex = count_walks(h, k, 0, 2).total();
        if (k % 2 == 1)
            c.equal(hex, BigInt(0), at_k("odd hexagon walks y0->y2", k));
        else
            c.equal(hex, count_walks(t, k, 0, 2).total(), at_k("even hexagon vs triangle", k));
        if (k >= 1) {
            SignedCount signed_t = count_walks(ts, k, 0, 2);
            c.equal(signed_t, closed_form_signed_t(k), at_k("signed triangle closed form", k));
            c.equal(signed_t.total(), jacobsthal(k), at_k("signed split sums to J", k));
            if (k % 2 == 0) {
                SignedCount signed_h = count_walks(hs, k, 0, 2);
                c.equal(signed_h, signed_t, at_k("even signed hexagon vs triangle", k));
            }
            // the three hexagon start classes count the same by rotation
            c.equal(count_walks(hs, k, 2, 4), count_walks(hs, k, 0, 2), at_k("hexagon class 121", k));
            c.equal(count_walks(hs, k, 4, 0), count_walks(hs, k, 0, 2), at_k("hexagon class 211", k));
        }
    }
    return c;
}

Check reverse_walk_symmetry(int k_max) {
    Check c;
    for (int k = 1; k <= std::min(k_max, 20); k++) {
        SignedCount fwd = count_walks(TripleGraph::t_signed(), k, 0, 1);
        SignedCount rev = count_walks(TripleGraph::t_signed(), k, 1, 0);
        if (k % 2 == 0)
            c.equal(fwd, rev, at_k("even reverse equality", k));
        else
            c.require(fwd.pos == rev.neg && fwd.neg == rev.pos, at_k("odd reverse swap", k));
    }
    return c;
}

Check walk_enumeration_oracle(int k_max) {
    Check c;
    int bound = std::min(k_max, 12);
    const TripleGraph* graphs[] = {&TripleGraph::t(), &TripleGraph::h(), &TripleGraph::t_signed(),
                                   &TripleGraph::h_signed()};
    for (const TripleGraph* g : graphs) {
        for (int len = 0; len <= bound; len++) {
            for (int from = 0; from < g->size(); from++) {
                for (int to = 0; to < g->size(); to++) {
                    SignedCount tally;
                    for (const Walk& w : walks_between(*g, len, from, to)) {
                        if (walk_sign(*g, w) > 0)
                            tally.pos++;
                        else
                            tally.neg++;
                    }
                    c.equal(tally, count_walks(*g, len, from, to), at_k("transfer vs DFS", len));
                }
            }
        }
    }
    return c;
}

Check lift_bijection(int k_max) {
    Check c;
    int bound = std::min(k_max, 12);
    for (int len = 0; len <= bound; len += 2) {
        auto t_walks = walks_between(TripleGraph::t(), len, 0, 2);
        std::vector<Walk> lifted;
        for (const Walk& w : t_walks) {
            Walk lw = lift_walk(w);
            c.require(lw.back() == 2, at_k("lift endpoint", len));
            c.require(lw.size() == w.size(), at_k("lift length", len));
            for (size_t i = 1; i < w.size(); i++) {
                int td = (w[i] - w[i - 1] + 3) % 3;
                int hd = (lw[i] - lw[i - 1] + 6) % 6;
                c.require((td == 1) == (hd == 1), at_k("lift direction", len));
            }
            lifted.push_back(std::move(lw));
        }
        std::sort(lifted.begin(), lifted.end());
        c.require(std::adjacent_find(lifted.begin(), lifted.end()) == lifted.end(),
                  at_k("lift injectivity", len));
        auto h_walks = walks_between(TripleGraph::h(), len, 0, 2);
        c.equal(lifted.size(), h_walks.size(), at_k("lift surjectivity", len));
        c.equal(BigInt(static_cast<long>(t_walks.size())),
                count_walks(TripleGraph::t(), len, 0, 2).total(), at_k("lift set size", len));
    }
    return c;
}

Check factorisation_counts(int k_max) {
    Check c;
    for (int k = 1; k <= k_max; k++) {
        BigInt count = count_factorisations(k);
        BigInt expected = (k % 2 == 1) ? jacobsthal(k) : 4 * jacobsthal(k);
        c.equal(count, expected, at_k("count vs Jacobsthal", k));
        SignedCount split = signed_factorisation_counts(k);
        c.equal(split.total(), count, at_k("signed split total", k));
        c.require(alon_tarsi_sum(k) != 0, at_k("sign sum nonzero", k));
        if (k % 2 == 1) c.require(count % 2 == 1, at_k("odd k gives odd count", k));
    }
    return c;
}

Check enumeration_consistency(int k_max) {
    Check c;
    for (int k = 1; k <= std::min(k_max, 8); k++) {
        GPGraph g = GPGraph::build(3 * k, k);
        std::vector<OneFactorisation> all;
        SignedCount tally;
        for_each_factorisation(k, [&](const OneFactorisation& f, const EdgeColouring& col) {
            all.push_back(f);
            int s = sign_of(col);
            c.equal(s, sign_product_along_triples(col), at_k("sign product identity", k));
            if (s > 0)
                tally.pos++;
            else
                tally.neg++;
            for (const Matching& m : f.factors) {
                std::vector<char> covered(static_cast<size_t>(g.vertex_count()), 0);
                for (int id : m) {
                    covered[static_cast<size_t>(g.edge(id).a)]++;
                    covered[static_cast<size_t>(g.edge(id).b)]++;
                }
                c.require(std::all_of(covered.begin(), covered.end(),
                                      [](char x) { return x == 1; }),
                          at_k("factor is a perfect matching", k));
            }
        });
        c.equal(BigInt(static_cast<long>(all.size())), count_factorisations(k),
                at_k("stream length", k));
        auto sorted = all;
        std::sort(sorted.begin(), sorted.end());
        c.require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
                  at_k("factorisations pairwise distinct", k));
        c.equal(tally, signed_factorisation_counts(k), at_k("enumerated signs vs counts", k));
        c.require(enumerate_factorisations(k, 4) == all, at_k("parallel enumeration order", k));
    }
    return c;
}

Check brute_force_counts(int k_max, int threads) {
    Check c;
    for (int k = 1; k <= std::min(k_max, 5); k++) {
        GPGraph g = GPGraph::build(3 * k, k);
        BruteForceOptions opts;
        opts.threads = threads;
        auto colourings = brute_force_colourings(g, opts);
        c.equal(BigInt(static_cast<long>(colourings.size())), 6 * count_factorisations(k),
                at_k("six colourings per factorisation", k));
        for (const auto& col : colourings)
            c.require(col.total() && col.proper(), at_k("brute-force colouring proper", k));
    }
    return c;
}

Check brute_force_signs(int k_max) {
    Check c;
    for (int k = 1; k <= std::min(k_max, 5); k++) {
        GPGraph g = GPGraph::build(3 * k, k);
        auto colourings = brute_force_colourings(g);
        std::map<OneFactorisation, std::vector<int>> classes;
        for (const auto& col : colourings) {
            int s = sign_of(col);
            c.equal(s, sign_product_along_triples(col), at_k("sign product identity", k));
            classes[OneFactorisation::from_colouring(col)].push_back(s);
        }
        SignedCount tally;
        for (const auto& [f, signs] : classes) {
            c.equal(signs.size(), static_cast<size_t>(6), at_k("class size six", k));
            c.require(std::all_of(signs.begin(), signs.end(),
                                  [&](int s) { return s == signs.front(); }),
                      at_k("sign constant on a class", k));
            if (signs.front() > 0)
                tally.pos++;
            else
                tally.neg++;
        }
        c.equal(tally, signed_factorisation_counts(k), at_k("oracle signed counts", k));

        if (k <= 4) {
            // rotating by k positions maps the graph to itself and keeps the sign
            for (const auto& col : colourings) {
                EdgeColouring rot(g);
                for (int m = 0; m < g.n(); m++) {
                    rot.set(g.outer_edge(m + k), col.colour(g.outer_edge(m)));
                    rot.set(g.spoke_edge(m + k), col.colour(g.spoke_edge(m)));
                    rot.set(g.inner_edge(m + k), col.colour(g.inner_edge(m)));
                }
                c.require(rot.total() && rot.proper(), at_k("rotated colouring proper", k));
                c.equal(sign_of(rot), sign_of(col), at_k("rotation keeps sign", k));
            }
        }
    }
    return c;
}

Check extension_sweep(int k_max) {
    Check c;
    for (int k = 1; k <= std::min(k_max, 4); k++) {
        GPGraph g = GPGraph::build(3 * k, k);
        int n = g.n();
        std::vector<int> outer(static_cast<size_t>(n), 1);
        for (;;) {
            EdgeColouring phi = EdgeColouring::outer_only(g, outer);
            ExtensionResult ext = extend_outer(phi);
            std::uint64_t completions = count_extensions(g, phi);
            c.require(completions <= 1, at_k("extension never ambiguous", k));
            c.equal(ext.ok(), completions == 1, at_k("extendable iff uniquely completable", k));
            if (ext.ok()) {
                c.require(ext.colouring->total() && ext.colouring->proper(),
                          at_k("extension proper", k));
                c.equal(ext.colouring->outer_colours(), outer, at_k("extension restricts", k));
            } else {
                c.require(ext.first_bad_triple >= 1 && ext.first_bad_triple <= k,
                          at_k("failure index in range", k));
            }
            // odometer over all 3^n outer assignments
            int pos = 0;
            while (pos < n && outer[static_cast<size_t>(pos)] == 3) {
                outer[static_cast<size_t>(pos)] = 1;
                pos++;
            }
            if (pos == n) break;
            outer[static_cast<size_t>(pos)]++;
        }
    }
    return c;
}

Check extension_uniqueness_proper(int k_max) {
    Check c;
    for (int k = 1; k <= std::min(k_max, 5); k++) {
        GPGraph g = GPGraph::build(3 * k, k);
        int n = g.n();
        std::vector<int> outer(static_cast<size_t>(n), 0);
        // proper colourings of the outer cycle, by DFS along it
        auto rec = [&](auto&& rec_, int m) -> void {
            if (m == n) {
                EdgeColouring phi = EdgeColouring::outer_only(g, outer);
                ExtensionResult ext = extend_outer(phi);
                std::uint64_t completions = count_extensions(g, phi);
                c.require(completions <= 1, at_k("proper extension never ambiguous", k));
                c.equal(ext.ok(), completions == 1, at_k("proper extendable iff unique", k));
                return;
            }
            for (int col = 1; col <= 3; col++) {
                if (m > 0 && outer[static_cast<size_t>(m - 1)] == col) continue;
                if (m == n - 1 && outer[0] == col) continue;
                outer[static_cast<size_t>(m)] = col;
                rec_(rec_, m + 1);
                outer[static_cast<size_t>(m)] = 0;
            }
        };
        rec(rec, 0);
    }
    return c;
}

Check petersen_negative() {
    Check c;
    GPGraph petersen = GPGraph::build(5, 2);
    c.require(brute_force_colourings(petersen).empty(), "Petersen graph has no 3-edge-colouring");
    ListAssignment uniform;
    uniform.lists.assign(static_cast<size_t>(petersen.edge_count()), {1, 2, 3});
    c.require(!solve_list_colouring(petersen, uniform).solved(),
              "Petersen graph unsolvable with uniform {1,2,3}");
    GPGraph durer = GPGraph::build(6, 2);
    ListAssignment uniform6;
    uniform6.lists.assign(static_cast<size_t>(durer.edge_count()), {1, 2, 3});
    auto res = solve_list_colouring(durer, uniform6);
    c.require(res.solved() && check_list_colouring(durer, uniform6, *res.colouring),
              "GP(6,2) solvable with uniform {1,2,3}");
    return c;
}

SuiteResult wrap(const char* name, const Check& c, const std::string& bound) {
    SuiteResult r;
    r.name = name;
    r.passed = c.ok;
    r.detail = c.ok ? bound : c.message;
    return r;
}

std::string k_bound(int k) {
    std::ostringstream s;
    s << "k<=" << k;
    return s.str();
}

}  // namespace

std::vector<SuiteResult> run_verification(int k_max, bool with_oracle, int threads) {
    std::vector<SuiteResult> out;
    out.push_back(wrap("jacobsthal-forms", jacobsthal_forms(k_max), k_bound(std::max(k_max, 10))));
    out.push_back(wrap("walk-closed-forms", walk_closed_forms(k_max), k_bound(k_max)));
    out.push_back(wrap("reverse-walk-symmetry", reverse_walk_symmetry(k_max),
                       k_bound(std::min(k_max, 20))));
    out.push_back(wrap("walk-enumeration-oracle", walk_enumeration_oracle(k_max),
                       k_bound(std::min(k_max, 12))));
    out.push_back(wrap("lift-bijection", lift_bijection(k_max), k_bound(std::min(k_max, 12))));
    out.push_back(wrap("factorisation-counts", factorisation_counts(k_max), k_bound(k_max)));
    out.push_back(wrap("enumeration-consistency", enumeration_consistency(k_max),
                       k_bound(std::min(k_max, 8))));
    if (with_oracle) {
        out.push_back(wrap("oracle-colouring-counts", brute_force_counts(k_max, threads),
                           k_bound(std::min(k_max, 5))));
        out.push_back(wrap("oracle-signed-counts", brute_force_signs(k_max),
                           k_bound(std::min(k_max, 5))));
        out.push_back(wrap("oracle-extension-sweep", extension_sweep(k_max),
                           k_bound(std::min(k_max, 4))));
        out.push_back(wrap("oracle-extension-uniqueness", extension_uniqueness_proper(k_max),
                           k_bound(std::min(k_max, 5))));
        out.push_back(wrap("oracle-petersen-negative", petersen_negative(), "GP(5,2)"));
    }
    return out;
}

}  // namespace gpf
