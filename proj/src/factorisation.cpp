#include "gpf/factorisation.hpp"

#include "gpf/errors.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <stdexcept>

namespace gpf {

namespace {

void require_triangle_form(const GPGraph& g, const char* who) {
    if (!g.triangle_form()) {
        std::ostringstream msg;
        msg << who << ": requires GP(3k,k), got GP(" << g.n() << "," << g.k() << ")";
        throw NotApplicable(msg.str());
    }
}

void require_standard_colours(const EdgeColouring& col, bool outer_scope) {
    const GPGraph& g = col.graph();
    int limit = outer_scope ? g.n() : g.edge_count();
    for (int id = 0; id < limit; id++) {
        int c = col.colour(id);
        if (c < 1 || c > 3) throw InvalidParameters("colours must come from {1,2,3}");
    }
}

}  // namespace

TripleSequence triples_of(const EdgeColouring& outer) {
    const GPGraph& g = outer.graph();
    require_triangle_form(g, "triples_of");
    if (!outer.outer_complete())
        throw IncompleteColouring("triples_of: every outer edge needs a colour");
    int k = g.k();
    TripleSequence seq;
    seq.k = k;
    seq.triples.reserve(static_cast<size_t>(k) + 1);
    for (int i = 1; i <= k + 1; i++) {
        ColourTriple t;
        for (int pos = 0; pos < 3; pos++) t.c[static_cast<size_t>(pos)] = outer.colour(g.outer_edge(pos * k + i));
        seq.triples.push_back(t);
    }
    return seq;
}

bool compatible_step(const ColourTriple& s, const ColourTriple& t) {
    // the forced spoke colours between the two triples must exist and be
    // pairwise distinct (they colour one inner triangle)
    std::array<int, 3> spokes{};
    for (size_t j = 0; j < 3; j++) {
        if (s.c[j] == t.c[j]) return false;
        spokes[j] = 6 - s.c[j] - t.c[j];
    }
    return spokes[0] != spokes[1] && spokes[1] != spokes[2] && spokes[0] != spokes[2];
}

ExtensionResult extend_outer(const EdgeColouring& outer) {
    const GPGraph& g = outer.graph();
    require_triangle_form(g, "extend_outer");
    if (!outer.outer_complete())
        throw IncompleteColouring("extend_outer: every outer edge needs a colour");
    require_standard_colours(outer, true);

    TripleSequence seq = triples_of(outer);
    int k = g.k();
    int n = g.n();
    for (int i = 1; i <= k; i++) {
        if (seq.phi(i).monochromatic()) return {std::nullopt, i};
        if (!compatible_step(seq.phi(i), seq.phi(i + 1))) return {std::nullopt, i};
    }

    EdgeColouring full = outer;
    for (int m = 0; m < n; m++) {
        int a = outer.colour(g.outer_edge(m - 1));
        int b = outer.colour(g.outer_edge(m));
        full.set(g.spoke_edge(m), 6 - a - b);
    }
    for (int m = 0; m < n; m++) {
        // the triangle edge {v_m, v_{m+k}} takes the colour of the spoke at
        // the third triangle vertex v_{m+2k}
        full.set(g.inner_edge(m), full.colour(g.spoke_edge(m + 2 * k)));
    }
    if (!full.total() || !full.proper())
        throw std::logic_error("extend_outer: forced propagation produced an improper colouring");
    return {std::move(full), 0};
}

OneFactorisation OneFactorisation::from_colouring(const EdgeColouring& total) {
    if (!total.total()) throw InvalidParameters("from_colouring: colouring must be total");
    OneFactorisation f;
    for (int id = 0; id < total.graph().edge_count(); id++) {
        int c = total.colour(id);
        if (c < 1 || c > 3) throw InvalidParameters("from_colouring: colours must come from {1,2,3}");
        f.factors[static_cast<size_t>(c - 1)].push_back(id);
    }
    std::sort(f.factors.begin(), f.factors.end());
    return f;
}

BigInt count_factorisations(int k) {
    if (k < 1) throw InvalidParameters("count_factorisations: k must be positive");
    BigInt triangle = count_walks(TripleGraph::t(), k, 0, 2).total();
    BigInt hexagon = count_walks(TripleGraph::h(), k, 0, 2).total();
    BigInt result = triangle + 3 * hexagon;
    BigInt expected = (k % 2 == 1) ? jacobsthal(k) : 4 * jacobsthal(k);
    if (result != expected)
        throw std::logic_error("count_factorisations: walk count disagrees with the Jacobsthal form");
    return result;
}

SignedCount signed_factorisation_counts(int k) {
    if (k < 1) throw InvalidParameters("signed_factorisation_counts: k must be positive");
    SignedCount triangle = count_walks(TripleGraph::t_signed(), k, 0, 2);
    SignedCount hexagon = count_walks(TripleGraph::h_signed(), k, 0, 2);
    SignedCount result{triangle.pos + 3 * hexagon.pos, triangle.neg + 3 * hexagon.neg};
    if (result.total() != count_factorisations(k))
        throw std::logic_error("signed_factorisation_counts: totals disagree with the unsigned count");
    return result;
}

BigInt alon_tarsi_sum(int k) {
    BigInt sum = signed_factorisation_counts(k).signed_sum();
    if (sum == 0) throw std::logic_error("alon_tarsi_sum: sign sum vanished");
    return sum;
}

namespace {

// The four normalised start classes: each 1-factorisation has exactly one
// representative colouring whose first triple is 123, 112, 121 or 211, and
// the walk then runs to the left cyclic shift of that triple.
struct StartClass {
    const TripleGraph* graph;
    int from;
    int to;
};

const std::array<StartClass, 4>& start_classes() {
    static const std::array<StartClass, 4> classes = {{
        {&TripleGraph::t(), 0, 2},  // 123 -> 231
        {&TripleGraph::h(), 0, 2},  // 112 -> 121
        {&TripleGraph::h(), 2, 4},  // 121 -> 211
        {&TripleGraph::h(), 4, 0},  // 211 -> 112
    }};
    return classes;
}

EdgeColouring colouring_from_walk(const GPGraph& g, const TripleGraph& tg, const Walk& walk) {
    int k = g.k();
    int n = g.n();
    std::vector<int> outer(static_cast<size_t>(n), 0);
    for (int i = 1; i <= k; i++) {
        ColourTriple phi = tg.pattern(walk[static_cast<size_t>(i - 1)]);
        for (int pos = 0; pos < 3; pos++)
            outer[static_cast<size_t>((pos * k + i) % n)] = phi.c[static_cast<size_t>(pos)];
    }
    return EdgeColouring::outer_only(g, outer);
}

// Streams walks of the given length in lexicographic vertex-sequence order.
void for_each_walk(const TripleGraph& tg, int length, int from, int to,
                   const std::function<void(const Walk&)>& fn) {
    int m = tg.size();
    Walk cur{from};
    auto rec = [&](auto&& rec_) -> void {
        if (static_cast<int>(cur.size()) == length + 1) {
            if (cur.back() == to) fn(cur);
            return;
        }
        int a = cur.back();
        int n1 = (a + 1) % m, n2 = (a + m - 1) % m;
        if (n1 > n2) std::swap(n1, n2);
        for (int b : {n1, n2}) {
            cur.push_back(b);
            rec_(rec_);
            cur.pop_back();
        }
    };
    rec(rec);
}

void enumerate_class(const GPGraph& g, const StartClass& cls,
                     const std::function<void(const OneFactorisation&, const EdgeColouring&)>& fn) {
    for_each_walk(*cls.graph, g.k(), cls.from, cls.to, [&](const Walk& walk) {
        EdgeColouring outer = colouring_from_walk(g, *cls.graph, walk);
        ExtensionResult ext = extend_outer(outer);
        if (!ext.ok())
            throw std::logic_error("enumerate: a triple-graph walk failed to extend");
        fn(OneFactorisation::from_colouring(*ext.colouring), *ext.colouring);
    });
}

}  // namespace

void for_each_factorisation(
    int k, const std::function<void(const OneFactorisation&, const EdgeColouring&)>& fn) {
    if (k < 1) throw InvalidParameters("for_each_factorisation: k must be positive");
    GPGraph g = GPGraph::build(3 * k, k);
    for (const StartClass& cls : start_classes()) enumerate_class(g, cls, fn);
}

std::vector<OneFactorisation> enumerate_factorisations(int k, int threads) {
    if (k < 1) throw InvalidParameters("enumerate_factorisations: k must be positive");
    if (threads <= 1) {
        std::vector<OneFactorisation> out;
        for_each_factorisation(k, [&](const OneFactorisation& f, const EdgeColouring&) {
            out.push_back(f);
        });
        return out;
    }
    // one task per start class; concatenation in class order reproduces the
    // sequential stream exactly
    GPGraph g = GPGraph::build(3 * k, k);
    std::array<std::future<std::vector<OneFactorisation>>, 4> parts;
    for (size_t c = 0; c < 4; c++) {
        parts[c] = std::async(std::launch::async, [&g, c]() {
            std::vector<OneFactorisation> local;
            enumerate_class(g, start_classes()[c],
                            [&](const OneFactorisation& f, const EdgeColouring&) {
                                local.push_back(f);
                            });
            return local;
        });
    }
    std::vector<OneFactorisation> out;
    for (auto& part : parts) {
        auto local = part.get();
        out.insert(out.end(), local.begin(), local.end());
    }
    return out;
}

int sign_of(const EdgeColouring& total) {
    const GPGraph& g = total.graph();
    require_triangle_form(g, "sign_of");
    if (!total.total() || !total.proper())
        throw InvalidParameters("sign_of: needs a total proper colouring");
    require_standard_colours(total, false);
    int sign = 1;
    for (int w = 0; w < g.vertex_count(); w++) {
        auto rot = g.rotation(w);
        int p = total.colour(rot[0]);
        int q = total.colour(rot[1]);
        // even permutations of (1,2,3) are exactly those whose second entry
        // is the cyclic successor of the first
        if (q != p % 3 + 1) sign = -sign;
    }
    return sign;
}

namespace {

int step_sign(const ColourTriple& s, const ColourTriple& t) {
    if (s.all_distinct() && t.all_distinct()) {
        if (t == s.rotated_right()) return 1;  // clockwise in the signed triangle
        if (t == s.rotated_left()) return -1;
        throw std::invalid_argument("step_sign: triples are not adjacent in the triangle");
    }
    if (s.two_equal() && t.two_equal() && compatible_step(s, t)) {
        int d = (t.shape() - s.shape() + 3) % 3;
        if (d == 1) return -1;  // clockwise in the signed hexagon
        if (d == 2) return 1;
        throw std::invalid_argument("step_sign: triples are not adjacent in the hexagon");
    }
    throw std::invalid_argument("step_sign: not an arc of the signed triple graphs");
}

}  // namespace

int sign_product_along_triples(const EdgeColouring& total) {
    const GPGraph& g = total.graph();
    require_triangle_form(g, "sign_product_along_triples");
    if (!total.total() || !total.proper())
        throw InvalidParameters("sign_product_along_triples: needs a total proper colouring");
    require_standard_colours(total, false);
    TripleSequence seq = triples_of(total);
    int sign = 1;
    for (int i = 1; i <= seq.k; i++) sign *= step_sign(seq.phi(i), seq.phi(i + 1));
    return sign;
}

namespace {

std::vector<int> brute_force_edge_order(const GPGraph& g) {
    std::vector<int> order;
    order.reserve(static_cast<size_t>(g.edge_count()));
    for (int m = 0; m < g.n(); m++) order.push_back(g.outer_edge(m));
    for (int m = 0; m < g.n(); m++) order.push_back(g.spoke_edge(m));
    if (g.triangle_form()) {
        // triangle by triangle, so every inner edge closes a constraint fast
        for (int t = 0; t < g.k(); t++)
            for (int j = 0; j < 3; j++) order.push_back(g.inner_edge(t + j * g.k()));
    } else {
        for (int m = 0; m < g.n(); m++) order.push_back(g.inner_edge(m));
    }
    return order;
}

void search_colourings(const GPGraph& g, std::vector<int>& colours, std::vector<int>& used,
                       const std::vector<int>& order, size_t idx,
                       const std::function<void(const std::vector<int>&)>& emit) {
    if (idx == order.size()) {
        emit(colours);
        return;
    }
    int e = order[idx];
    const Edge& ed = g.edge(e);
    for (int c = 1; c <= 3; c++) {
        int bit = 1 << c;
        if ((used[static_cast<size_t>(ed.a)] | used[static_cast<size_t>(ed.b)]) & bit) continue;
        colours[static_cast<size_t>(e)] = c;
        used[static_cast<size_t>(ed.a)] |= bit;
        used[static_cast<size_t>(ed.b)] |= bit;
        search_colourings(g, colours, used, order, idx + 1, emit);
        colours[static_cast<size_t>(e)] = 0;
        used[static_cast<size_t>(ed.a)] &= ~bit;
        used[static_cast<size_t>(ed.b)] &= ~bit;
    }
}

}  // namespace

std::vector<EdgeColouring> brute_force_colourings(const GPGraph& g, const BruteForceOptions& opts) {
    if (g.vertex_count() > opts.max_vertices) {
        std::ostringstream msg;
        msg << "brute_force_colourings: " << g.vertex_count()
            << " vertices exceeds the bound of " << opts.max_vertices;
        throw InstanceTooLarge(msg.str());
    }
    std::vector<int> order = brute_force_edge_order(g);
    auto run_with_first = [&](int first_colour) {
        std::vector<EdgeColouring> found;
        std::vector<int> colours(static_cast<size_t>(g.edge_count()), 0);
        std::vector<int> used(static_cast<size_t>(g.vertex_count()), 0);
        int e = order[0];
        const Edge& ed = g.edge(e);
        colours[static_cast<size_t>(e)] = first_colour;
        used[static_cast<size_t>(ed.a)] |= 1 << first_colour;
        used[static_cast<size_t>(ed.b)] |= 1 << first_colour;
        search_colourings(g, colours, used, order, 1, [&](const std::vector<int>& assignment) {
            EdgeColouring col(g);
            for (int id = 0; id < g.edge_count(); id++) col.set(id, assignment[static_cast<size_t>(id)]);
            found.push_back(std::move(col));
        });
        return found;
    };

    std::vector<EdgeColouring> out;
    if (opts.threads <= 1) {
        for (int c = 1; c <= 3; c++) {
            auto part = run_with_first(c);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    // split on the first edge's colour; merging in colour order matches the
    // sequential exploration
    std::array<std::future<std::vector<EdgeColouring>>, 3> parts;
    for (int c = 1; c <= 3; c++)
        parts[static_cast<size_t>(c - 1)] = std::async(std::launch::async, run_with_first, c);
    for (auto& part : parts) {
        auto local = part.get();
        out.insert(out.end(), local.begin(), local.end());
    }
    return out;
}

std::uint64_t count_extensions(const GPGraph& g, const EdgeColouring& partial) {
    std::vector<int> used(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<int> colours(static_cast<size_t>(g.edge_count()), 0);
    for (int id = 0; id < g.edge_count(); id++) {
        int c = partial.colour(id);
        if (c == 0) continue;
        if (c < 1 || c > 3) throw InvalidParameters("count_extensions: colours must come from {1,2,3}");
        const Edge& ed = g.edge(id);
        int bit = 1 << c;
        if ((used[static_cast<size_t>(ed.a)] | used[static_cast<size_t>(ed.b)]) & bit) return 0;
        used[static_cast<size_t>(ed.a)] |= bit;
        used[static_cast<size_t>(ed.b)] |= bit;
        colours[static_cast<size_t>(id)] = c;
    }
    std::vector<int> order;
    for (int e : brute_force_edge_order(g))
        if (partial.colour(e) == 0) order.push_back(e);
    std::uint64_t count = 0;
    search_colourings(g, colours, used, order, 0,
                      [&](const std::vector<int>&) { count++; });
    return count;
}

}  // namespace gpf
