#include "gpf/triple_graph.hpp"

#include "gpf/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace gpf {

namespace {

// Vertex patterns with colours (1,2,3), clockwise.
constexpr std::array<std::array<int, 3>, 3> kTrianglePatterns = {{
    {1, 2, 3},  // x_0
    {3, 1, 2},  // x_1
    {2, 3, 1},  // x_2
}};
constexpr std::array<std::array<int, 3>, 6> kHexagonPatterns = {{
    {1, 1, 2},  // y_0
    {2, 3, 3},  // y_1
    {1, 2, 1},  // y_2
    {3, 3, 2},  // z_0
    {2, 1, 1},  // z_1
    {3, 2, 3},  // z_2
}};

}  // namespace

const TripleGraph& TripleGraph::t() {
    static const TripleGraph g(TripleGraphKind::T);
    return g;
}
const TripleGraph& TripleGraph::h() {
    static const TripleGraph g(TripleGraphKind::H);
    return g;
}
const TripleGraph& TripleGraph::t_signed() {
    static const TripleGraph g(TripleGraphKind::TSigned);
    return g;
}
const TripleGraph& TripleGraph::h_signed() {
    static const TripleGraph g(TripleGraphKind::HSigned);
    return g;
}

void TripleGraph::check_vertex(int v) const {
    if (v < 0 || v >= size()) {
        std::ostringstream msg;
        msg << "vertex " << v << " not in triple graph of size " << size();
        throw VertexNotInGraph(msg.str());
    }
}

bool TripleGraph::adjacent(int a, int b) const {
    check_vertex(a);
    check_vertex(b);
    int m = size();
    return b == (a + 1) % m || b == (a + m - 1) % m;
}

int TripleGraph::arc_sign(int from, int to) const {
    check_vertex(from);
    check_vertex(to);
    int m = size();
    bool clockwise;
    if (to == (from + 1) % m)
        clockwise = true;
    else if (to == (from + m - 1) % m)
        clockwise = false;
    else
        throw std::invalid_argument("arc_sign: vertices are not adjacent");
    if (!with_signs()) return 1;
    if (kind_ == TripleGraphKind::TSigned) return clockwise ? 1 : -1;
    return clockwise ? -1 : 1;
}

ColourTriple TripleGraph::pattern(int vertex) const {
    check_vertex(vertex);
    const auto& p = hexagon() ? kHexagonPatterns[static_cast<size_t>(vertex)]
                              : kTrianglePatterns[static_cast<size_t>(vertex)];
    return {p[0], p[1], p[2]};
}

std::optional<int> TripleGraph::vertex_of(const ColourTriple& t) const {
    for (int v = 0; v < size(); v++)
        if (pattern(v) == t) return v;
    return std::nullopt;
}

BigInt jacobsthal(int k) {
    if (k < 0) throw InvalidParameters("jacobsthal: k must be nonnegative");
    BigInt prev = 0, cur = 1;  // J(0), J(1)
    if (k == 0) return prev;
    for (int i = 1; i < k; i++) {
        BigInt next = cur + 2 * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

SignedCount count_walks(const TripleGraph& g, int length, int from, int to) {
    if (length < 0) throw InvalidParameters("count_walks: negative length");
    int m = g.size();
    if (from < 0 || from >= m) throw VertexNotInGraph("count_walks: bad start vertex");
    if (to < 0 || to >= m) throw VertexNotInGraph("count_walks: bad end vertex");

    // row vector times transfer matrix, `length` times
    std::vector<SignedCount> row(static_cast<size_t>(m));
    row[static_cast<size_t>(from)] = SignedCount::one();
    for (int step = 0; step < length; step++) {
        std::vector<SignedCount> next(static_cast<size_t>(m));
        for (int a = 0; a < m; a++) {
            if (row[static_cast<size_t>(a)].pos == 0 && row[static_cast<size_t>(a)].neg == 0)
                continue;
            for (int b : {(a + 1) % m, (a + m - 1) % m}) {
                SignedCount arc = g.arc_sign(a, b) > 0 ? SignedCount{1, 0} : SignedCount{0, 1};
                next[static_cast<size_t>(b)] =
                    next[static_cast<size_t>(b)] + row[static_cast<size_t>(a)] * arc;
            }
        }
        row = std::move(next);
    }
    return row[static_cast<size_t>(to)];
}

std::vector<Walk> walks_between(const TripleGraph& g, int length, int from, int to) {
    if (length < 0) throw InvalidParameters("walks_between: negative length");
    int m = g.size();
    if (from < 0 || from >= m) throw VertexNotInGraph("walks_between: bad start vertex");
    if (to < 0 || to >= m) throw VertexNotInGraph("walks_between: bad end vertex");

    std::vector<Walk> out;
    Walk cur{from};
    // neighbours tried in ascending index so the output is lexicographic
    auto rec = [&](auto&& rec_) -> void {
        if (static_cast<int>(cur.size()) == length + 1) {
            if (cur.back() == to) out.push_back(cur);
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
    return out;
}

int walk_sign(const TripleGraph& g, const Walk& w) {
    int s = 1;
    for (size_t i = 1; i < w.size(); i++) s *= g.arc_sign(w[i - 1], w[i]);
    return s;
}

namespace {

BigInt exact_div(const BigInt& x, int d, const char* what) {
    if (x % d != 0) {
        std::ostringstream msg;
        msg << what << ": " << x.str() << " is not divisible by " << d;
        throw NonIntegerResult(msg.str());
    }
    return x / d;
}

}  // namespace

BigInt closed_form_t(int k, int ell) {
    if (k < 0) throw InvalidParameters("closed_form_t: k must be nonnegative");
    if (ell != 0 && ell != 1) throw InvalidParameters("closed_form_t: ell must be 0 or 1");
    int s = (k % 2 == 0) ? 1 : -1;
    if (ell == 0) return exact_div(pow2(k) + 2 * s, 3, "closed_form_t(0)");
    return exact_div(pow2(k) - s, 3, "closed_form_t(1)");
}

SignedCount closed_form_signed_t(int k) {
    if (k < 1) throw InvalidParameters("closed_form_signed_t: k must be positive");
    int s = (k % 2 == 0) ? 1 : -1;
    BigInt osc = pow_neg3((k + 1) / 2);
    SignedCount r;
    r.pos = exact_div(pow2(k) - s * (1 + osc), 6, "closed_form_signed_t pos");
    r.neg = exact_div(pow2(k) - s * (1 - osc), 6, "closed_form_signed_t neg");
    return r;
}

Walk lift_walk(const Walk& t_walk) {
    if (t_walk.empty() || t_walk.front() != 0)
        throw InvalidParameters("lift_walk: walk must start at x_0");
    Walk h_walk;
    h_walk.reserve(t_walk.size());
    h_walk.push_back(0);
    for (size_t i = 1; i < t_walk.size(); i++) {
        int step = (t_walk[i] - t_walk[i - 1] + 3) % 3;  // 1 = clockwise, 2 = counter-clockwise
        if (step != 1 && step != 2)
            throw InvalidParameters("lift_walk: consecutive vertices are not adjacent");
        int delta = step == 1 ? 1 : 5;
        h_walk.push_back((h_walk.back() + delta) % 6);
    }
    return h_walk;
}

}  // namespace gpf
