#ifndef GPF_TRIPLE_GRAPH_HPP
#define GPF_TRIPLE_GRAPH_HPP

#include "gpf/bigint.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gpf {

// An ordered triple of colours from {1,2,3}.  Triples with all colours
// distinct live on the triangle graph, triples with exactly two equal
// colours live on the hexagon graph; monochromatic triples live nowhere.
struct ColourTriple {
    std::array<int, 3> c{0, 0, 0};

    ColourTriple() = default;
    ColourTriple(int c0, int c1, int c2) : c{c0, c1, c2} {}

    bool all_distinct() const { return c[0] != c[1] && c[1] != c[2] && c[0] != c[2]; }
    bool monochromatic() const { return c[0] == c[1] && c[1] == c[2]; }
    bool two_equal() const { return !all_distinct() && !monochromatic(); }

    // Position pattern of the repeated colour: 0 for xxy, 1 for xyy, 2 for
    // xyx.  Meaningful only for two_equal() triples; -1 otherwise.
    int shape() const {
        if (!two_equal()) return -1;
        if (c[0] == c[1]) return 0;
        if (c[1] == c[2]) return 1;
        return 2;
    }

    ColourTriple rotated_left() const { return {c[1], c[2], c[0]}; }
    ColourTriple rotated_right() const { return {c[2], c[0], c[1]}; }

    std::string str() const {
        return {static_cast<char>('0' + c[0]), static_cast<char>('0' + c[1]),
                static_cast<char>('0' + c[2])};
    }

    bool operator==(const ColourTriple& o) const { return c == o.c; }
    bool operator!=(const ColourTriple& o) const { return c != o.c; }
};

// A pair of exact nonnegative walk counts split by sign.  Forms a
// commutative semiring under (+, *): the product tracks how signs of
// concatenated walks combine.
struct SignedCount {
    BigInt pos = 0;
    BigInt neg = 0;

    SignedCount() = default;
    SignedCount(BigInt p, BigInt n) : pos(std::move(p)), neg(std::move(n)) {}

    BigInt total() const { return pos + neg; }
    BigInt signed_sum() const { return pos - neg; }

    static SignedCount one() { return {1, 0}; }

    SignedCount operator+(const SignedCount& o) const { return {pos + o.pos, neg + o.neg}; }
    SignedCount operator*(const SignedCount& o) const {
        return {pos * o.pos + neg * o.neg, pos * o.neg + neg * o.pos};
    }
    bool operator==(const SignedCount& o) const { return pos == o.pos && neg == o.neg; }
    bool operator!=(const SignedCount& o) const { return !(*this == o); }
};

enum class TripleGraphKind { T, H, TSigned, HSigned };

// One of the four walk graphs on colour-triple patterns.  The triangle
// kinds have 3 vertices, the hexagon kinds 6, arranged on a circle with
// clockwise = ascending index.  In the signed triangle every clockwise arc
// carries +1 and every counter-clockwise arc -1; in the signed hexagon the
// signs are the other way round.  Unsigned kinds carry +1 everywhere.
class TripleGraph {
public:
    explicit TripleGraph(TripleGraphKind kind) : kind_(kind) {}

    static const TripleGraph& t();
    static const TripleGraph& h();
    static const TripleGraph& t_signed();
    static const TripleGraph& h_signed();

    TripleGraphKind kind() const { return kind_; }
    bool hexagon() const { return kind_ == TripleGraphKind::H || kind_ == TripleGraphKind::HSigned; }
    bool with_signs() const {
        return kind_ == TripleGraphKind::TSigned || kind_ == TripleGraphKind::HSigned;
    }
    int size() const { return hexagon() ? 6 : 3; }

    bool adjacent(int a, int b) const;

    // Sign of the arc from -> to; +1 or -1.  Throws VertexNotInGraph for
    // out-of-range vertices and std::invalid_argument for non-arcs.
    int arc_sign(int from, int to) const;

    // Colour-triple pattern of a vertex, instantiated with colours (1,2,3).
    // Triangle: 123, 312, 231 in clockwise order.  Hexagon: 112, 233, 121,
    // 331, 211, 313 in clockwise order.
    ColourTriple pattern(int vertex) const;

    // Inverse of pattern(); empty when the triple is not a vertex here.
    std::optional<int> vertex_of(const ColourTriple& t) const;

private:
    void check_vertex(int v) const;

    TripleGraphKind kind_;
};

// A walk as its vertex-index sequence; steps move to an adjacent vertex
// (index +-1 mod cycle length).
using Walk = std::vector<int>;

// J(0)=0, J(1)=1, J(k)=J(k-1)+2J(k-2).
BigInt jacobsthal(int k);

// Exact count of walks of the given length from `from` to `to`, split by
// the product of arc signs (unsigned kinds put everything in pos).
// Computed as a length-fold product of the sign-semiring transfer matrix.
SignedCount count_walks(const TripleGraph& g, int length, int from, int to);

// All such walks, by depth-first search, in lexicographic order of the
// vertex sequence.  Meant for small lengths; 2^length candidates.
std::vector<Walk> walks_between(const TripleGraph& g, int length, int from, int to);

// Product of arc signs along a walk.
int walk_sign(const TripleGraph& g, const Walk& w);

// Closed-form walk counts on the triangle: ell = 0 gives the closed-walk
// count (2^k + 2(-1)^k)/3, ell = 1 the count between distinct vertices,
// which is the Jacobsthal number (2^k + (-1)^{k+1})/3.  Divisions are
// checked exact; NonIntegerResult on failure.
BigInt closed_form_t(int k, int ell);

// Closed-form signed counts from x_0 to x_2 on the signed triangle:
//   pos = (2^k - (-1)^k (1 + (-3)^ceil(k/2))) / 6
//   neg = (2^k - (-1)^k (1 - (-3)^ceil(k/2))) / 6
// for k >= 1; divisions checked exact.
SignedCount closed_form_signed_t(int k);

// Lifts a triangle walk starting at x_0 to the hexagon walk starting at
// y_0 whose every step has the same rotational direction.  For even-length
// walks ending at x_2 the lift ends at y_2, and the restriction to such
// walks is a bijection.
Walk lift_walk(const Walk& t_walk);

}  // namespace gpf

#endif
