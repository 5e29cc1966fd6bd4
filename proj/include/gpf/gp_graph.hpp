#ifndef GPF_GP_GRAPH_HPP
#define GPF_GP_GRAPH_HPP

#include <array>
#include <string>
#include <vector>

namespace gpf {

enum class EdgeRole { outer, spoke, inner };

const char* role_name(EdgeRole role);

// An undirected edge with canonical endpoint order a < b.
struct Edge {
    int a;
    int b;
    EdgeRole role;
};

// Generalised Petersen graph GP(n,k): outer cycle u_0..u_{n-1}, inner
// vertices v_0..v_{n-1} joined by v_i v_{i+k}, and spokes u_i v_i.
//
// Vertex ids: u_i = i, v_i = n + i.  Edge ids are role-major:
//   outer  m -> m        {u_m, u_{m+1}}
//   spoke  m -> n + m    {u_m, v_m}
//   inner  m -> 2n + m   {v_m, v_{m+k}}
// all indices mod n.  Immutable after construction.
class GPGraph {
public:
    // Requires 1 <= k and 2k < n (and hence n >= 3); throws InvalidParameters.
    static GPGraph build(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    int vertex_count() const { return 2 * n_; }
    int edge_count() const { return 3 * n_; }

    // True when n = 3k, i.e. the inner edges form k disjoint triangles.
    // The rotation system and everything sign-related require this.
    bool triangle_form() const { return n_ == 3 * k_; }

    int u(int i) const { return mod(i); }
    int v(int i) const { return n_ + mod(i); }

    int outer_edge(int m) const { return mod(m); }
    int spoke_edge(int m) const { return n_ + mod(m); }
    int inner_edge(int m) const { return 2 * n_ + mod(m); }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_[static_cast<size_t>(id)]; }

    // The three incident edge ids of a vertex, in ascending edge-id order.
    const std::array<int, 3>& incident(int vertex) const {
        return incidence_[static_cast<size_t>(vertex)];
    }

    int other_end(int edge_id, int vertex) const;

    // Fixed rotation order of the incident edges, as used by the vertex sign
    // rules: at u_i the order (u_{i-1}u_i, u_i u_{i+1}, u_i v_i), at v_i the
    // order (v_{k+i}v_i, v_i v_{2k+i}, v_i u_i).  Triangle form only; throws
    // NotApplicable otherwise.
    std::array<int, 3> rotation(int vertex) const;

    std::string vertex_name(int id) const;

private:
    GPGraph(int n, int k);

    int mod(int i) const {
        int r = i % n_;
        return r < 0 ? r + n_ : r;
    }

    int n_;
    int k_;
    std::vector<Edge> edges_;
    std::vector<std::array<int, 3>> incidence_;
};

enum class ExportFormat { json, dot };

// Byte-stable serialisation; both formats are UTF-8 and newline-terminated.
std::string export_graph(const GPGraph& g, ExportFormat format);

}  // namespace gpf

#endif
