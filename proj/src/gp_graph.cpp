#include "gpf/gp_graph.hpp"

#include "gpf/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace gpf {

const char* role_name(EdgeRole role) {
    switch (role) {
        case EdgeRole::outer: return "outer";
        case EdgeRole::spoke: return "spoke";
        case EdgeRole::inner: return "inner";
    }
    return "?";
}

GPGraph::GPGraph(int n, int k) : n_(n), k_(k) {
    edges_.reserve(static_cast<size_t>(3 * n));
    auto canon = [](int a, int b, EdgeRole role) {
        if (a > b) std::swap(a, b);
        return Edge{a, b, role};
    };
    for (int m = 0; m < n; m++) edges_.push_back(canon(u(m), u(m + 1), EdgeRole::outer));
    for (int m = 0; m < n; m++) edges_.push_back(canon(u(m), v(m), EdgeRole::spoke));
    for (int m = 0; m < n; m++) edges_.push_back(canon(v(m), v(m + k), EdgeRole::inner));

    incidence_.assign(static_cast<size_t>(2 * n), {-1, -1, -1});
    std::vector<int> fill(static_cast<size_t>(2 * n), 0);
    for (int id = 0; id < 3 * n; id++) {
        const Edge& e = edges_[static_cast<size_t>(id)];
        for (int w : {e.a, e.b}) {
            incidence_[static_cast<size_t>(w)][static_cast<size_t>(fill[static_cast<size_t>(w)]++)] = id;
        }
    }
    // edge ids are generated ascending, so each incidence triple is sorted
}

GPGraph GPGraph::build(int n, int k) {
    if (k < 1 || 2 * k >= n || n < 3) {
        std::ostringstream msg;
        msg << "GP(" << n << "," << k << ") requires 1 <= k and 2k < n";
        throw InvalidParameters(msg.str());
    }
    return GPGraph(n, k);
}

int GPGraph::other_end(int edge_id, int vertex) const {
    const Edge& e = edges_[static_cast<size_t>(edge_id)];
    return e.a == vertex ? e.b : e.a;
}

std::array<int, 3> GPGraph::rotation(int vertex) const {
    if (!triangle_form())
        throw NotApplicable("rotation system is defined only for GP(3k,k)");
    if (vertex < n_) {
        int i = vertex;
        return {outer_edge(i - 1), outer_edge(i), spoke_edge(i)};
    }
    int i = vertex - n_;
    // at v_i: edge to v_{k+i} is inner_edge(i), edge to v_{2k+i} is
    // inner_edge(i + 2k) since inner_edge(m) = {v_m, v_{m+k}}
    return {inner_edge(i), inner_edge(i + 2 * k_), spoke_edge(i)};
}

std::string GPGraph::vertex_name(int id) const {
    std::ostringstream s;
    if (id < n_)
        s << 'u' << id;
    else
        s << 'v' << (id - n_);
    return s.str();
}

std::string export_graph(const GPGraph& g, ExportFormat format) {
    if (format == ExportFormat::json) {
        nlohmann::ordered_json j;
        j["n"] = g.n();
        j["k"] = g.k();
        auto verts = nlohmann::ordered_json::array();
        for (int id = 0; id < g.vertex_count(); id++) verts.push_back(g.vertex_name(id));
        j["vertices"] = std::move(verts);
        auto edges = nlohmann::ordered_json::array();
        for (const Edge& e : g.edges()) {
            nlohmann::ordered_json je;
            je["a"] = g.vertex_name(e.a);
            je["b"] = g.vertex_name(e.b);
            je["role"] = role_name(e.role);
            edges.push_back(std::move(je));
        }
        j["edges"] = std::move(edges);
        return j.dump() + "\n";
    }
    std::ostringstream out;
    out << "graph GP_" << g.n() << "_" << g.k() << " {\n";
    for (int id = 0; id < g.vertex_count(); id++) out << "  " << g.vertex_name(id) << ";\n";
    for (const Edge& e : g.edges()) {
        out << "  " << g.vertex_name(e.a) << " -- " << g.vertex_name(e.b)
            << " [role=" << role_name(e.role) << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace gpf
