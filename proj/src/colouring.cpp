#include "gpf/colouring.hpp"

#include "gpf/errors.hpp"

#include <algorithm>

namespace gpf {

EdgeColouring EdgeColouring::outer_only(const GPGraph& g, const std::vector<int>& outer) {
    if (static_cast<int>(outer.size()) != g.n())
        throw InvalidParameters("outer_only: need exactly one colour per outer edge");
    EdgeColouring c(g);
    for (int m = 0; m < g.n(); m++) c.set(g.outer_edge(m), outer[static_cast<size_t>(m)]);
    return c;
}

bool EdgeColouring::total() const {
    return std::all_of(colours_.begin(), colours_.end(), [](int c) { return c != 0; });
}

bool EdgeColouring::outer_complete() const {
    for (int m = 0; m < graph_->n(); m++)
        if (colour(graph_->outer_edge(m)) == 0) return false;
    return true;
}

bool EdgeColouring::proper() const {
    for (int w = 0; w < graph_->vertex_count(); w++) {
        const auto& inc = graph_->incident(w);
        for (int i = 0; i < 3; i++)
            for (int j = i + 1; j < 3; j++) {
                int ci = colour(inc[static_cast<size_t>(i)]);
                int cj = colour(inc[static_cast<size_t>(j)]);
                if (ci != 0 && ci == cj) return false;
            }
    }
    return true;
}

std::vector<int> EdgeColouring::outer_colours() const {
    std::vector<int> out(static_cast<size_t>(graph_->n()));
    for (int m = 0; m < graph_->n(); m++) out[static_cast<size_t>(m)] = colour(graph_->outer_edge(m));
    return out;
}

}  // namespace gpf
