#ifndef GPF_COLOURING_HPP
#define GPF_COLOURING_HPP

#include "gpf/gp_graph.hpp"

#include <vector>

namespace gpf {

// A (partial) edge colouring of a GPGraph; colour 0 means unassigned.
// Ordinary proper colourings use {1,2,3}; the list-colouring solver stores
// arbitrary positive palette colours in the same container.  Holds a
// reference to the graph, which must outlive the colouring.
class EdgeColouring {
public:
    explicit EdgeColouring(const GPGraph& g)
        : graph_(&g), colours_(static_cast<size_t>(g.edge_count()), 0) {}

    // Colouring of the outer cycle only; outer[m] is the colour of the edge
    // {u_m, u_{m+1}}; outer.size() must equal n.
    static EdgeColouring outer_only(const GPGraph& g, const std::vector<int>& outer);

    const GPGraph& graph() const { return *graph_; }

    int colour(int edge_id) const { return colours_[static_cast<size_t>(edge_id)]; }
    void set(int edge_id, int colour) { colours_[static_cast<size_t>(edge_id)] = colour; }

    bool total() const;
    bool outer_complete() const;

    // No two assigned edges sharing a vertex have equal colour.
    bool proper() const;

    std::vector<int> outer_colours() const;

    bool operator==(const EdgeColouring& o) const { return colours_ == o.colours_; }

private:
    const GPGraph* graph_;
    std::vector<int> colours_;
};

}  // namespace gpf

#endif
