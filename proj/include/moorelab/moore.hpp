#pragma once

#include <cstdint>
#include <optional>

#include "moorelab/graph.hpp"

namespace moorelab {

/// Upper bound on the order of a bipartite graph with maximum degree delta
/// and diameter d: 2((delta-1)^d - 1)/(delta-2), or 2d when delta = 2.
/// Throws DegreeTooSmall (delta < 2), PreconditionViolated (d < 1), Overflow.
std::int64_t moore_bound_diameter(int delta, int d);

/// Lower bound on the order of a bipartite graph with degree delta >= 3 and
/// even girth g >= 4: 2((delta-1)^{g/2} - 1)/(delta-2).
/// Throws DegreeTooSmall, OddGirth, Overflow.
std::int64_t moore_bound_girth(int delta, int g);

/// Order of a bipartite Moore graph for (delta, g), delta >= 2; for delta = 2
/// this is g (the cycle C_g).
std::int64_t moore_order(int delta, int g);

struct MooreParams {
    enum class Mode { ByDiameter, ByGirth };

    int delta = 0;
    Mode mode = Mode::ByDiameter;
    int value = 0;  // d or g
    std::int64_t bound = 0;

    static MooreParams by_diameter(int delta, int d);
    static MooreParams by_girth(int delta, int g);
};

/// Level-set test for the bipartite Moore tree hanging from edge uv: for
/// k = 0..(g-2)/2 exactly (delta-1)^k vertices lie at distance k from u and
/// k+1 from v, and symmetrically.
///
/// Throws PreconditionViolated unless g is connected, delta-regular
/// (delta >= 2), bipartite, uv is an edge and the order is moore_order(delta, g).
bool is_moore_tree_edge(const Graph& g, Vertex u, Vertex v, int girth);

/// Redundant explicit form of the same test: BFS from the edge {u,v} where
/// every vertex below depth (g-2)/2 has exactly delta-1 children and every
/// non-root vertex exactly one parent. Same preconditions.
bool is_moore_tree_edge_explicit(const Graph& g, Vertex u, Vertex v, int girth);

/// Connected, delta-regular, bipartite, order moore_order(delta, g), and at
/// least one edge passes is_moore_tree_edge. Never throws on graph shape.
bool is_local_bipartite_moore(const Graph& g, int delta, int girth);

/// First edge (in edges() order) passing the Moore-tree test, if any.
std::optional<Edge> find_moore_tree_edge(const Graph& g, int delta, int girth);

}  // namespace moorelab
