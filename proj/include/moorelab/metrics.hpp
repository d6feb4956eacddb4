#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "moorelab/graph.hpp"

namespace moorelab {

/// Distance / cycle length sentinel: unreachable vertex or acyclic vertex.
/// Compares greater than every finite value.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Throws Disconnected if some vertex is unreachable.
int eccentricity(const Graph& g, Vertex v);
int diameter(const Graph& g);

/// Length of the shortest cycle, kInfinity for forests.
int girth(const Graph& g);

enum class LocalGirthMethod {
    /// For each neighbour u: 1 + dist(v, u) in G - vu. Exact.
    EdgeDeletion,
    /// One BFS from v, first-hop branch tags, minimum over cross-branch edges.
    BranchTagging,
};

int local_girth(const Graph& g, Vertex v, LocalGirthMethod method = LocalGirthMethod::EdgeDeletion);

/// Per-vertex local girths measured against a target girth.
struct GirthVector {
    int target = 0;
    std::vector<int> local;  // indexed by vertex

    /// (girth, multiplicity) pairs, girth strictly decreasing; kInfinity first.
    std::vector<std::pair<int, std::size_t>> compressed() const;
    /// "6^6,4^8" style; infinity renders as "inf".
    std::string str() const;
    /// Sorted multiset regenerated from compressed().
    static std::vector<int> expand(const std::vector<std::pair<int, std::size_t>>& compressed);
};

GirthVector girth_vector(const Graph& g, int target,
                         LocalGirthMethod method = LocalGirthMethod::EdgeDeletion);

/// Two-colouring by BFS; nullopt if an odd cycle exists. Vertices in each
/// component are coloured starting from Point at its smallest vertex.
std::optional<std::vector<Side>> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);
/// Stores the bipartition into g's side fields; returns false when none exists.
bool assign_bipartition(Graph& g);

bool is_connected(const Graph& g);

/// Degrees sorted in non-increasing order.
std::vector<std::size_t> degree_sequence(const Graph& g);
/// degree -> count
std::map<std::size_t, std::size_t> degree_histogram(const Graph& g);
std::optional<std::size_t> regular_degree(const Graph& g);

/// All-pairs BFS distances, row per source.
std::vector<std::vector<int>> distance_matrix(const Graph& g);

}  // namespace moorelab
