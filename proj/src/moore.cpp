#include "moorelab/moore.hpp"

#include <cassert>
#include <limits>

#include "moorelab/error.hpp"
#include "moorelab/metrics.hpp"

namespace moorelab {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(ErrorCode::Overflow, "Moore bound exceeds 64-bit range");
    return r;
}

// 2 * (1 + r + r^2 + ... + r^(levels-1))
std::int64_t two_sided_tree(std::int64_t r, int levels)
{
    std::int64_t sum = 0, term = 1;
    for (int i = 0; i < levels; ++i) {
        if (__builtin_add_overflow(sum, term, &sum))
            throw Error(ErrorCode::Overflow, "Moore bound exceeds 64-bit range");
        if (i + 1 < levels)
            term = checked_mul(term, r);
    }
    return checked_mul(sum, 2);
}

std::int64_t ipow(std::int64_t base, int exp)
{
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i)
        r = checked_mul(r, base);
    return r;
}

void require_shape(const Graph& g, Vertex u, Vertex v, int girth, int& delta)
{
    if (girth < 4 || girth % 2 != 0)
        throw Error(ErrorCode::PreconditionViolated, "girth must be even and >= 4");
    if (!g.has_edge(u, v))
        throw Error(ErrorCode::PreconditionViolated, g.vertex_name(u) + " -- " + g.vertex_name(v) + " is not an edge");
    const auto reg = regular_degree(g);
    if (!reg || *reg < 2)
        throw Error(ErrorCode::PreconditionViolated, "graph is not regular of degree >= 2");
    delta = static_cast<int>(*reg);
    if (static_cast<std::int64_t>(g.order()) != moore_order(delta, girth))
        throw Error(ErrorCode::PreconditionViolated, "order " + std::to_string(g.order()) +
                                                         " differs from the Moore bound " +
                                                         std::to_string(moore_order(delta, girth)));
    if (!is_connected(g))
        throw Error(ErrorCode::PreconditionViolated, "graph is disconnected");
    if (!is_bipartite(g))
        throw Error(ErrorCode::PreconditionViolated, "graph is not bipartite");
}

bool full_levels(const std::vector<int>& from, const std::vector<int>& to, int depth, int delta)
{
    std::vector<std::int64_t> count(static_cast<std::size_t>(depth) + 1, 0);
    for (std::size_t w = 0; w < from.size(); ++w)
        if (from[w] <= depth && to[w] == from[w] + 1)
            ++count[static_cast<std::size_t>(from[w])];
    std::int64_t expected = 1;
    for (int k = 0; k <= depth; ++k) {
        if (count[static_cast<std::size_t>(k)] != expected)
            return false;
        expected *= delta - 1;
    }
    return true;
}

}  // namespace

std::int64_t moore_bound_diameter(int delta, int d)
{
    if (delta < 2)
        throw Error(ErrorCode::DegreeTooSmall, "degree " + std::to_string(delta) + " < 2");
    if (d < 1)
        throw Error(ErrorCode::PreconditionViolated, "diameter must be >= 1");
    if (delta == 2)
        return 2 * static_cast<std::int64_t>(d);
    const std::int64_t r = delta - 1;
    return checked_mul(2, (ipow(r, d) - 1) / (r - 1));
}

std::int64_t moore_bound_girth(int delta, int g)
{
    if (delta < 3)
        throw Error(ErrorCode::DegreeTooSmall, "degree " + std::to_string(delta) + " < 3");
    if (g % 2 != 0)
        throw Error(ErrorCode::OddGirth, "girth " + std::to_string(g) + " is odd");
    if (g < 4)
        throw Error(ErrorCode::PreconditionViolated, "girth must be >= 4");
    // sum over the levels of the Moore tree hanging from an edge
    return two_sided_tree(delta - 1, g / 2);
}

std::int64_t moore_order(int delta, int g)
{
    if (delta == 2) {
        if (g % 2 != 0)
            throw Error(ErrorCode::OddGirth, "girth " + std::to_string(g) + " is odd");
        if (g < 4)
            throw Error(ErrorCode::PreconditionViolated, "girth must be >= 4");
        return g;
    }
    return moore_bound_girth(delta, g);
}

MooreParams MooreParams::by_diameter(int delta, int d)
{
    return {delta, Mode::ByDiameter, d, moore_bound_diameter(delta, d)};
}

MooreParams MooreParams::by_girth(int delta, int g)
{
    return {delta, Mode::ByGirth, g, moore_order(delta, g)};
}

bool is_moore_tree_edge(const Graph& g, Vertex u, Vertex v, int girth)
{
    int delta = 0;
    require_shape(g, u, v, girth, delta);
    const int depth = (girth - 2) / 2;
    const auto du = bfs_distances(g, u);
    const auto dv = bfs_distances(g, v);
    const bool result = full_levels(du, dv, depth, delta) && full_levels(dv, du, depth, delta);
#ifndef NDEBUG
    assert(result == is_moore_tree_edge_explicit(g, u, v, girth));
#endif
    return result;
}

bool is_moore_tree_edge_explicit(const Graph& g, Vertex u, Vertex v, int girth)
{
    int delta = 0;
    require_shape(g, u, v, girth, delta);
    const int depth = (girth - 2) / 2;
    const std::size_t n = g.order();

    // distance to the root edge
    std::vector<int> level(n, kInfinity);
    std::vector<Vertex> queue{u, v};
    level[u] = level[v] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex x = queue[head];
        for (Vertex y : g.neighbors(x)) {
            if (level[y] == kInfinity) {
                level[y] = level[x] + 1;
                queue.push_back(y);
            }
        }
    }
    for (Vertex x = 0; x < n; ++x) {
        if (level[x] > depth)
            return false;
        std::size_t parents = 0, children = 0;
        for (Vertex y : g.neighbors(x)) {
            if (level[y] == level[x] - 1)
                ++parents;
            else if (level[y] == level[x] + 1)
                ++children;
        }
        if (x == u || x == v) {
            if (children != static_cast<std::size_t>(delta - 1))
                return false;
            continue;
        }
        if (parents != 1)
            return false;
        if (level[x] < depth && children != static_cast<std::size_t>(delta - 1))
            return false;
    }
    return true;
}

std::optional<Edge> find_moore_tree_edge(const Graph& g, int delta, int girth)
{
    if (delta < 2 || girth < 4 || girth % 2 != 0)
        return std::nullopt;
    const auto reg = regular_degree(g);
    if (!reg || static_cast<int>(*reg) != delta)
        return std::nullopt;
    if (static_cast<std::int64_t>(g.order()) != moore_order(delta, girth))
        return std::nullopt;
    if (!is_connected(g) || !is_bipartite(g))
        return std::nullopt;
    for (const auto& [u, v] : g.edges())
        if (is_moore_tree_edge(g, u, v, girth))
            return Edge{u, v};
    return std::nullopt;
}

bool is_local_bipartite_moore(const Graph& g, int delta, int girth)
{
    return find_moore_tree_edge(g, delta, girth).has_value();
}

}  // namespace moorelab
