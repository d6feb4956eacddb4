#include "moorelab/metrics.hpp"

#include <algorithm>
#include <deque>

#include "moorelab/error.hpp"

namespace moorelab {

namespace {

// BFS that ignores the single edge {skip_a, skip_b}; stops once `stop` is
// settled.
int distance_avoiding_edge(const Graph& g, Vertex from, Vertex to, Vertex skip_a, Vertex skip_b)
{
    std::vector<int> dist(g.order(), kInfinity);
    std::deque<Vertex> queue{from};
    dist[from] = 0;
    while (!queue.empty()) {
        const Vertex x = queue.front();
        queue.pop_front();
        for (Vertex y : g.neighbors(x)) {
            if ((x == skip_a && y == skip_b) || (x == skip_b && y == skip_a))
                continue;
            if (dist[y] != kInfinity)
                continue;
            dist[y] = dist[x] + 1;
            if (y == to)
                return dist[y];
            queue.push_back(y);
        }
    }
    return kInfinity;
}

int local_girth_edge_deletion(const Graph& g, Vertex v)
{
    int best = kInfinity;
    for (Vertex u : g.neighbors(v)) {
        const int d = distance_avoiding_edge(g, v, u, v, u);
        if (d != kInfinity)
            best = std::min(best, d + 1);
    }
    return best;
}

int local_girth_branch_tagging(const Graph& g, Vertex v)
{
    const std::size_t n = g.order();
    std::vector<int> dist(n, kInfinity);
    std::vector<Vertex> branch(n, static_cast<Vertex>(n));
    std::deque<Vertex> queue;
    dist[v] = 0;
    for (Vertex u : g.neighbors(v)) {
        dist[u] = 1;
        branch[u] = u;
        queue.push_back(u);
    }
    int best = kInfinity;
    while (!queue.empty()) {
        const Vertex x = queue.front();
        queue.pop_front();
        // every later candidate has length >= 2*dist[x] + 1
        if (best != kInfinity && 2 * dist[x] + 1 >= best)
            break;
        for (Vertex y : g.neighbors(x)) {
            if (y == v)
                continue;
            if (dist[y] == kInfinity) {
                dist[y] = dist[x] + 1;
                branch[y] = branch[x];
                queue.push_back(y);
            } else if (branch[y] != branch[x]) {
                best = std::min(best, dist[x] + dist[y] + 1);
            }
        }
    }
    return best;
}

}  // namespace

std::vector<int> bfs_distances(const Graph& g, Vertex source)
{
    g.check_vertex(source);
    std::vector<int> dist(g.order(), kInfinity);
    std::vector<Vertex> queue;
    queue.reserve(g.order());
    queue.push_back(source);
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex x = queue[head];
        for (Vertex y : g.neighbors(x)) {
            if (dist[y] == kInfinity) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

int eccentricity(const Graph& g, Vertex v)
{
    const auto dist = bfs_distances(g, v);
    const int ecc = *std::max_element(dist.begin(), dist.end());
    if (ecc == kInfinity)
        throw Error(ErrorCode::Disconnected, "graph is disconnected");
    return ecc;
}

int diameter(const Graph& g)
{
    if (g.order() == 0)
        return 0;
    int best = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        best = std::max(best, eccentricity(g, v));
    return best;
}

int girth(const Graph& g)
{
    // Classic all-roots BFS: a non-tree edge xy closes a closed walk of
    // length dist[x] + dist[y] + 1 containing a cycle no longer than that,
    // and the root on a shortest cycle attains it.
    const std::size_t n = g.order();
    int best = kInfinity;
    std::vector<int> dist(n);
    std::vector<Vertex> parent(n);
    std::vector<Vertex> queue;
    for (Vertex root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), kInfinity);
        queue.assign(1, root);
        dist[root] = 0;
        parent[root] = root;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex x = queue[head];
            if (best != kInfinity && 2 * dist[x] + 1 >= best)
                break;
            for (Vertex y : g.neighbors(x)) {
                if (dist[y] == kInfinity) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if (parent[x] != y) {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
    }
    return best;
}

int local_girth(const Graph& g, Vertex v, LocalGirthMethod method)
{
    g.check_vertex(v);
    switch (method) {
        case LocalGirthMethod::EdgeDeletion: return local_girth_edge_deletion(g, v);
        case LocalGirthMethod::BranchTagging: return local_girth_branch_tagging(g, v);
    }
    return kInfinity;
}

std::vector<std::pair<int, std::size_t>> GirthVector::compressed() const
{
    std::map<int, std::size_t, std::greater<>> counts;
    for (int x : local)
        ++counts[x];
    return {counts.begin(), counts.end()};
}

std::string GirthVector::str() const
{
    std::string out;
    for (const auto& [value, count] : compressed()) {
        if (!out.empty())
            out += ",";
        out += (value == kInfinity ? std::string("inf") : std::to_string(value)) + "^" + std::to_string(count);
    }
    return out;
}

std::vector<int> GirthVector::expand(const std::vector<std::pair<int, std::size_t>>& compressed)
{
    std::vector<int> out;
    for (const auto& [value, count] : compressed)
        out.insert(out.end(), count, value);
    return out;
}

GirthVector girth_vector(const Graph& g, int target, LocalGirthMethod method)
{
    GirthVector gv;
    gv.target = target;
    gv.local.reserve(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        gv.local.push_back(local_girth(g, v, method));
    return gv;
}

std::optional<std::vector<Side>> bipartition(const Graph& g)
{
    const std::size_t n = g.order();
    std::vector<int> colour(n, -1);
    std::vector<Vertex> queue;
    for (Vertex start = 0; start < n; ++start) {
        if (colour[start] != -1)
            continue;
        colour[start] = 0;
        queue.assign(1, start);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex x = queue[head];
            for (Vertex y : g.neighbors(x)) {
                if (colour[y] == -1) {
                    colour[y] = 1 - colour[x];
                    queue.push_back(y);
                } else if (colour[y] == colour[x]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<Side> sides(n);
    for (Vertex v = 0; v < n; ++v)
        sides[v] = colour[v] == 0 ? Side::Point : Side::Line;
    return sides;
}

bool is_bipartite(const Graph& g)
{
    return bipartition(g).has_value();
}

bool assign_bipartition(Graph& g)
{
    auto sides = bipartition(g);
    if (!sides)
        return false;
    g.set_sides(*sides);
    return true;
}

bool is_connected(const Graph& g)
{
    if (g.order() == 0)
        return true;
    const auto dist = bfs_distances(g, 0);
    return std::find(dist.begin(), dist.end(), kInfinity) == dist.end();
}

std::vector<std::size_t> degree_sequence(const Graph& g)
{
    std::vector<std::size_t> out;
    out.reserve(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        out.push_back(g.degree(v));
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::map<std::size_t, std::size_t> degree_histogram(const Graph& g)
{
    std::map<std::size_t, std::size_t> out;
    for (Vertex v = 0; v < g.order(); ++v)
        ++out[g.degree(v)];
    return out;
}

std::optional<std::size_t> regular_degree(const Graph& g)
{
    const auto hist = degree_histogram(g);
    if (hist.size() != 1)
        return std::nullopt;
    return hist.begin()->first;
}

std::vector<std::vector<int>> distance_matrix(const Graph& g)
{
    std::vector<std::vector<int>> out;
    out.reserve(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        out.push_back(bfs_distances(g, v));
    return out;
}

}  // namespace moorelab
