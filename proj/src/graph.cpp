#include "moorelab/graph.hpp"

#include <algorithm>

#include "moorelab/error.hpp"

namespace moorelab {

std::string VertexLabel::str() const
{
    const auto pair = [this](char open, char close) {
        return std::string(1, open) + std::to_string(first) + "," + std::to_string(second) + close;
    };
    switch (kind) {
        case Kind::InfinityPoint: return "P";
        case Kind::InfinityLine: return "L";
        case Kind::LinePoint: return "P_" + std::to_string(first);
        case Kind::PointLine: return "L_" + std::to_string(first);
        case Kind::AffinePoint: return pair('(', ')');
        case Kind::AffineLine: return pair('[', ']');
        case Kind::HatPoint: return "^" + pair('(', ')');
        case Kind::HatLine: return "^" + pair('[', ']');
        case Kind::Q0: return "Q_0";
        case Kind::M0: return "M_0";
        case Kind::Anonymous: return "v" + std::to_string(first);
    }
    return "?";
}

Graph::Graph(std::size_t n)
{
    for (std::size_t v = 0; v < n; ++v)
        add_vertex(VertexLabel::anonymous(static_cast<std::int64_t>(v)));
}

Vertex Graph::add_vertex(const VertexLabel& label, std::optional<Side> side)
{
    const auto v = static_cast<Vertex>(adjacency_.size());
    if (!index_.emplace(label, v).second)
        throw Error(ErrorCode::DuplicateLabel, "label " + label.str() + " already present");
    adjacency_.emplace_back();
    labels_.push_back(label);
    sides_.push_back(side);
    has_sides_ = has_sides_ || side.has_value();
    return v;
}

void Graph::check_vertex(Vertex v) const
{
    if (v >= adjacency_.size())
        throw Error(ErrorCode::VertexOutOfRange,
                    "vertex " + std::to_string(v) + " not in graph of order " + std::to_string(order()));
}

void Graph::add_edge(Vertex u, Vertex v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw Error(ErrorCode::SelfLoop, "loop at " + vertex_name(u));
    if (sides_[u] && sides_[v] && *sides_[u] == *sides_[v])
        throw Error(ErrorCode::SideViolation, "edge " + vertex_name(u) + " -- " + vertex_name(v) +
                                                  " joins vertices on the same side");
    auto& nu = adjacency_[u];
    auto pos = std::lower_bound(nu.begin(), nu.end(), v);
    if (pos != nu.end() && *pos == v)
        throw Error(ErrorCode::DuplicateEdge, "edge " + vertex_name(u) + " -- " + vertex_name(v) + " already present");
    nu.insert(pos, v);
    auto& nv = adjacency_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
}

void Graph::remove_edge(Vertex u, Vertex v)
{
    if (!has_edge(u, v))
        throw Error(ErrorCode::MissingEdge, "no edge " + vertex_name(u) + " -- " + vertex_name(v));
    auto& nu = adjacency_[u];
    nu.erase(std::lower_bound(nu.begin(), nu.end(), v));
    auto& nv = adjacency_[v];
    nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
    --edge_count_;
}

bool Graph::has_edge(Vertex u, Vertex v) const
{
    check_vertex(u);
    check_vertex(v);
    const auto& nu = adjacency_[u];
    return std::binary_search(nu.begin(), nu.end(), v);
}

std::span<const Vertex> Graph::neighbors(Vertex v) const
{
    check_vertex(v);
    return adjacency_[v];
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex w : adjacency_[u])
            if (u < w)
                out.emplace_back(u, w);
    return out;
}

const VertexLabel& Graph::label(Vertex v) const
{
    check_vertex(v);
    return labels_[v];
}

std::optional<Vertex> Graph::find(const VertexLabel& label) const
{
    auto it = index_.find(label);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

Vertex Graph::at(const VertexLabel& label) const
{
    if (auto v = find(label))
        return *v;
    throw Error(ErrorCode::VertexOutOfRange, "no vertex labelled " + label.str());
}

std::optional<Side> Graph::side(Vertex v) const
{
    check_vertex(v);
    return sides_[v];
}

void Graph::set_sides(const std::vector<Side>& sides)
{
    if (sides.size() != order())
        throw Error(ErrorCode::SideViolation, "side vector length does not match order");
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex w : adjacency_[u])
            if (sides[u] == sides[w])
                throw Error(ErrorCode::SideViolation,
                            "edge " + vertex_name(u) + " -- " + vertex_name(w) + " joins vertices on the same side");
    sides_.assign(sides.begin(), sides.end());
    has_sides_ = !sides.empty();
}

Graph permute(const Graph& g, std::span<const Vertex> perm)
{
    const std::size_t n = g.order();
    if (perm.size() != n)
        throw Error(ErrorCode::VertexOutOfRange, "permutation length does not match order");
    std::vector<Vertex> inverse(n, n);
    for (Vertex v = 0; v < n; ++v) {
        if (perm[v] >= n || inverse[perm[v]] != n)
            throw Error(ErrorCode::VertexOutOfRange, "not a permutation");
        inverse[perm[v]] = v;
    }
    Graph out;
    for (Vertex w = 0; w < n; ++w)
        out.add_vertex(g.label(inverse[w]), g.side(inverse[w]));
    for (const auto& [u, v] : g.edges())
        out.add_edge(perm[u], perm[v]);
    return out;
}

}  // namespace moorelab
