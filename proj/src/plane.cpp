#include "moorelab/plane.hpp"

#include <algorithm>

#include "moorelab/metrics.hpp"

namespace moorelab {

PlaneModel build_projective_plane(std::uint64_t q_order)
{
    PlaneModel model{GaloisField(q_order), Graph()};
    const GaloisField& f = model.field;
    Graph& g = model.graph;
    const std::uint32_t q = f.order();

    const Vertex p_inf = g.add_vertex(VertexLabel::infinity_point(), Side::Point);
    const Vertex l_inf = g.add_vertex(VertexLabel::infinity_line(), Side::Line);
    std::vector<Vertex> line_points(q), point_lines(q);
    for (std::uint32_t i = 0; i < q; ++i)
        line_points[i] = g.add_vertex(VertexLabel::line_point(i), Side::Point);
    for (std::uint32_t i = 0; i < q; ++i)
        point_lines[i] = g.add_vertex(VertexLabel::point_line(i), Side::Line);
    const Vertex first_point = static_cast<Vertex>(g.order());
    for (std::uint32_t x = 0; x < q; ++x)
        for (std::uint32_t y = 0; y < q; ++y)
            g.add_vertex(VertexLabel::affine_point(x, y), Side::Point);
    const Vertex first_line = static_cast<Vertex>(g.order());
    for (std::uint32_t m = 0; m < q; ++m)
        for (std::uint32_t b = 0; b < q; ++b)
            g.add_vertex(VertexLabel::affine_line(m, b), Side::Line);

    const auto affine_point = [&](std::uint32_t x, std::uint32_t y) { return first_point + x * q + y; };
    const auto affine_line = [&](std::uint32_t m, std::uint32_t b) { return first_line + m * q + b; };

    g.add_edge(p_inf, l_inf);
    for (std::uint32_t i = 0; i < q; ++i) {
        g.add_edge(p_inf, point_lines[i]);
        g.add_edge(l_inf, line_points[i]);
        for (std::uint32_t t = 0; t < q; ++t) {
            g.add_edge(point_lines[i], affine_point(i, t));
            g.add_edge(line_points[i], affine_line(i, t));
        }
    }
    for (std::uint32_t m = 0; m < q; ++m)
        for (std::uint32_t b = 0; b < q; ++b)
            for (std::uint32_t x = 0; x < q; ++x)
                g.add_edge(affine_line(m, b), affine_point(x, f.add(f.mul(m, x), b)));
    return model;
}

Report verify_moore_cage(const Graph& g, std::uint64_t q)
{
    Report report;
    const std::size_t degree = q + 1;
    const std::size_t order = 2 * (q * q + q + 1);

    std::vector<std::string> irregular;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != degree)
            irregular.push_back(g.vertex_name(v));
    report.add("regular", irregular.empty(), "expected degree " + std::to_string(degree), irregular);
    report.add("order", g.order() == order,
               "order " + std::to_string(g.order()) + ", expected " + std::to_string(order));

    const bool connected = is_connected(g);
    std::vector<std::string> unreachable;
    if (!connected && g.order() > 0) {
        const auto dist = bfs_distances(g, 0);
        for (Vertex v = 0; v < g.order(); ++v)
            if (dist[v] == kInfinity)
                unreachable.push_back(g.vertex_name(v));
    }
    report.add("connected", connected, {}, unreachable);
    report.add("bipartite", is_bipartite(g));

    const GirthVector gv = girth_vector(g, 6);
    std::vector<std::string> short_cycles;
    for (Vertex v = 0; v < g.order(); ++v)
        if (gv.local[v] != 6)
            short_cycles.push_back(g.vertex_name(v));
    const int gg = gv.local.empty() ? kInfinity : *std::min_element(gv.local.begin(), gv.local.end());
    report.add("girth", gg == 6 && short_cycles.empty(),
               "girth " + (gg == kInfinity ? std::string("inf") : std::to_string(gg)) + ", local " + gv.str(),
               short_cycles);

    if (connected) {
        std::vector<std::string> far;
        int diam = 0;
        for (Vertex v = 0; v < g.order(); ++v) {
            const int e = eccentricity(g, v);
            diam = std::max(diam, e);
            if (e != 3)
                far.push_back(g.vertex_name(v));
        }
        report.add("diameter", diam == 3 && far.empty(), "diameter " + std::to_string(diam), far);
    } else {
        report.add("diameter", false, "disconnected");
    }
    return report;
}

Report verify_moore_cage(const PlaneModel& model)
{
    return verify_moore_cage(model.graph, model.q());
}

}  // namespace moorelab
