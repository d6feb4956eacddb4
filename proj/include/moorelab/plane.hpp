#pragma once

#include <cstdint>

#include "moorelab/field.hpp"
#include "moorelab/graph.hpp"
#include "moorelab/report.hpp"

namespace moorelab {

/// Incidence graph of PG(2, q) in affine coordinates.
///
/// Points: P (vertical direction), P_m (direction of slope m), affine (x,y).
/// Lines:  L (line at infinity), L_x (vertical line through x), [m,b] (y = mx + b).
///
/// Vertex order: P, L, P_0..P_{q-1}, L_0..L_{q-1}, (x,y) with x major,
/// [m,b] with m major. Field elements appear by index.
struct PlaneModel {
    GaloisField field;
    Graph graph;

    std::uint32_t q() const noexcept { return field.order(); }

    Vertex infinity_point() const { return graph.at(VertexLabel::infinity_point()); }
    Vertex infinity_line() const { return graph.at(VertexLabel::infinity_line()); }
    Vertex line_point(std::uint32_t i) const { return graph.at(VertexLabel::line_point(i)); }
    Vertex point_line(std::uint32_t i) const { return graph.at(VertexLabel::point_line(i)); }
    Vertex point(std::uint32_t x, std::uint32_t y) const { return graph.at(VertexLabel::affine_point(x, y)); }
    Vertex line(std::uint32_t m, std::uint32_t b) const { return graph.at(VertexLabel::affine_line(m, b)); }
};

/// Throws NotAPrimePower.
PlaneModel build_projective_plane(std::uint64_t q);

/// Regularity q+1, order 2(q^2+q+1), girth 6, diameter 3, bipartite,
/// connected. Failed checks list offending vertices.
Report verify_moore_cage(const Graph& g, std::uint64_t q);
Report verify_moore_cage(const PlaneModel& model);

}  // namespace moorelab
