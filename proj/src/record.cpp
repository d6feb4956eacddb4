#include "moorelab/record.hpp"

#include <algorithm>

#include "moorelab/error.hpp"
#include "moorelab/metrics.hpp"
#include "moorelab/moore.hpp"

namespace moorelab {

const char* to_string(MatchingRule rule) noexcept
{
    switch (rule) {
        case MatchingRule::None: return "none";
        case MatchingRule::DegreeDriven: return "degree";
        case MatchingRule::LiteralText: return "literal";
    }
    return "?";
}

std::vector<Vertex> RecordModel::added_vertices() const
{
    std::vector<Vertex> out;
    for (Vertex v = static_cast<Vertex>(base.graph.order()); v < graph.order(); ++v)
        out.push_back(v);
    return out;
}

namespace {

std::uint64_t require_record_q(std::uint64_t q)
{
    if (!is_prime_power(q))
        throw Error(ErrorCode::NotAPrimePower, std::to_string(q) + " is not a prime power");
    if (q < 3)
        throw Error(ErrorCode::QTooSmall, "q = " + std::to_string(q) + " has no element outside {0,1}");
    return q;
}

}  // namespace

RecordModel build_hq(std::uint64_t q_order, std::optional<std::uint32_t> a_index)
{
    require_record_q(q_order);
    const std::uint32_t a = a_index.value_or(2);
    if (a < 2 || a >= q_order)
        throw Error(ErrorCode::InvalidA, "a must be a field element other than 0 and 1, got index " + std::to_string(a));

    PlaneModel base = build_projective_plane(q_order);
    const std::uint32_t q = base.q();
    Graph g = base.graph;

    const Edge alpha{base.point(0, a), base.line(0, a)};
    g.remove_edge(alpha.first, alpha.second);

    const std::uint32_t js[3] = {0, 1, a};
    const Vertex q0 = g.add_vertex(VertexLabel::q0(), Side::Point);
    const Vertex m0 = g.add_vertex(VertexLabel::m0(), Side::Line);
    Vertex hat_point[3], hat_line[3];
    for (int s = 0; s < 3; ++s)
        hat_point[s] = g.add_vertex(VertexLabel::hat_point(js[s]), Side::Point);
    for (int s = 0; s < 3; ++s)
        hat_line[s] = g.add_vertex(VertexLabel::hat_line(js[s]), Side::Line);

    g.add_edge(base.infinity_point(), m0);
    g.add_edge(base.infinity_line(), q0);
    for (int s = 0; s < 3; ++s) {
        g.add_edge(q0, hat_line[s]);
        g.add_edge(m0, hat_point[s]);
    }
    for (std::uint32_t i = 2; i < q; ++i) {
        g.add_edge(q0, base.line(0, i));
        g.add_edge(m0, base.point(0, i));
    }
    g.add_edge(base.line_point(0), hat_line[2]);
    g.add_edge(base.point_line(0), hat_point[2]);
    g.add_edge(hat_point[0], hat_line[1]);
    g.add_edge(hat_point[1], hat_line[0]);
    for (int s = 0; s < 3; ++s) {
        for (std::uint32_t t = 0; t < q; ++t) {
            g.add_edge(hat_point[s], base.line(t, js[s]));
            g.add_edge(hat_line[s], base.point(t, js[s]));
        }
    }

    FieldElement a_elem = base.field.element(a);
    return RecordModel{std::move(base), std::move(a_elem), std::move(g), alpha, MatchingRule::None, {}};
}

RecordModel build_rq(std::uint64_t q_order, std::optional<std::uint32_t> a_index, MatchingRule rule)
{
    RecordModel model = build_hq(q_order, a_index);
    if (rule == MatchingRule::None)
        return model;
    model.rule = rule;

    const PlaneModel& base = model.base;
    Graph& g = model.graph;
    const std::uint32_t q = base.q();
    const std::uint32_t a = model.a.index();

    // The degree of the H_q vertices, fixed before any pair is added.
    std::vector<std::size_t> deg(g.order());
    std::size_t max_deg = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        deg[v] = g.degree(v);
        max_deg = std::max(max_deg, deg[v]);
    }
    const auto wants_repair = [&](Vertex v) {
        return rule == MatchingRule::DegreeDriven ? deg[v] < max_deg : deg[v] == q + 1;
    };

    std::vector<Edge> pairs;
    for (std::uint32_t i = 0; i < q; ++i) {
        if (rule == MatchingRule::LiteralText && (i == 0 || i == 1 || i == a))
            continue;
        const Vertex p = base.line_point(i);
        if (wants_repair(p))
            pairs.emplace_back(p, base.point_line(i));
    }
    for (std::uint32_t x = 0; x < q; ++x)
        for (std::uint32_t y = 0; y < q; ++y) {
            const Vertex pt = base.point(x, y);
            if (wants_repair(pt))
                pairs.emplace_back(pt, base.line(x, y));
        }

    for (const auto& [u, v] : pairs) {
        if (g.has_edge(u, v))
            throw Error(ErrorCode::MatchingConflict, g.vertex_name(u) + " -- " + g.vertex_name(v) + " is already an edge");
        if (!wants_repair(v))
            throw Error(ErrorCode::MatchingConflict,
                        g.vertex_name(v) + " has degree " + std::to_string(deg[v]) + " and cannot be matched to " +
                            g.vertex_name(u));
        g.add_edge(u, v);
    }
    model.matching = std::move(pairs);
    return model;
}

RecordReport verify_record(const RecordModel& model)
{
    const Graph& g = model.graph;
    RecordReport r;
    r.q = model.q();
    r.order = g.order();
    r.expected_order = static_cast<std::size_t>(record_order(r.q));
    r.bipartite = is_bipartite(g);
    r.connected = is_connected(g);
    r.degree_histogram = degree_histogram(g);
    r.girth = girth(g);

    const std::size_t degree = r.q + 2;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != degree)
            r.irregular_vertices.push_back(g.vertex_name(v));

    if (r.connected) {
        const auto dist = distance_matrix(g);
        int diam = 0;
        for (const auto& row : dist)
            diam = std::max(diam, *std::max_element(row.begin(), row.end()));
        r.diameter = diam;
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = u + 1; v < g.order(); ++v)
                if (dist[u][v] == diam)
                    r.diameter_pairs.emplace_back(g.vertex_name(u), g.vertex_name(v));
    }

    r.checks.add("order", r.order == r.expected_order,
                 "order " + std::to_string(r.order) + ", expected " + std::to_string(r.expected_order));
    r.checks.add("regular", r.irregular_vertices.empty(), "expected degree " + std::to_string(degree),
                 r.irregular_vertices);
    r.checks.add("diameter", r.diameter == 3,
                 r.diameter ? "diameter " + std::to_string(*r.diameter) : std::string("disconnected"));
    return r;
}

nlohmann::json RecordReport::to_json(bool include_pairs) const
{
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [d, c] : degree_histogram)
        hist[std::to_string(d)] = c;
    nlohmann::json out = {
        {"q", q},
        {"order", order},
        {"expected_order", expected_order},
        {"bipartite", bipartite},
        {"connected", connected},
        {"degree_histogram", hist},
        {"girth", girth == kInfinity ? nlohmann::json("inf") : nlohmann::json(girth)},
        {"diameter", diameter ? nlohmann::json(*diameter) : nlohmann::json(nullptr)},
        {"irregular_vertices", irregular_vertices},
        {"diameter_pair_count", diameter_pairs.size()},
        {"checks", checks.to_json()},
        {"verdict", verdict() ? "pass" : "fail"},
    };
    if (include_pairs) {
        nlohmann::json pairs = nlohmann::json::array();
        for (const auto& [u, v] : diameter_pairs)
            pairs.push_back({u, v});
        out["diameter_pairs"] = std::move(pairs);
    }
    return out;
}

std::int64_t record_order(std::uint64_t q)
{
    const auto qi = static_cast<std::int64_t>(q);
    return 2 * (qi * qi + qi + 5);
}

std::int64_t record_defect(std::uint64_t q)
{
    require_record_q(q);
    return moore_bound_diameter(static_cast<int>(q + 2), 3) - record_order(q);
}

}  // namespace moorelab
