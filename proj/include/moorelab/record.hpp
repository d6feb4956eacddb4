#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "moorelab/field.hpp"
#include "moorelab/graph.hpp"
#include "moorelab/plane.hpp"
#include "moorelab/report.hpp"

namespace moorelab {

enum class MatchingRule {
    None,          // H_q, no matching
    DegreeDriven,  // repair every vertex below the maximum degree
    LiteralText,   // P_i/L_i pairs only for i outside {0, 1, a}
};

const char* to_string(MatchingRule rule) noexcept;

/// H_q or R_q: PG(2,q) incidence graph with the edge ((0,a),[0,a]) removed
/// and eight vertices added. Base vertices keep their plane numbering; the
/// new ones follow as Q_0, M_0, ^(0,0), ^(0,1), ^(0,a), ^[0,0], ^[0,1], ^[0,a].
struct RecordModel {
    PlaneModel base;
    FieldElement a;
    Graph graph;
    Edge deleted_edge;
    MatchingRule rule = MatchingRule::None;
    std::vector<Edge> matching;

    std::uint32_t q() const noexcept { return base.q(); }
    /// Q_0, M_0 and the six hat vertices.
    std::vector<Vertex> added_vertices() const;
};

/// Throws NotAPrimePower, QTooSmall (q = 2) or InvalidA (a in {0,1} or out
/// of range). Default a is element index 2.
RecordModel build_hq(std::uint64_t q, std::optional<std::uint32_t> a = std::nullopt);

/// H_q plus a degree-repairing matching. Throws MatchingConflict if a pair
/// is already an edge or an endpoint is not below the maximum degree.
RecordModel build_rq(std::uint64_t q, std::optional<std::uint32_t> a = std::nullopt,
                     MatchingRule rule = MatchingRule::DegreeDriven);

struct RecordReport {
    std::uint32_t q = 0;
    std::size_t order = 0;
    std::size_t expected_order = 0;
    bool bipartite = false;
    bool connected = false;
    std::map<std::size_t, std::size_t> degree_histogram;
    std::optional<int> diameter;
    int girth = 0;
    std::vector<std::string> irregular_vertices;  // degree != q+2
    std::vector<std::pair<std::string, std::string>> diameter_pairs;
    Report checks;  // order, regular, diameter

    /// Order 2(q^2+q+5), (q+2)-regular, diameter 3.
    bool verdict() const { return checks.passed(); }
    nlohmann::json to_json(bool include_pairs = false) const;
};

RecordReport verify_record(const RecordModel& model);

/// M^b(q+2, 3) - 2(q^2+q+5). Throws NotAPrimePower, QTooSmall.
std::int64_t record_defect(std::uint64_t q);

/// 2(q^2+q+5)
std::int64_t record_order(std::uint64_t q);

}  // namespace moorelab
