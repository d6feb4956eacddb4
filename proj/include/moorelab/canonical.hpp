#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "moorelab/graph.hpp"

namespace moorelab {

inline constexpr std::size_t kMaxCanonicalOrder = 64;

/// graph6 of the canonically relabelled graph. Equal iff isomorphic.
class CanonicalForm {
public:
    CanonicalForm() = default;
    explicit CanonicalForm(std::string graph6) : graph6_(std::move(graph6)) {}

    const std::string& graph6() const noexcept { return graph6_; }

    auto operator<=>(const CanonicalForm&) const = default;

private:
    std::string graph6_;
};

struct CanonicalLabeling {
    std::vector<Vertex> position;  // vertex -> canonical position
    CanonicalForm form;
};

/// Individualisation-refinement search over equitable partitions; the form is
/// the smallest leaf encoding. Throws TooLarge above kMaxCanonicalOrder.
CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
/// Unlabelled copy of g in canonical vertex order.
Graph canonical_graph(const Graph& g);

namespace detail {

/// Adjacency as one 64-bit row per vertex.
struct BitGraph {
    int n = 0;
    std::array<std::uint64_t, kMaxCanonicalOrder> adj{};

    static BitGraph from(const Graph& g);
};

/// Canonical order (position -> vertex) of a vertex-coloured graph. `cells`
/// is the initial ordered partition as bit masks; colour classes keep their
/// positions in the result.
std::vector<int> canonical_order(const BitGraph& g, std::vector<std::uint64_t> cells);

std::string graph6_in_order(const BitGraph& g, std::span<const int> order);

}  // namespace detail

}  // namespace moorelab
