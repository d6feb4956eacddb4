#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "moorelab/canonical.hpp"
#include "moorelab/graph.hpp"
#include "moorelab/metrics.hpp"

namespace moorelab {

using BigInt = boost::multiprecision::cpp_int;

/// Per-vertex |g - g(v)|. Vertices whose local girth exceeds the target are
/// listed in `excess` (they should not occur at Moore order).
struct DeficitVector {
    int target = 0;
    std::vector<int> deficits;
    std::vector<Vertex> excess;

    /// sum of deficit^p, exact
    BigInt power_sum(unsigned p) const;
};

/// Throws PreconditionViolated for an acyclic vertex (infinite local girth).
DeficitVector deficit_vector(const GirthVector& gv);
DeficitVector deficit_vector(const Graph& g, int target);

/// p-norm of the deficit vector; p = 1 is the girth norm (an exact integer).
double girth_norm(const Graph& g, int target, unsigned p = 1);
std::int64_t girth_norm1(const Graph& g, int target);

enum class Closeness { Precedes, Succeeds, Equivalent };

const char* to_string(Closeness c) noexcept;

/// Same deficit multiset. Throws OrderMismatch.
bool girth_equivalent(const Graph& a, const Graph& b, int target);

/// First p in 1..n whose exact power sums differ decides; equal power sums
/// for all p <= n imply equal multisets. Throws OrderMismatch.
Closeness precedes(const Graph& a, const Graph& b, int target);
Closeness precedes(const DeficitVector& a, const DeficitVector& b);

struct RankedClass {
    std::vector<std::size_t> members;  // indices into the input, canonical-form order
    std::int64_t norm1 = 0;
    std::string girth_vector;
};

/// Girth-equivalence classes from closest to farthest. Throws OrderMismatch
/// if orders differ.
std::vector<RankedClass> rank_set(std::span<const Graph> graphs, int target);

}  // namespace moorelab
