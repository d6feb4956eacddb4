#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "moorelab/canonical.hpp"
#include "moorelab/graph.hpp"
#include "moorelab/metrics.hpp"

namespace moorelab {

struct CensusRecord {
    CanonicalForm form;
    std::size_t order = 0;
    int degree = 0;
    int girth = 0;
    /// Target is the even g with moore_order(degree, g) == order, or 0 when
    /// the order is not a Moore order.
    GirthVector girth_vector;
    bool lbm = false;
    /// Sum of deficits g - g(v); set when a target exists and every local
    /// girth is finite.
    std::optional<std::int64_t> norm1;

    Graph graph() const;
};

struct CensusOptions {
    bool include_disconnected = false;
    unsigned jobs = 1;
    /// Level files are written here and the run resumes from the last
    /// complete level found.
    std::optional<std::filesystem::path> checkpoint_dir;
    std::size_t max_order = 36;
};

/// One record per isomorphism class of Δ-regular bipartite graphs on n
/// vertices (connected unless include_disconnected), in canonical-form order.
///
/// Line-side neighbourhoods are assigned one vertex at a time; after every
/// step the partial structures are reduced to one representative per
/// point/line-coloured isomorphism class. Full graphs are deduplicated again
/// by uncoloured canonical form. Throws Unsupported for odd n, n above
/// max_order, or delta < 1.
std::vector<CensusRecord> enumerate_regular_bipartite(int delta, int n, const CensusOptions& options = {});

/// Streaming form; records arrive in canonical-form order.
void for_each_regular_bipartite(int delta, int n, const CensusOptions& options,
                                const std::function<void(const CensusRecord&)>& sink);

/// Records of order moore_order(delta, g) that are local bipartite Moore graphs.
std::vector<CensusRecord> enumerate_lbm(int delta, int g, const CensusOptions& options = {});

struct LbmRatio {
    std::size_t lbm = 0;
    std::size_t rb = 0;
    double ratio = 0.0;
};

LbmRatio lbm_ratio(int delta, int g, const CensusOptions& options = {});

/// Builds the record for one graph (used for the final stage of the census).
CensusRecord make_census_record(const Graph& g, int delta);

/// {"count", "delta", "girth_vector_histogram", "lbm_count", "n"}
nlohmann::json census_summary(int delta, int n, const std::vector<CensusRecord>& records);

}  // namespace moorelab
