#include "moorelab/census.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "moorelab/error.hpp"
#include "moorelab/io.hpp"
#include "moorelab/moore.hpp"

namespace moorelab {

namespace {

// Partial structure: every point present, lines 0..k-1 given by their point
// masks, all in coloured-canonical order.
using Key = std::vector<std::uint32_t>;

std::optional<int> target_girth(int delta, std::size_t n)
{
    if (delta < 2)
        return std::nullopt;
    for (int g = 4;; g += 2) {
        const std::int64_t bound = moore_order(delta, g);
        if (bound == static_cast<std::int64_t>(n))
            return g;
        if (bound > static_cast<std::int64_t>(n))
            return std::nullopt;
    }
}

detail::BitGraph bits_of(const Key& lines, int points)
{
    detail::BitGraph b;
    b.n = points + static_cast<int>(lines.size());
    for (std::size_t l = 0; l < lines.size(); ++l) {
        const int lv = points + static_cast<int>(l);
        b.adj[static_cast<std::size_t>(lv)] = lines[l];
        for (std::uint32_t rest = lines[l]; rest != 0; rest &= rest - 1)
            b.adj[static_cast<std::size_t>(std::countr_zero(rest))] |= std::uint64_t{1} << lv;
    }
    return b;
}

std::uint64_t low_mask(int count)
{
    return count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
}

Key canonical_key(const Key& lines, int points)
{
    const auto b = bits_of(lines, points);
    const std::uint64_t point_mask = low_mask(points);
    std::vector<std::uint64_t> cells{point_mask};
    if (!lines.empty())
        cells.push_back(low_mask(b.n) & ~point_mask);
    const auto order = detail::canonical_order(b, std::move(cells));
    std::vector<int> pos(static_cast<std::size_t>(b.n));
    for (int i = 0; i < b.n; ++i)
        pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    Key out;
    out.reserve(lines.size());
    for (int i = points; i < b.n; ++i) {
        std::uint32_t mask = 0;
        for (std::uint32_t rest = lines[static_cast<std::size_t>(order[static_cast<std::size_t>(i)] - points)];
             rest != 0; rest &= rest - 1)
            mask |= std::uint32_t{1} << pos[static_cast<std::size_t>(std::countr_zero(rest))];
        out.push_back(mask);
    }
    return out;
}

// All children of one partial structure, canonicalised.
void extend(const Key& key, int points, int delta, std::vector<Key>& out)
{
    std::vector<int> deg(static_cast<std::size_t>(points), 0);
    for (auto mask : key)
        for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1)
            ++deg[static_cast<std::size_t>(std::countr_zero(rest))];

    const int lines_after = static_cast<int>(key.size()) + 1;
    const int remaining = points - lines_after;
    std::uint32_t forced = 0, open = 0;
    for (int p = 0; p < points; ++p) {
        const int need = delta - deg[static_cast<std::size_t>(p)];
        if (need <= 0)
            continue;
        open |= std::uint32_t{1} << p;
        if (need - 1 > remaining)
            return;  // cannot be saturated even if chosen now
        if (need > remaining)
            forced |= std::uint32_t{1} << p;
    }
    const int forced_count = std::popcount(forced);
    if (forced_count > delta)
        return;

    std::vector<int> choices;
    for (std::uint32_t rest = open & ~forced; rest != 0; rest &= rest - 1)
        choices.push_back(std::countr_zero(rest));
    const int pick = delta - forced_count;
    if (pick > static_cast<int>(choices.size()))
        return;

    std::vector<int> idx(static_cast<std::size_t>(pick));
    for (int i = 0; i < pick; ++i)
        idx[static_cast<std::size_t>(i)] = i;
    Key child = key;
    child.push_back(0);
    for (;;) {
        std::uint32_t mask = forced;
        for (int i : idx)
            mask |= std::uint32_t{1} << choices[static_cast<std::size_t>(i)];
        child.back() = mask;
        out.push_back(canonical_key(child, points));

        int i = pick - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == static_cast<int>(choices.size()) - pick + i)
            --i;
        if (i < 0)
            break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < pick; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

void sort_unique(std::vector<Key>& keys)
{
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
}

std::vector<Key> next_level(const std::vector<Key>& level, int points, int delta, unsigned jobs)
{
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(level.size())));
    std::vector<std::vector<Key>> parts(jobs);
    const auto work = [&](unsigned part) {
        for (std::size_t i = part; i < level.size(); i += jobs)
            extend(level[i], points, delta, parts[part]);
        sort_unique(parts[part]);
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned t = 0; t < jobs; ++t)
            threads.emplace_back(work, t);
        for (auto& t : threads)
            t.join();
    }
    std::vector<Key> merged;
    for (auto& p : parts)
        merged.insert(merged.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    sort_unique(merged);
    return merged;
}

std::filesystem::path level_file(const std::filesystem::path& dir, std::size_t k)
{
    char name[32];
    std::snprintf(name, sizeof name, "level_%02zu.txt", k);
    return dir / name;
}

std::filesystem::path done_marker(const std::filesystem::path& dir, std::size_t k)
{
    auto p = level_file(dir, k);
    p.replace_extension(".done");
    return p;
}

void save_level(const std::filesystem::path& dir, std::size_t k, const std::vector<Key>& level)
{
    std::ofstream out(level_file(dir, k));
    if (!out)
        throw Error(ErrorCode::Io, "cannot write checkpoint in " + dir.string());
    for (const auto& key : level) {
        for (std::size_t i = 0; i < key.size(); ++i)
            out << (i ? " " : "") << std::hex << key[i];
        out << '\n';
    }
    out.close();
    if (!out)
        throw Error(ErrorCode::Io, "checkpoint write failed in " + dir.string());
    std::ofstream(done_marker(dir, k)) << level.size() << '\n';
}

std::vector<Key> load_level(const std::filesystem::path& dir, std::size_t k)
{
    std::ifstream in(level_file(dir, k));
    if (!in)
        throw Error(ErrorCode::Io, "cannot read checkpoint " + level_file(dir, k).string());
    std::vector<Key> level;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        Key key;
        std::uint32_t mask = 0;
        while (fields >> std::hex >> mask)
            key.push_back(mask);
        if (key.size() != k)
            throw Error(ErrorCode::Io, "corrupt checkpoint " + level_file(dir, k).string());
        level.push_back(std::move(key));
    }
    return level;
}

Graph graph_of(const Key& lines, int points)
{
    Graph g;
    for (int p = 0; p < points; ++p)
        g.add_vertex(VertexLabel::anonymous(p), Side::Point);
    for (std::size_t l = 0; l < lines.size(); ++l)
        g.add_vertex(VertexLabel::anonymous(points + static_cast<int>(l)), Side::Line);
    for (std::size_t l = 0; l < lines.size(); ++l)
        for (std::uint32_t rest = lines[l]; rest != 0; rest &= rest - 1)
            g.add_edge(static_cast<Vertex>(std::countr_zero(rest)), static_cast<Vertex>(points + l));
    return g;
}

}  // namespace

Graph CensusRecord::graph() const
{
    return decode_graph6(form.graph6());
}

CensusRecord make_census_record(const Graph& g, int delta)
{
    CensusRecord r;
    r.form = canonical_form(g);
    r.order = g.order();
    r.degree = delta;
    r.girth = girth(g);
    const auto target = target_girth(delta, g.order());
    r.girth_vector = girth_vector(g, target.value_or(0));
    if (target) {
        r.lbm = is_local_bipartite_moore(g, delta, *target);
        const auto& local = r.girth_vector.local;
        if (std::none_of(local.begin(), local.end(), [](int x) { return x == kInfinity; })) {
            std::int64_t sum = 0;
            for (int x : local)
                sum += std::abs(*target - x);
            r.norm1 = sum;
        }
    }
    return r;
}

void for_each_regular_bipartite(int delta, int n, const CensusOptions& options,
                                const std::function<void(const CensusRecord&)>& sink)
{
    if (n < 2 || n % 2 != 0)
        throw Error(ErrorCode::Unsupported, "census order must be even and >= 2, got " + std::to_string(n));
    if (static_cast<std::size_t>(n) > std::min(options.max_order, kMaxCanonicalOrder))
        throw Error(ErrorCode::Unsupported, "census order " + std::to_string(n) + " exceeds configured limit " +
                                                std::to_string(std::min(options.max_order, kMaxCanonicalOrder)));
    if (delta < 1)
        throw Error(ErrorCode::Unsupported, "degree must be >= 1");
    const int points = n / 2;
    if (delta > points)
        return;

    std::size_t k = 0;
    std::vector<Key> level{Key{}};
    if (options.checkpoint_dir) {
        std::filesystem::create_directories(*options.checkpoint_dir);
        for (std::size_t j = static_cast<std::size_t>(points); j > 0; --j) {
            if (std::filesystem::exists(done_marker(*options.checkpoint_dir, j))) {
                level = load_level(*options.checkpoint_dir, j);
                k = j;
                break;
            }
        }
    }
    for (; k < static_cast<std::size_t>(points); ++k) {
        level = next_level(level, points, delta, options.jobs);
        if (options.checkpoint_dir)
            save_level(*options.checkpoint_dir, k + 1, level);
    }

    // Sided classes can coincide as graphs (side swap), so dedup again.
    std::vector<std::pair<CanonicalForm, Graph>> full;
    full.reserve(level.size());
    for (const auto& key : level) {
        Graph g = graph_of(key, points);
        if (!options.include_disconnected && !is_connected(g))
            continue;
        full.emplace_back(canonical_form(g), std::move(g));
    }
    std::sort(full.begin(), full.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    full.erase(std::unique(full.begin(), full.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
               full.end());
    for (const auto& entry : full)
        sink(make_census_record(entry.second, delta));
}

std::vector<CensusRecord> enumerate_regular_bipartite(int delta, int n, const CensusOptions& options)
{
    std::vector<CensusRecord> out;
    for_each_regular_bipartite(delta, n, options, [&](const CensusRecord& r) { out.push_back(r); });
    return out;
}

std::vector<CensusRecord> enumerate_lbm(int delta, int g, const CensusOptions& options)
{
    const auto n = moore_order(delta, g);
    if (n > static_cast<std::int64_t>(kMaxCanonicalOrder))
        throw Error(ErrorCode::Unsupported, "Moore order " + std::to_string(n) + " exceeds census range");
    std::vector<CensusRecord> out;
    for_each_regular_bipartite(delta, static_cast<int>(n), options, [&](const CensusRecord& r) {
        if (r.lbm)
            out.push_back(r);
    });
    return out;
}

LbmRatio lbm_ratio(int delta, int g, const CensusOptions& options)
{
    const auto n = moore_order(delta, g);
    if (n > static_cast<std::int64_t>(kMaxCanonicalOrder))
        throw Error(ErrorCode::Unsupported, "Moore order " + std::to_string(n) + " exceeds census range");
    LbmRatio r;
    for_each_regular_bipartite(delta, static_cast<int>(n), options, [&](const CensusRecord& rec) {
        ++r.rb;
        if (rec.lbm)
            ++r.lbm;
    });
    r.ratio = r.rb == 0 ? 0.0 : static_cast<double>(r.lbm) / static_cast<double>(r.rb);
    return r;
}

nlohmann::json census_summary(int delta, int n, const std::vector<CensusRecord>& records)
{
    std::map<std::string, std::size_t> histogram;
    std::size_t lbm = 0;
    for (const auto& r : records) {
        ++histogram[r.girth_vector.str()];
        if (r.lbm)
            ++lbm;
    }
    return {
        {"delta", delta},
        {"n", n},
        {"count", records.size()},
        {"lbm_count", lbm},
        {"girth_vector_histogram", histogram},
    };
}

}  // namespace moorelab
