#include "moorelab/canonical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "moorelab/error.hpp"

namespace moorelab {

namespace detail {

namespace {

using Cells = std::vector<std::uint64_t>;

constexpr std::size_t kMaxGenerators = 64;

// Splits every cell by neighbour count into the splitter, smallest count
// first, until the partition is equitable. Cell positions depend only on the
// structure, never on vertex numbers.
void refine(const BitGraph& g, Cells& cells)
{
    std::array<std::uint64_t, kMaxCanonicalOrder + 1> bucket{};
    Cells next;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
            const std::uint64_t splitter = cells[s];
            next.clear();
            for (std::uint64_t cell : cells) {
                if (std::has_single_bit(cell)) {
                    next.push_back(cell);
                    continue;
                }
                int lo = kMaxCanonicalOrder + 1, hi = -1;
                for (std::uint64_t rest = cell; rest != 0; rest &= rest - 1) {
                    const int v = std::countr_zero(rest);
                    const int c = std::popcount(g.adj[v] & splitter);
                    bucket[c] |= std::uint64_t{1} << v;
                    lo = std::min(lo, c);
                    hi = std::max(hi, c);
                }
                if (lo == hi) {
                    bucket[lo] = 0;
                    next.push_back(cell);
                    continue;
                }
                changed = true;
                for (int c = lo; c <= hi; ++c) {
                    if (bucket[c] != 0) {
                        next.push_back(bucket[c]);
                        bucket[c] = 0;
                    }
                }
            }
            if (changed)
                cells.swap(next);
        }
    }
}

class Search {
public:
    explicit Search(const BitGraph& g) : g_(g) {}

    std::vector<int> run(Cells cells)
    {
        std::vector<int> prefix;
        descend(std::move(cells), prefix);
        return best_lab_;
    }

private:
    // Returns the depth the search should resume at.
    std::size_t descend(Cells cells, std::vector<int>& prefix)
    {
        refine(g_, cells);
        const std::size_t depth = prefix.size();
        if (cells.size() == static_cast<std::size_t>(g_.n))
            return leaf(cells, prefix);

        std::size_t target = cells.size();
        int target_size = kMaxCanonicalOrder + 1;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const int size = std::popcount(cells[i]);
            if (size > 1 && size < target_size) {
                target = i;
                target_size = size;
            }
        }

        std::vector<int> explored;
        const std::uint64_t cell = cells[target];
        for (std::uint64_t rest = cell; rest != 0; rest &= rest - 1) {
            const int w = std::countr_zero(rest);
            if (!explored.empty() && equivalent_to_explored(w, explored, prefix))
                continue;
            explored.push_back(w);

            Cells child;
            child.reserve(cells.size() + 1);
            child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(target));
            child.push_back(std::uint64_t{1} << w);
            child.push_back(cell & ~(std::uint64_t{1} << w));
            child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(target) + 1, cells.end());

            prefix.push_back(w);
            const std::size_t resume = descend(std::move(child), prefix);
            prefix.pop_back();
            if (resume < depth)
                return resume;
        }
        return depth;
    }

    std::size_t leaf(const Cells& cells, const std::vector<int>& prefix)
    {
        const int n = g_.n;
        std::vector<int> lab(static_cast<std::size_t>(n));
        std::vector<int> pos(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            lab[static_cast<std::size_t>(i)] = std::countr_zero(cells[static_cast<std::size_t>(i)]);
            pos[static_cast<std::size_t>(lab[static_cast<std::size_t>(i)])] = i;
        }
        std::vector<std::uint64_t> code(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            std::uint64_t row = 0;
            for (std::uint64_t rest = g_.adj[static_cast<std::size_t>(lab[static_cast<std::size_t>(i)])]; rest != 0;
                 rest &= rest - 1)
                row |= std::uint64_t{1} << pos[static_cast<std::size_t>(std::countr_zero(rest))];
            code[static_cast<std::size_t>(i)] = row;
        }

        if (first_lab_.empty()) {
            first_lab_ = best_lab_ = lab;
            first_code_ = best_code_ = std::move(code);
            first_prefix_ = prefix;
            return prefix.size();
        }
        if (code == first_code_) {
            record_automorphism(lab, first_lab_);
            // This leaf's subtree below the common ancestor with the first
            // path is an automorphic image of an explored one.
            std::size_t common = 0;
            while (common < prefix.size() && common < first_prefix_.size() && prefix[common] == first_prefix_[common])
                ++common;
            return common;
        }
        if (code < best_code_) {
            best_code_ = std::move(code);
            best_lab_ = std::move(lab);
        } else if (code == best_code_) {
            record_automorphism(lab, best_lab_);
        }
        return prefix.size();
    }

    // gamma maps from[i] -> to[i]
    void record_automorphism(const std::vector<int>& from, const std::vector<int>& to)
    {
        if (generators_.size() >= kMaxGenerators)
            return;
        std::vector<int> gamma(from.size());
        for (std::size_t i = 0; i < from.size(); ++i)
            gamma[static_cast<std::size_t>(from[i])] = to[i];
        generators_.push_back(std::move(gamma));
    }

    // Orbit test under the known automorphisms that fix the prefix pointwise.
    bool equivalent_to_explored(int w, const std::vector<int>& explored, const std::vector<int>& prefix)
    {
        if (generators_.empty())
            return false;
        std::vector<int> parent(static_cast<std::size_t>(g_.n));
        std::iota(parent.begin(), parent.end(), 0);
        const auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        bool any = false;
        for (const auto& gamma : generators_) {
            const bool fixes = std::all_of(prefix.begin(), prefix.end(),
                                           [&](int p) { return gamma[static_cast<std::size_t>(p)] == p; });
            if (!fixes)
                continue;
            any = true;
            for (int x = 0; x < g_.n; ++x) {
                const int a = find(x), b = find(gamma[static_cast<std::size_t>(x)]);
                if (a != b)
                    parent[static_cast<std::size_t>(a)] = b;
            }
        }
        if (!any)
            return false;
        const int root = find(w);
        return std::any_of(explored.begin(), explored.end(), [&](int e) { return find(e) == root; });
    }

    const BitGraph& g_;
    std::vector<int> first_lab_, best_lab_;
    std::vector<std::uint64_t> first_code_, best_code_;
    std::vector<int> first_prefix_;
    std::vector<std::vector<int>> generators_;
};

}  // namespace

BitGraph BitGraph::from(const Graph& g)
{
    if (g.order() > kMaxCanonicalOrder)
        throw Error(ErrorCode::TooLarge, "canonical labelling supports at most 64 vertices, got " +
                                             std::to_string(g.order()));
    BitGraph b;
    b.n = static_cast<int>(g.order());
    for (const auto& [u, v] : g.edges()) {
        b.adj[u] |= std::uint64_t{1} << v;
        b.adj[v] |= std::uint64_t{1} << u;
    }
    return b;
}

std::vector<int> canonical_order(const BitGraph& g, std::vector<std::uint64_t> cells)
{
    if (g.n == 0)
        return {};
    return Search(g).run(std::move(cells));
}

std::string graph6_in_order(const BitGraph& g, std::span<const int> order)
{
    const int n = g.n;
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    int filled = 0;
    unsigned bits = 0;
    for (int j = 1; j < n; ++j) {
        const std::uint64_t row = g.adj[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])];
        for (int i = 0; i < j; ++i) {
            bits = (bits << 1) | static_cast<unsigned>((row >> order[static_cast<std::size_t>(i)]) & 1);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + bits));
                filled = 0;
                bits = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>(63 + (bits << (6 - filled))));
    return out;
}

}  // namespace detail

CanonicalLabeling canonical_labeling(const Graph& g)
{
    const auto bits = detail::BitGraph::from(g);
    std::vector<std::uint64_t> cells;
    if (bits.n > 0)
        cells.push_back(bits.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits.n) - 1);
    const auto order = detail::canonical_order(bits, std::move(cells));
    CanonicalLabeling out;
    out.position.resize(g.order());
    for (std::size_t i = 0; i < order.size(); ++i)
        out.position[static_cast<std::size_t>(order[i])] = static_cast<Vertex>(i);
    out.form = CanonicalForm(detail::graph6_in_order(bits, order));
    return out;
}

CanonicalForm canonical_form(const Graph& g)
{
    return canonical_labeling(g).form;
}

Graph canonical_graph(const Graph& g)
{
    const auto labeling = canonical_labeling(g);
    Graph out(g.order());
    for (const auto& [u, v] : g.edges())
        out.add_edge(labeling.position[u], labeling.position[v]);
    return out;
}

}  // namespace moorelab
