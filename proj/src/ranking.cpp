#include "moorelab/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "moorelab/error.hpp"

namespace moorelab {

BigInt DeficitVector::power_sum(unsigned p) const
{
    BigInt sum = 0;
    for (int d : deficits)
        sum += boost::multiprecision::pow(BigInt(d), p);
    return sum;
}

DeficitVector deficit_vector(const GirthVector& gv)
{
    DeficitVector dv;
    dv.target = gv.target;
    dv.deficits.reserve(gv.local.size());
    for (std::size_t v = 0; v < gv.local.size(); ++v) {
        const int local = gv.local[v];
        if (local == kInfinity)
            throw Error(ErrorCode::PreconditionViolated, "vertex " + std::to_string(v) + " lies on no cycle");
        if (local > gv.target)
            dv.excess.push_back(static_cast<Vertex>(v));
        dv.deficits.push_back(std::abs(gv.target - local));
    }
    return dv;
}

DeficitVector deficit_vector(const Graph& g, int target)
{
    return deficit_vector(girth_vector(g, target));
}

double girth_norm(const Graph& g, int target, unsigned p)
{
    if (p == 0)
        throw Error(ErrorCode::PreconditionViolated, "norm order must be >= 1");
    const auto dv = deficit_vector(g, target);
    const double sum = dv.power_sum(p).convert_to<double>();
    return p == 1 ? sum : std::pow(sum, 1.0 / p);
}

std::int64_t girth_norm1(const Graph& g, int target)
{
    const auto dv = deficit_vector(g, target);
    return std::accumulate(dv.deficits.begin(), dv.deficits.end(), std::int64_t{0});
}

const char* to_string(Closeness c) noexcept
{
    switch (c) {
        case Closeness::Precedes: return "precedes";
        case Closeness::Succeeds: return "succeeds";
        case Closeness::Equivalent: return "equivalent";
    }
    return "?";
}

namespace {

void require_same_order(std::size_t a, std::size_t b)
{
    if (a != b)
        throw Error(ErrorCode::OrderMismatch, "orders " + std::to_string(a) + " and " + std::to_string(b) + " differ");
}

}  // namespace

Closeness precedes(const DeficitVector& a, const DeficitVector& b)
{
    require_same_order(a.deficits.size(), b.deficits.size());
    auto sorted_a = a.deficits, sorted_b = b.deficits;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a == sorted_b)
        return Closeness::Equivalent;
    const auto n = static_cast<unsigned>(a.deficits.size());
    for (unsigned p = 1; p <= n; ++p) {
        const BigInt sa = a.power_sum(p), sb = b.power_sum(p);
        if (sa < sb)
            return Closeness::Precedes;
        if (sb < sa)
            return Closeness::Succeeds;
    }
    return Closeness::Equivalent;
}

Closeness precedes(const Graph& a, const Graph& b, int target)
{
    require_same_order(a.order(), b.order());
    return precedes(deficit_vector(a, target), deficit_vector(b, target));
}

bool girth_equivalent(const Graph& a, const Graph& b, int target)
{
    require_same_order(a.order(), b.order());
    auto da = deficit_vector(a, target).deficits;
    auto db = deficit_vector(b, target).deficits;
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    return da == db;
}

std::vector<RankedClass> rank_set(std::span<const Graph> graphs, int target)
{
    if (graphs.empty())
        return {};
    for (const auto& g : graphs)
        require_same_order(graphs.front().order(), g.order());

    struct Entry {
        std::size_t index;
        DeficitVector deficits;
        GirthVector girths;
        CanonicalForm form;
    };
    std::vector<Entry> entries;
    entries.reserve(graphs.size());
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        auto gv = girth_vector(graphs[i], target);
        auto dv = deficit_vector(gv);
        entries.push_back({i, std::move(dv), std::move(gv), canonical_form(graphs[i])});
    }
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
        const auto c = precedes(x.deficits, y.deficits);
        if (c != Closeness::Equivalent)
            return c == Closeness::Precedes;
        return x.form < y.form;
    });

    std::vector<RankedClass> classes;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i == 0 || precedes(entries[i - 1].deficits, entries[i].deficits) != Closeness::Equivalent) {
            RankedClass cls;
            const auto& d = entries[i].deficits.deficits;
            cls.norm1 = std::accumulate(d.begin(), d.end(), std::int64_t{0});
            cls.girth_vector = entries[i].girths.str();
            classes.push_back(std::move(cls));
        }
        classes.back().members.push_back(entries[i].index);
    }
    return classes;
}

}  // namespace moorelab
