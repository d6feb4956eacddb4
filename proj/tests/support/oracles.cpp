#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <functional>
#include <map>
#include <numeric>

#include "moorelab/canonical.hpp"
#include "moorelab/metrics.hpp"

namespace oracle {

Graph heawood()
{
    // Points 0..6, lines 7..13; line j is {j, j+1, j+3} mod 7.
    static const int lines[7][3] = {{0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 0}, {5, 6, 1}, {6, 0, 2}};
    Graph g(14);
    for (int j = 0; j < 7; ++j)
        for (int p : lines[j])
            g.add_edge(static_cast<Vertex>(p), static_cast<Vertex>(7 + j));
    return g;
}

Graph complete_bipartite(int delta)
{
    Graph g(static_cast<std::size_t>(2 * delta));
    for (int i = 0; i < delta; ++i)
        for (int j = 0; j < delta; ++j)
            g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(delta + j));
    return g;
}

Graph cycle(int n)
{
    Graph g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
    return g;
}

namespace {

enum V : Vertex { Wr, Br, B, Bp, W, Wp, W1, W2, W1p, W2p, B1, B2, B1p, B2p };

Graph moore_tree_with(const std::vector<std::vector<Vertex>>& cycles)
{
    Graph g(14);
    const Vertex tree[][2] = {{Wr, Br}, {Wr, B}, {Wr, Bp}, {Br, W}, {Br, Wp}, {B, W1}, {B, W2},
                              {Bp, W1p}, {Bp, W2p}, {W, B1}, {W, B2}, {Wp, B1p}, {Wp, B2p}};
    for (const auto& e : tree)
        g.add_edge(e[0], e[1]);
    for (const auto& c : cycles)
        for (std::size_t i = 0; i < c.size(); ++i)
            g.add_edge(c[i], c[(i + 1) % c.size()]);
    return g;
}

}  // namespace

Graph lbm36(Lbm36 which)
{
    switch (which) {
        case Lbm36::H: return moore_tree_with({{B1, W1, B1p, W1p, B2, W2, B2p, W2p}});
        case Lbm36::G1: return moore_tree_with({{B1, W1, B1p, W2, B2, W1p, B2p, W2p}});
        case Lbm36::G3: return moore_tree_with({{B1, W1, B2, W2, B1p, W1p, B2p, W2p}});
        case Lbm36::G4: return moore_tree_with({{B1, W1, B2, W2}, {B1p, W1p, B2p, W2p}});
        case Lbm36::G2: return moore_tree_with({{B1, W1, B2, W1p}, {B1p, W2, B2p, W2p}});
        case Lbm36::G1Alt: return moore_tree_with({{B1, W1, B1p, W1p}, {B2, W2, B2p, W2p}});
    }
    return {};
}

const char* name(Lbm36 which)
{
    switch (which) {
        case Lbm36::H: return "H";
        case Lbm36::G1: return "G1";
        case Lbm36::G2: return "G2";
        case Lbm36::G3: return "G3";
        case Lbm36::G4: return "G4";
        case Lbm36::G1Alt: return "G1alt";
    }
    return "?";
}

int brute_local_girth(const Graph& g, Vertex v)
{
    int best = INT_MAX;
    std::vector<char> on_path(g.order(), 0);
    std::function<void(Vertex, int)> dfs = [&](Vertex u, int len) {
        if (len + 1 >= best)
            return;
        for (Vertex w : g.neighbors(u)) {
            if (w == v && len >= 2) {
                best = std::min(best, len + 1);
            } else if (!on_path[w] && w != v) {
                on_path[w] = 1;
                dfs(w, len + 1);
                on_path[w] = 0;
            }
        }
    };
    on_path[v] = 1;
    dfs(v, 0);
    return best;
}

int brute_girth(const Graph& g)
{
    int best = INT_MAX;
    for (Vertex v = 0; v < g.order(); ++v)
        best = std::min(best, brute_local_girth(g, v));
    return best;
}

Graph random_cubic_bipartite(int n, std::mt19937_64& rng)
{
    const int half = n / 2;
    for (;;) {
        Graph g(static_cast<std::size_t>(n));
        bool ok = true;
        for (int m = 0; m < 3 && ok; ++m) {
            auto perm = random_permutation(static_cast<std::size_t>(half), rng);
            for (int i = 0; i < half && ok; ++i) {
                const Vertex a = static_cast<Vertex>(i), b = static_cast<Vertex>(half) + perm[static_cast<std::size_t>(i)];
                if (g.has_edge(a, b))
                    ok = false;
                else
                    g.add_edge(a, b);
            }
        }
        if (ok)
            return g;
    }
}

Graph random_graph(int n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    Graph g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng))
                g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return g;
}

std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng)
{
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm)
{
    Graph h(g.order());
    for (auto [u, v] : g.edges())
        h.add_edge(perm[u], perm[v]);
    return h;
}

namespace {

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p)
{
    for (std::uint32_t x = 1; x < p; ++x)
        if (a * x % p == 1)
            return x;
    return 0;
}

}  // namespace

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p)
{
    if (a.empty() || b.empty())
        return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<std::uint32_t>((out[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    trim(out);
    return out;
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p)
{
    trim(a);
    const std::uint32_t lead_inv = inverse_mod(m.back(), p);
    while (a.size() >= m.size()) {
        const std::uint32_t factor = static_cast<std::uint32_t>(std::uint64_t{a.back()} * lead_inv % p);
        const std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i)
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + std::uint64_t{p - factor} * m[i]) % p);
        trim(a);
    }
    return a;
}

bool poly_irreducible(const Poly& f, std::uint32_t p)
{
    const std::size_t deg = f.size() - 1;
    // trial division by every monic polynomial of degree 1..deg/2
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        Poly div(d + 1, 0);
        div[d] = 1;
        for (;;) {
            if (poly_mod(f, div, p).empty())
                return false;
            std::size_t i = 0;
            while (i < d && ++div[i] == p)
                div[i++] = 0;
            if (i == d)
                break;
        }
    }
    return true;
}

Poly smallest_irreducible(std::uint32_t p, std::uint32_t k)
{
    if (k == 1)
        return {0, 1};
    // c_0 is the most significant digit of the enumeration order
    Poly f(k + 1, 0);
    f[k] = 1;
    for (;;) {
        if (poly_irreducible(f, p))
            return f;
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && ++f[static_cast<std::size_t>(i)] == p)
            f[static_cast<std::size_t>(i--)] = 0;
        if (i < 0)
            return {};
    }
}

std::set<std::string> naive_census(int delta, int n)
{
    const int half = n / 2;
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 0; m < (1u << half); ++m)
        if (std::popcount(m) == delta)
            masks.push_back(m);

    std::set<std::string> forms;
    std::vector<int> deg(static_cast<std::size_t>(half), 0);
    std::vector<std::uint32_t> chosen;
    std::function<void(std::size_t)> place = [&](std::size_t from) {
        if (static_cast<int>(chosen.size()) == half) {
            Graph g(static_cast<std::size_t>(n));
            for (int l = 0; l < half; ++l)
                for (int p = 0; p < half; ++p)
                    if (chosen[static_cast<std::size_t>(l)] >> p & 1)
                        g.add_edge(static_cast<Vertex>(p), static_cast<Vertex>(half + l));
            if (moorelab::is_connected(g))
                forms.insert(moorelab::canonical_form(g).graph6());
            return;
        }
        for (std::size_t i = from; i < masks.size(); ++i) {
            const std::uint32_t m = masks[i];
            bool fits = true;
            for (int p = 0; p < half; ++p)
                if ((m >> p & 1) && deg[static_cast<std::size_t>(p)] == delta)
                    fits = false;
            if (!fits)
                continue;
            for (int p = 0; p < half; ++p)
                deg[static_cast<std::size_t>(p)] += m >> p & 1;
            chosen.push_back(m);
            place(i);
            chosen.pop_back();
            for (int p = 0; p < half; ++p)
                deg[static_cast<std::size_t>(p)] -= m >> p & 1;
        }
    };
    place(0);
    return forms;
}

}  // namespace oracle
