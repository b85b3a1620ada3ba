#pragma once

// Explicit Cayley graphs and blow-ups on bitset adjacency, with exact
// brute-force clique counting. This is the ground truth the closed formulas
// are checked against.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "paley/error.hpp"
#include "paley/integer.hpp"
#include "paley/local_rings.hpp"

namespace paley {

inline constexpr std::uint64_t kGraphSizeCap = 20'000;
inline constexpr std::uint64_t kCliqueCountCap = 5'000;
inline constexpr std::uint64_t kCliqueNumberCap = 200;

/// Immutable adjacency matrix stored as one bitset row per vertex.
/// Row v holds the out-neighbours of v.
class Graph {
public:
    class Builder {
    public:
        explicit Builder(std::uint64_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {
            require(n <= kGraphSizeCap, ErrorKind::SizeCap,
                    "graph on " + std::to_string(n) + " vertices exceeds the cap " + std::to_string(kGraphSizeCap));
        }
        void add_arc(std::uint64_t u, std::uint64_t v) { bits_[u * words_ + v / 64] |= 1ULL << (v % 64); }
        void add_edge(std::uint64_t u, std::uint64_t v) {
            add_arc(u, v);
            add_arc(v, u);
        }
        Graph finish(std::string label = {}) && { return Graph(n_, words_, std::move(bits_), std::move(label)); }

    private:
        std::uint64_t n_;
        std::uint64_t words_;
        std::vector<std::uint64_t> bits_;
    };

    std::uint64_t size() const { return n_; }
    std::uint64_t words() const { return words_; }
    bool directed() const { return directed_; }
    const std::string& label() const { return label_; }

    std::span<const std::uint64_t> row(std::uint64_t v) const { return {bits_.data() + v * words_, words_}; }
    bool has_arc(std::uint64_t u, std::uint64_t v) const { return (bits_[u * words_ + v / 64] >> (v % 64)) & 1ULL; }

    std::uint64_t out_degree(std::uint64_t v) const {
        std::uint64_t d = 0;
        for (auto w : row(v)) d += static_cast<std::uint64_t>(std::popcount(w));
        return d;
    }

    /// Common out-degree, or nullopt when the graph is not regular.
    std::optional<std::uint64_t> regular_degree() const {
        if (n_ == 0) return 0;
        const auto d = out_degree(0);
        for (std::uint64_t v = 1; v < n_; ++v)
            if (out_degree(v) != d) return std::nullopt;
        return d;
    }

    std::uint64_t arc_count() const {
        std::uint64_t total = 0;
        for (auto w : bits_) total += static_cast<std::uint64_t>(std::popcount(w));
        return total;
    }

    bool operator==(const Graph& other) const { return n_ == other.n_ && bits_ == other.bits_; }

private:
    Graph(std::uint64_t n, std::uint64_t words, std::vector<std::uint64_t> bits, std::string label)
        : n_(n), words_(words), bits_(std::move(bits)), label_(std::move(label)) {
        for (std::uint64_t u = 0; u < n_; ++u) {
            require(!has_arc(u, u), ErrorKind::InvariantViolation, "graph has a loop at " + std::to_string(u));
            for (std::uint64_t v = u + 1; v < n_ && !directed_; ++v) {
                if (has_arc(u, v) != has_arc(v, u)) {
                    directed_ = true;
                    break;
                }
            }
        }
    }

    std::uint64_t n_ = 0;
    std::uint64_t words_ = 0;
    std::vector<std::uint64_t> bits_;
    std::string label_;
    bool directed_ = false;
};

inline Graph complete_graph(std::uint64_t n) {
    Graph::Builder b(n);
    for (std::uint64_t u = 0; u < n; ++u)
        for (std::uint64_t v = u + 1; v < n; ++v) b.add_edge(u, v);
    return std::move(b).finish("K" + std::to_string(n));
}

inline Graph cycle_graph(std::uint64_t n) {
    Graph::Builder b(n);
    for (std::uint64_t u = 0; u < n; ++u) b.add_edge(u, (u + 1) % n);
    return std::move(b).finish("C" + std::to_string(n));
}

inline Graph graph_from_edges(std::uint64_t n, std::span<const std::pair<std::uint64_t, std::uint64_t>> edges) {
    Graph::Builder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return std::move(b).finish();
}

/// Cay(R, S): arc v -> v + s for every s in S.
inline Graph cayley_graph(const LocalRing& R, const ConnectionSet& S) {
    Graph::Builder b(R.size());
    for (std::uint64_t v = 0; v < R.size(); ++v)
        for (auto s : S.elements) b.add_arc(v, R.add(static_cast<RingElement>(v), s));
    return std::move(b).finish("Cay(" + R.descriptor().str() + ", U(" + std::to_string(S.k) + "))");
}

/// G_R(k) for a ring descriptor.
inline Graph unitary_power_graph(const LocalRing& R, std::uint64_t k) { return cayley_graph(R, kth_power_set(R, k)); }

namespace detail {

using Count = unsigned __int128;

/// Cliques of `remaining` further vertices inside cand (a common neighbourhood
/// whose members all exceed the last chosen vertex).
inline Count count_within(const Graph& G, const std::uint64_t* cand, int remaining, std::vector<std::uint64_t>& scratch, int depth) {
    const std::uint64_t W = G.words();
    if (remaining == 1) {
        Count c = 0;
        for (std::uint64_t i = 0; i < W; ++i) c += static_cast<unsigned>(std::popcount(cand[i]));
        return c;
    }
    std::uint64_t* next = scratch.data() + static_cast<std::uint64_t>(depth) * W;
    Count total = 0;
    for (std::uint64_t wi = 0; wi < W; ++wi) {
        std::uint64_t word = cand[wi];
        while (word) {
            const std::uint64_t w = wi * 64 + static_cast<std::uint64_t>(std::countr_zero(word));
            word &= word - 1;
            const auto row = G.row(w);
            if (remaining == 2) {
                // Edge-centric leaf: popcount of cand & N(w) above w.
                std::uint64_t c = static_cast<std::uint64_t>(std::popcount(cand[wi] & row[wi] & ~((2ULL << (w & 63)) - 1)));
                for (std::uint64_t j = wi + 1; j < W; ++j) c += static_cast<std::uint64_t>(std::popcount(cand[j] & row[j]));
                total += c;
                continue;
            }
            bool any = false;
            for (std::uint64_t j = 0; j < W; ++j) {
                std::uint64_t v = j < wi ? 0 : cand[j] & row[j];
                if (j == wi) v &= ~((2ULL << (w & 63)) - 1);
                next[j] = v;
                any = any || v != 0;
            }
            if (any) total += count_within(G, next, remaining - 1, scratch, depth + 1);
        }
    }
    return total;
}

inline BigInt to_bigint(Count c) {
    BigInt hi = static_cast<std::uint64_t>(c >> 64);
    return (hi << 64) + static_cast<std::uint64_t>(c);
}

}  // namespace detail

/// Exact number of ell-cliques, 2 <= ell <= 6. Vertices are split across
/// threads; the reduction is an exact integer sum.
inline ExactCount count_cliques(const Graph& G, int ell, std::uint64_t vertex_cap = kCliqueCountCap, unsigned threads = 0) {
    require(ell >= 2 && ell <= 6, ErrorKind::BadArgument, "clique size must be in 2..6, got " + std::to_string(ell));
    require(!G.directed(), ErrorKind::DirectedGraph, "clique counting needs an undirected graph (symmetric connection set)");
    require(G.size() <= vertex_cap, ErrorKind::SizeCap,
            "clique counting is capped at " + std::to_string(vertex_cap) + " vertices, graph has " + std::to_string(G.size()));
    const std::uint64_t n = G.size(), W = G.words();
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(n, 1)));

    std::vector<detail::Count> partial(threads, 0);
    auto work = [&](unsigned tid) {
        std::vector<std::uint64_t> scratch(W * 8, 0);
        std::vector<std::uint64_t> cand(W, 0);
        detail::Count sum = 0;
        for (std::uint64_t u = tid; u < n; u += threads) {
            const auto row = G.row(u);
            const std::uint64_t wu = u / 64;
            bool any = false;
            for (std::uint64_t j = 0; j < W; ++j) {
                std::uint64_t v = j < wu ? 0 : row[j];
                if (j == wu) v &= ~((2ULL << (u & 63)) - 1);
                cand[j] = v;
                any = any || v != 0;
            }
            if (any) sum += detail::count_within(G, cand.data(), ell - 1, scratch, 0);
        }
        partial[tid] = sum;
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    detail::Count total = 0;
    for (auto c : partial) total += c;
    return detail::to_bigint(total);
}

namespace detail {

struct CliqueSearch {
    const Graph& G;
    std::uint64_t W;
    std::uint64_t best = 0;

    void expand(std::vector<std::uint64_t> P, std::uint64_t size) {
        // Greedy colouring gives an upper bound on the clique inside P.
        std::vector<std::uint64_t> order, colour;
        std::vector<std::uint64_t> uncoloured = P;
        std::uint64_t k = 0;
        while (std::any_of(uncoloured.begin(), uncoloured.end(), [](std::uint64_t w) { return w != 0; })) {
            ++k;
            std::vector<std::uint64_t> avail = uncoloured;
            for (std::uint64_t wi = 0; wi < W; ++wi) {
                while (avail[wi]) {
                    const std::uint64_t v = wi * 64 + static_cast<std::uint64_t>(std::countr_zero(avail[wi]));
                    avail[wi] &= avail[wi] - 1;
                    uncoloured[wi] &= ~(1ULL << (v % 64));
                    const auto row = G.row(v);
                    for (std::uint64_t j = 0; j < W; ++j) avail[j] &= ~row[j];
                    order.push_back(v);
                    colour.push_back(k);
                }
            }
        }
        for (std::size_t i = order.size(); i-- > 0;) {
            if (size + colour[i] <= best) return;
            const std::uint64_t v = order[i];
            const auto row = G.row(v);
            std::vector<std::uint64_t> next(W);
            bool any = false;
            for (std::uint64_t j = 0; j < W; ++j) {
                next[j] = P[j] & row[j];
                any = any || next[j] != 0;
            }
            if (any) {
                expand(std::move(next), size + 1);
            } else if (size + 1 > best) {
                best = size + 1;
            }
            P[v / 64] &= ~(1ULL << (v % 64));
        }
    }
};

}  // namespace detail

/// Exact clique number by branch and bound with a colouring bound.
inline std::uint64_t clique_number(const Graph& G, std::uint64_t vertex_cap = kCliqueNumberCap) {
    require(!G.directed(), ErrorKind::DirectedGraph, "clique number needs an undirected graph");
    require(G.size() <= vertex_cap, ErrorKind::SizeCap,
            "exact clique number is capped at " + std::to_string(vertex_cap) + " vertices");
    if (G.size() == 0) return 0;
    detail::CliqueSearch search{G, G.words()};
    std::vector<std::uint64_t> all(G.words(), 0);
    for (std::uint64_t v = 0; v < G.size(); ++v) all[v / 64] |= 1ULL << (v % 64);
    search.expand(std::move(all), 0);
    return search.best;
}

/// Balanced blow-up: vertex x becomes the block {x*m, ..., x*m + m-1}.
inline Graph blow_up(const Graph& G, std::uint64_t m) {
    require(m >= 1, ErrorKind::BadArgument, "blow-up order must be at least 1");
    require(!G.directed(), ErrorKind::DirectedGraph, "blow-up needs an undirected graph");
    require(G.size() * m <= kGraphSizeCap, ErrorKind::SizeCap, "blow-up exceeds the graph cap");
    Graph::Builder b(G.size() * m);
    for (std::uint64_t x = 0; x < G.size(); ++x)
        for (std::uint64_t y = 0; y < G.size(); ++y)
            if (G.has_arc(x, y))
                for (std::uint64_t i = 0; i < m; ++i)
                    for (std::uint64_t j = 0; j < m; ++j) b.add_arc(x * m + i, y * m + j);
    return std::move(b).finish(G.label() + "^(" + std::to_string(m) + ")");
}

/// Weak connectivity by bitset BFS over out- and in-arcs.
inline bool is_connected(const Graph& G) {
    const std::uint64_t n = G.size(), W = G.words();
    if (n <= 1) return true;
    std::vector<std::uint64_t> transpose;
    if (G.directed()) {
        transpose.assign(n * W, 0);
        for (std::uint64_t u = 0; u < n; ++u)
            for (std::uint64_t v = 0; v < n; ++v)
                if (G.has_arc(u, v)) transpose[v * W + u / 64] |= 1ULL << (u % 64);
    }
    std::vector<std::uint64_t> seen(W, 0);
    std::vector<std::uint64_t> stack{0};
    seen[0] = 1;
    std::uint64_t reached = 1;
    while (!stack.empty()) {
        const auto u = stack.back();
        stack.pop_back();
        const auto row = G.row(u);
        for (std::uint64_t j = 0; j < W; ++j) {
            std::uint64_t fresh = row[j] | (transpose.empty() ? 0 : transpose[u * W + j]);
            fresh &= ~seen[j];
            seen[j] |= fresh;
            while (fresh) {
                stack.push_back(j * 64 + static_cast<std::uint64_t>(std::countr_zero(fresh)));
                fresh &= fresh - 1;
                ++reached;
            }
        }
    }
    return reached == n;
}

/// Gamma(k, p^r) is connected iff n = (q-1)/gcd(k,q-1) divides no p^a - 1 with 1 <= a < r.
inline bool connected_criterion(std::uint64_t p, unsigned r, std::uint64_t k) {
    const std::uint64_t q = upow(p, r);
    const std::uint64_t n = (q - 1) / std::gcd(k, q - 1);
    std::uint64_t pa = 1;
    for (unsigned a = 1; a < r; ++a) {
        pa *= p;
        if ((pa - 1) % n == 0) return false;
    }
    return true;
}

struct BlowupReport {
    std::uint64_t q = 0;
    std::uint64_t m = 0;
    bool independent_cosets = false;
    bool quotient_matches = false;
    bool complete_bipartite = false;

    bool passed() const { return independent_cosets && quotient_matches && complete_bipartite; }
};

/// Checks G_R(k) against Gamma(k,q)^(m) with the cosets of m as blocks.
inline BlowupReport verify_blowup_structure(const LocalRing& R, std::uint64_t k) {
    const Graph G = unitary_power_graph(R, k);
    const LocalRing F = LocalRing::build(RingDescriptor{RingKind::Field, R.p(), R.r(), 1, 1});
    const Graph gamma = unitary_power_graph(F, k);
    const std::uint64_t q = R.q();

    BlowupReport report;
    report.q = q;
    report.m = R.m();
    report.independent_cosets = true;
    report.complete_bipartite = true;

    std::vector<RingElement> residues(R.size());
    for (std::uint64_t v = 0; v < R.size(); ++v) residues[v] = R.residue(static_cast<RingElement>(v));

    Graph::Builder quotient(q);
    std::vector<std::vector<ff::Element>> hit(R.size());
    for (std::uint64_t v = 0; v < R.size(); ++v) {
        const auto row = G.row(v);
        for (std::uint64_t j = 0; j < G.words(); ++j) {
            std::uint64_t word = row[j];
            while (word) {
                const std::uint64_t w = j * 64 + static_cast<std::uint64_t>(std::countr_zero(word));
                word &= word - 1;
                if (residues[w] == residues[v]) report.independent_cosets = false;
                else quotient.add_arc(residues[v], residues[w]);
                hit[v].push_back(residues[w]);
            }
        }
    }
    const Graph Q = std::move(quotient).finish();
    report.quotient_matches = report.independent_cosets && Q == gamma;

    for (std::uint64_t v = 0; v < R.size() && report.complete_bipartite; ++v) {
        auto& h = hit[v];
        std::sort(h.begin(), h.end());
        std::uint64_t blocks = 0;
        for (std::size_t i = 0; i < h.size();) {
            std::size_t jend = i;
            while (jend < h.size() && h[jend] == h[i]) ++jend;
            if (jend - i != R.m()) report.complete_bipartite = false;
            ++blocks;
            i = jend;
        }
        if (blocks != Q.out_degree(residues[v])) report.complete_bipartite = false;
    }
    return report;
}

}  // namespace paley
