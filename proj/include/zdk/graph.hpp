#pragma once

/**
 * @file graph.hpp
 * @brief Zero-divisor graph of a finite ring and the neighbourhood/degree
 *        vocabulary used by alliance predicates.
 *
 * Vertices are the nonzero zero-divisors in ascending element id; vertex i
 * carries ring element labels()[i]. Adjacency is one bitset per vertex.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zdk/bitset.hpp"
#include "zdk/error.hpp"
#include "zdk/ring.hpp"

namespace zdk {

inline constexpr std::size_t kMaxVertices = 4096;

using Vertex = std::size_t;

/// Vertex subset of one graph (S, S-bar, Lambda, N(S), N[S], ...).
using VertexSet = Bitset;

class ZdGraph {
public:
    /// Generic simple graph; used for zero-divisor graphs and for test graphs
    /// such as stars and complete bipartite graphs.
    static ZdGraph from_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                              std::vector<std::string> labels = {}, std::string name = "G") {
        if (n == 0) throw NoGraphError("graph has no vertices");
        if (n > kMaxVertices) throw CapacityError("graph exceeds " + std::to_string(kMaxVertices) + " vertices");
        ZdGraph g;
        g.name_ = std::move(name);
        g.adjacency_.assign(n, Bitset(n));
        for (auto [u, v] : edges) {
            if (u >= n || v >= n) throw InvalidParameter("edge endpoint out of range");
            if (u == v) throw InvalidParameter("self-loop in simple graph");
            g.adjacency_[u].set(v);
            g.adjacency_[v].set(u);
        }
        if (labels.empty())
            for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
        if (labels.size() != n) throw InvalidParameter("label count does not match vertex count");
        g.labels_ = std::move(labels);
        g.elements_.resize(n);
        for (std::size_t i = 0; i < n; ++i) g.elements_[i] = static_cast<Element>(i);
        g.finish();
        return g;
    }

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    const std::string& name() const noexcept { return name_; }

    /// Ring element id of each vertex.
    const std::vector<Element>& elements() const noexcept { return elements_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(Vertex v) const { return labels_.at(v); }

    /// Vertex carrying the given element label, if present.
    std::optional<Vertex> find(std::string_view label) const {
        std::string want;
        for (char c : label)
            if (c != ' ') want.push_back(c);
        for (Vertex v = 0; v < labels_.size(); ++v)
            if (labels_[v] == want) return v;
        return std::nullopt;
    }

    const Bitset& neighbors(Vertex v) const { return adjacency_.at(v); }
    bool adjacent(Vertex u, Vertex v) const { return adjacency_.at(u).test(v); }
    std::size_t degree(Vertex v) const { return degree_.at(v); }
    std::size_t max_degree() const noexcept { return max_degree_; }
    std::size_t min_degree() const noexcept { return min_degree_; }

    std::size_t edge_count() const noexcept {
        std::size_t sum = 0;
        for (auto d : degree_) sum += d;
        return sum / 2;
    }

    VertexSet empty_set() const { return VertexSet(vertex_count()); }
    VertexSet all() const { return VertexSet::full(vertex_count()); }

    /// Vertex set from element labels; throws on an unknown label.
    VertexSet set_of(const std::vector<std::string>& labels) const {
        VertexSet s = empty_set();
        for (const auto& l : labels) {
            auto v = find(l);
            if (!v) throw InvalidParameter("no vertex labelled " + l);
            s.set(*v);
        }
        return s;
    }

    friend ZdGraph build_graph(const FiniteRing& r);

private:
    void finish() {
        degree_.resize(adjacency_.size());
        for (std::size_t v = 0; v < adjacency_.size(); ++v) degree_[v] = adjacency_[v].count();
        max_degree_ = *std::max_element(degree_.begin(), degree_.end());
        min_degree_ = *std::min_element(degree_.begin(), degree_.end());
    }

    std::string name_;
    std::vector<Element> elements_;
    std::vector<std::string> labels_;
    std::vector<Bitset> adjacency_;
    std::vector<std::size_t> degree_;
    std::size_t max_degree_ = 0;
    std::size_t min_degree_ = 0;
};

/// Gamma(R): vertices Z(R)*, x ~ y iff xy = 0 and x != y.
inline ZdGraph build_graph(const FiniteRing& r) {
    const RingSubset z = zero_divisors(r);
    std::vector<Element> verts;
    z.members.for_each([&](std::size_t x) {
        if (x != 0) verts.push_back(static_cast<Element>(x));
    });
    if (verts.empty()) throw NoGraphError(r.name() + " has no nonzero zero-divisors");
    if (verts.size() > kMaxVertices)
        throw CapacityError("zero-divisor graph of " + r.name() + " exceeds " + std::to_string(kMaxVertices) +
                            " vertices");

    ZdGraph g;
    g.name_ = r.name();
    const std::size_t n = verts.size();
    g.elements_ = verts;
    g.adjacency_.assign(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i) {
        g.labels_.push_back(r.label(verts[i]));
        for (std::size_t j = i + 1; j < n; ++j)
            if (r.mul(verts[i], verts[j]) == 0) {
                g.adjacency_[i].set(j);
                g.adjacency_[j].set(i);
            }
    }
    g.finish();
    return g;
}

// ---------------------------------------------------------------------------
// Neighbourhoods and degrees
// ---------------------------------------------------------------------------

inline VertexSet open_neighborhood(const ZdGraph& g, const VertexSet& s) {
    VertexSet out = g.empty_set();
    s.for_each([&](std::size_t v) { out |= g.neighbors(v); });
    return out;
}

inline VertexSet open_neighborhood(const ZdGraph& g, Vertex x) { return g.neighbors(x); }

inline VertexSet closed_neighborhood(const ZdGraph& g, const VertexSet& s) { return open_neighborhood(g, s) | s; }

inline VertexSet closed_neighborhood(const ZdGraph& g, Vertex x) {
    VertexSet out = g.neighbors(x);
    out.set(x);
    return out;
}

/// deg_S(x) = |S ∩ N(x)|; x need not belong to S.
inline std::size_t deg_within(const ZdGraph& g, const VertexSet& s, Vertex x) {
    return g.neighbors(x).count_and(s);
}

inline bool is_dominating(const ZdGraph& g, const VertexSet& s) {
    return closed_neighborhood(g, s).count() == g.vertex_count();
}

/// Every x in S has deg_S(x) >= deg_{S-bar}(x) + k. k is read literally, even
/// outside [-Delta, Delta].
inline bool is_defensive_k_alliance(const ZdGraph& g, const VertexSet& s, long long k) {
    if (s.none()) throw InvalidParameter("alliance predicate needs a nonempty set");
    bool ok = true;
    s.for_each([&](std::size_t x) {
        const auto in = static_cast<long long>(deg_within(g, s, x));
        const auto out = static_cast<long long>(g.degree(x)) - in;
        if (in < out + k) ok = false;
    });
    return ok;
}

inline bool is_global_defensive_k_alliance(const ZdGraph& g, const VertexSet& s, long long k) {
    return is_defensive_k_alliance(g, s, k) && is_dominating(g, s);
}

// ---------------------------------------------------------------------------
// Export
// ---------------------------------------------------------------------------

enum class GraphFormat { Dot, Dimacs };

inline std::string export_graph(const ZdGraph& g, GraphFormat format) {
    std::ostringstream os;
    const std::size_t n = g.vertex_count();
    if (format == GraphFormat::Dimacs) {
        os << "c zero-divisor graph of " << g.name() << "\n";
        for (Vertex v = 0; v < n; ++v) os << "c vertex " << v + 1 << " " << g.label(v) << "\n";
        os << "p edge " << n << " " << g.edge_count() << "\n";
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = g.neighbors(u).next(u + 1); v < n; v = g.neighbors(u).next(v + 1))
                os << "e " << u + 1 << " " << v + 1 << "\n";
        return os.str();
    }
    os << "graph \"" << g.name() << "\" {\n";
    for (Vertex v = 0; v < n; ++v) os << "  v" << v << " [label=\"" << g.label(v) << "\"];\n";
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = g.neighbors(u).next(u + 1); v < n; v = g.neighbors(u).next(v + 1))
            os << "  v" << u << " -- v" << v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace zdk
