#pragma once

/**
 * @file alliance.hpp
 * @brief Exact domination numbers and minimum global defensive k-alliances.
 *
 * solve() iterates the target cardinality s upward from a valid lower bound
 * and runs an include/exclude depth-first search over vertices in a fixed
 * order (degree descending, then ascending element id). The first feasible
 * set found at the smallest s is optimal. A partial set is pruned when
 *
 *   - a chosen vertex can no longer reach deg_S(x) >= deg_{S-bar}(x) + k even
 *     if every remaining pick were one of its neighbours, or
 *   - the undominated vertices cannot be covered by the remaining picks
 *     (sum of the largest remaining closed-neighbourhood coverages).
 *
 * Twin vertices (equal open or equal closed neighbourhoods) are
 * interchangeable by a graph automorphism, so within a twin class only
 * prefixes of the class in search order are explored.
 *
 * oracle_solve() is a separate plain enumeration in increasing popcount order
 * and shares no search code with solve().
 */

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "zdk/bitset.hpp"
#include "zdk/error.hpp"
#include "zdk/graph.hpp"

namespace zdk {

inline constexpr std::size_t kDefaultOracleCap = 22;

struct SolveOptions {
    std::uint64_t node_budget = 0;               ///< 0 = unlimited
    std::chrono::milliseconds time_budget{0};    ///< 0 = unlimited
    bool twin_symmetry = true;
};

struct AllianceProblem {
    const ZdGraph& graph;
    long long k;
};

enum class Verdict { Feasible, Infeasible };

struct AllianceSolution {
    Verdict verdict = Verdict::Infeasible;
    std::size_t size = 0;
    VertexSet witness;
    std::uint64_t nodes_explored = 0;
    std::chrono::microseconds elapsed{0};

    bool feasible() const noexcept { return verdict == Verdict::Feasible; }
};

struct DominationResult {
    std::size_t size = 0;
    VertexSet witness;
};

namespace detail {

inline long long half_up(long long v) { return v >= 0 ? (v + 1) / 2 : -((-v) / 2); }

class Budget {
public:
    explicit Budget(const SolveOptions& opt) : opt_(opt), start_(std::chrono::steady_clock::now()) {}

    void tick() {
        ++nodes_;
        if (opt_.node_budget && nodes_ > opt_.node_budget)
            throw BudgetExceeded("node budget of " + std::to_string(opt_.node_budget) + " exhausted");
        if (opt_.time_budget.count() && (nodes_ & 1023) == 0 &&
            std::chrono::steady_clock::now() - start_ > opt_.time_budget)
            throw BudgetExceeded("time budget of " + std::to_string(opt_.time_budget.count()) + " ms exhausted");
    }

    std::uint64_t nodes() const noexcept { return nodes_; }
    std::chrono::microseconds elapsed() const {
        return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start_);
    }

private:
    const SolveOptions& opt_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t nodes_ = 0;
};

/// Exact minimum dominating set by iterative deepening; branches on the
/// closed neighbourhood of the first undominated vertex.
class DominationSearch {
public:
    DominationSearch(const ZdGraph& g, Budget& budget) : g_(g), budget_(budget), n_(g.vertex_count()) {
        for (Vertex v = 0; v < n_; ++v) closed_.push_back(closed_neighborhood(g, v));
    }

    DominationResult run() {
        for (std::size_t s = 1; s <= n_; ++s) {
            VertexSet chosen(n_);
            if (dfs(VertexSet(n_), chosen, s)) return {s, chosen};
        }
        throw InternalError("no dominating set found");  // V itself dominates
    }

private:
    bool dfs(const VertexSet& covered, VertexSet& chosen, std::size_t budget_left) {
        budget_.tick();
        const std::size_t u = covered.complement().next(0);
        if (u >= n_) return true;
        if (budget_left == 0) return false;
        const VertexSet open = covered.complement();
        const std::size_t missing = open.count();
        std::size_t best = 0;
        for (Vertex c = 0; c < n_; ++c) best = std::max(best, closed_[c].count_and(open));
        if (best * budget_left < missing) return false;
        for (Vertex c = closed_[u].next(0); c < n_; c = closed_[u].next(c + 1)) {
            chosen.set(c);
            if (dfs(covered | closed_[c], chosen, budget_left - 1)) return true;
            chosen.reset(c);
        }
        return false;
    }

    const ZdGraph& g_;
    Budget& budget_;
    std::size_t n_;
    std::vector<VertexSet> closed_;
};

/// Twin class id per vertex: vertices share a class iff they have the same
/// open neighbourhood or the same closed neighbourhood.
inline std::vector<std::size_t> twin_classes(const ZdGraph& g) {
    const std::size_t n = g.vertex_count();
    std::map<std::vector<std::size_t>, std::vector<Vertex>> open_groups, closed_groups;
    for (Vertex v = 0; v < n; ++v) {
        open_groups[g.neighbors(v).indices()].push_back(v);
        closed_groups[closed_neighborhood(g, v).indices()].push_back(v);
    }
    std::vector<std::size_t> cls(n, n);
    std::size_t next = 0;
    for (const auto& [key, members] : open_groups) {
        if (members.size() < 2) continue;
        for (Vertex v : members) cls[v] = next;
        ++next;
    }
    for (const auto& [key, members] : closed_groups) {
        bool fresh = false;
        for (Vertex v : members)
            if (cls[v] == n) {
                cls[v] = next;
                fresh = true;
            }
        if (fresh) ++next;
    }
    return cls;
}

class AllianceSearch {
public:
    AllianceSearch(const ZdGraph& g, long long k, const SolveOptions& opt, Budget& budget)
        : k_(k), opt_(opt), budget_(budget), n_(g.vertex_count()) {
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), Vertex{0});
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
        std::vector<std::size_t> pos_of(n_);
        for (std::size_t i = 0; i < n_; ++i) pos_of[order_[i]] = i;

        nbr_.assign(n_, Bitset(n_));
        closed_.assign(n_, Bitset(n_));
        deg_.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            const Vertex v = order_[i];
            g.neighbors(v).for_each([&](std::size_t w) { nbr_[i].set(pos_of[w]); });
            closed_[i] = nbr_[i];
            closed_[i].set(i);
            deg_[i] = static_cast<long long>(g.degree(v));
        }
        later_.assign(n_ + 1, Bitset(n_));
        for (std::size_t i = n_; i-- > 0;) {
            later_[i] = later_[i + 1];
            later_[i].set(i);
        }

        const auto cls = twin_classes(g);
        cls_.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) cls_[i] = cls[order_[i]];
        closed_class_.assign(n_ + 1, 0);
    }

    /// Global defensive k-alliance of exactly `target` vertices, in original
    /// vertex indices, or an empty set.
    bool search(std::size_t target, VertexSet& witness) {
        in_.assign(n_, 0);
        dom_.assign(n_, 0);
        chosen_.clear();
        undominated_ = Bitset::full(n_);
        std::fill(closed_class_.begin(), closed_class_.end(), 0);
        if (!dfs(0, target)) return false;
        witness = Bitset(n_);
        for (auto i : chosen_) witness.set(order_[i]);
        return true;
    }

private:
    bool prune(std::size_t i, std::size_t r) const {
        if (r > n_ - i) return true;
        const auto rr = static_cast<long long>(r);
        for (auto x : chosen_) {
            const auto reachable = std::min(rr, static_cast<long long>(nbr_[x].count_and(later_[i])));
            if (2 * (in_[x] + reachable) - deg_[x] < k_) return true;
        }
        const std::size_t missing = undominated_.count();
        if (missing == 0) return false;
        if (r == 0) return true;
        for (auto u = undominated_.next(0); u < n_; u = undominated_.next(u + 1))
            if (!closed_[u].intersects(later_[i])) return true;
        cover_.clear();
        for (std::size_t c = i; c < n_; ++c) cover_.push_back(closed_[c].count_and(undominated_));
        const std::size_t take = std::min(r, cover_.size());
        std::partial_sort(cover_.begin(), cover_.begin() + static_cast<std::ptrdiff_t>(take), cover_.end(),
                          std::greater<>());
        std::size_t reach = 0;
        for (std::size_t j = 0; j < take; ++j) reach += cover_[j];
        return reach < missing;
    }

    void include(std::size_t x) {
        chosen_.push_back(x);
        nbr_[x].for_each([&](std::size_t y) { ++in_[y]; });
        closed_[x].for_each([&](std::size_t y) {
            if (dom_[y]++ == 0) undominated_.reset(y);
        });
    }

    void exclude_undo(std::size_t x) {
        chosen_.pop_back();
        nbr_[x].for_each([&](std::size_t y) { --in_[y]; });
        closed_[x].for_each([&](std::size_t y) {
            if (--dom_[y] == 0) undominated_.set(y);
        });
    }

    bool dfs(std::size_t i, std::size_t r) {
        budget_.tick();
        if (prune(i, r)) return false;
        if (r == 0) return true;
        if (i == n_) return false;

        const std::size_t c = cls_[i];
        if (!opt_.twin_symmetry || !closed_class_[c]) {
            include(i);
            if (dfs(i + 1, r - 1)) return true;
            exclude_undo(i);
        }
        const bool was_closed = closed_class_[c];
        if (opt_.twin_symmetry) closed_class_[c] = 1;
        const bool found = dfs(i + 1, r);
        closed_class_[c] = was_closed;
        return found;
    }

    long long k_;
    const SolveOptions& opt_;
    Budget& budget_;
    std::size_t n_;
    std::vector<Vertex> order_;
    std::vector<Bitset> nbr_, closed_, later_;
    std::vector<long long> deg_;
    std::vector<std::size_t> cls_;
    std::vector<char> closed_class_;

    std::vector<long long> in_;
    std::vector<std::size_t> dom_;
    std::vector<std::size_t> chosen_;
    Bitset undominated_;
    mutable std::vector<std::size_t> cover_;
};

}  // namespace detail

/// gamma(G) and one minimum dominating set.
inline DominationResult domination_number(const ZdGraph& g, const SolveOptions& opt = {}) {
    detail::Budget budget(opt);
    return detail::DominationSearch(g, budget).run();
}

/// Exact gamma_k^d(G), or Infeasible when no global defensive k-alliance
/// exists. Throws BudgetExceeded if a budget runs out first.
inline AllianceSolution solve(const AllianceProblem& problem, const SolveOptions& opt = {}) {
    const ZdGraph& g = problem.graph;
    detail::Budget budget(opt);
    const std::size_t n = g.vertex_count();

    // Any member x has deg_S(x) >= ceil((deg(x) + k) / 2), so |S| >= 1 + that for deg = delta.
    const DominationResult dom = detail::DominationSearch(g, budget).run();
    const long long degree_bound =
        1 + std::max(0LL, detail::half_up(static_cast<long long>(g.min_degree()) + problem.k));
    std::size_t lower = std::max<std::size_t>(dom.size, static_cast<std::size_t>(degree_bound));

    AllianceSolution out;
    detail::AllianceSearch search(g, problem.k, opt, budget);
    for (std::size_t s = lower; s <= n; ++s) {
        VertexSet w;
        if (search.search(s, w)) {
            if (!is_global_defensive_k_alliance(g, w, problem.k) || w.count() != s)
                throw InternalError("solver produced an invalid witness");
            out.verdict = Verdict::Feasible;
            out.size = s;
            out.witness = std::move(w);
            break;
        }
    }
    out.nodes_explored = budget.nodes();
    out.elapsed = budget.elapsed();
    return out;
}

/// Reference enumeration of all vertex subsets in increasing size. Only for
/// graphs with at most `max_vertices` (hard limit 63) vertices.
inline AllianceSolution oracle_solve(const AllianceProblem& problem, std::size_t max_vertices = kDefaultOracleCap) {
    const ZdGraph& g = problem.graph;
    const std::size_t n = g.vertex_count();
    if (n > max_vertices || n > 63)
        throw CapacityError("oracle limited to " + std::to_string(std::min<std::size_t>(max_vertices, 63)) +
                            " vertices, graph has " + std::to_string(n));
    const auto start = std::chrono::steady_clock::now();

    std::vector<std::uint64_t> adj(n, 0), closed(n, 0);
    std::vector<int> deg(n, 0);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v)
            if (u != v && g.adjacent(u, v)) adj[u] |= std::uint64_t{1} << v;
        closed[u] = adj[u] | (std::uint64_t{1} << u);
        deg[u] = std::popcount(adj[u]);
    }
    const std::uint64_t everything = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

    AllianceSolution out;
    std::uint64_t checked = 0;
    for (std::size_t s = 1; s <= n && !out.feasible(); ++s) {
        // Gosper's hack: all n-bit masks with popcount s in increasing order.
        std::uint64_t mask = (std::uint64_t{1} << s) - 1;
        while (mask <= everything && mask != 0) {
            ++checked;
            std::uint64_t covered = 0;
            bool ok = true;
            for (std::uint64_t m = mask; m; m &= m - 1) {
                const int x = std::countr_zero(m);
                covered |= closed[x];
                const int in = std::popcount(adj[x] & mask);
                if (in < (deg[x] - in) + problem.k) {
                    ok = false;
                    break;
                }
            }
            if (ok && covered == everything) {
                out.verdict = Verdict::Feasible;
                out.size = s;
                out.witness = Bitset(n);
                for (std::uint64_t m = mask; m; m &= m - 1) out.witness.set(std::countr_zero(m));
                break;
            }
            const std::uint64_t c = mask & (~mask + 1);
            const std::uint64_t r = mask + c;
            if (r == 0) break;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    out.nodes_explored = checked;
    out.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
    return out;
}

/// Exact results for every k in [-Delta, Delta].
inline std::map<long long, AllianceSolution> spectrum(const ZdGraph& g, const SolveOptions& opt = {}) {
    std::map<long long, AllianceSolution> out;
    const auto delta = static_cast<long long>(g.max_degree());
    for (long long k = -delta; k <= delta; ++k) out.emplace(k, solve({g, k}, opt));
    return out;
}

}  // namespace zdk
