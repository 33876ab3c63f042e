#pragma once

/**
 * @file ring.hpp
 * @brief Finite commutative rings with identity, given by enumerable elements.
 *
 * Elements are canonical ids 0..order-1. Id 0 is always the additive identity.
 * Z_n and GF(q) place the multiplicative identity at id 1; products and
 * idealizations use a mixed-radix encoding of their components (most
 * significant = first component), so their identity is wherever (1,...,1)
 * or (1,0,...,0) lands. Use FiniteRing::one() rather than assuming id 1.
 *
 * Arithmetic is evaluated from the construction on demand. Rings of order at
 * most kMemoOrder carry precomputed add/mul tables.
 */

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zdk/bitset.hpp"
#include "zdk/error.hpp"

namespace zdk {

using Element = std::uint32_t;

inline constexpr std::size_t kDefaultOrderCap = 4096;
inline constexpr std::size_t kMemoOrder = 256;

namespace detail {

class RingImpl {
public:
    virtual ~RingImpl() = default;
    virtual std::size_t order() const = 0;
    virtual Element add(Element a, Element b) const = 0;
    virtual Element mul(Element a, Element b) const = 0;
    virtual Element neg(Element a) const = 0;
    virtual Element one() const = 0;
    virtual std::string label(Element a) const = 0;
    virtual std::string name() const = 0;
};

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// base^exp, or nullopt once the value exceeds cap.
inline std::optional<std::size_t> checked_pow(std::size_t base, std::size_t exp, std::size_t cap) {
    std::size_t v = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (v > cap / base) return std::nullopt;
        v *= base;
    }
    return v;
}

}  // namespace detail

/// Immutable value handle to a finite commutative ring. Cheap to copy and
/// safe to share between threads.
class FiniteRing {
public:
    explicit FiniteRing(std::shared_ptr<const detail::RingImpl> impl) : impl_(std::move(impl)) {
        const std::size_t n = impl_->order();
        if (n <= kMemoOrder) {
            auto add = std::make_shared<std::vector<Element>>(n * n);
            auto mul = std::make_shared<std::vector<Element>>(n * n);
            for (Element a = 0; a < n; ++a)
                for (Element b = 0; b < n; ++b) {
                    (*add)[a * n + b] = impl_->add(a, b);
                    (*mul)[a * n + b] = impl_->mul(a, b);
                }
            add_table_ = std::move(add);
            mul_table_ = std::move(mul);
        }
    }

    std::size_t order() const noexcept { return impl_->order(); }

    Element add(Element a, Element b) const {
        return add_table_ ? (*add_table_)[a * order() + b] : impl_->add(a, b);
    }
    Element mul(Element a, Element b) const {
        return mul_table_ ? (*mul_table_)[a * order() + b] : impl_->mul(a, b);
    }
    Element neg(Element a) const { return impl_->neg(a); }
    Element sub(Element a, Element b) const { return add(a, neg(b)); }
    Element zero() const noexcept { return 0; }
    Element one() const { return impl_->one(); }

    /// Human-readable element, e.g. "6", "a+1", "(1,0,2)".
    std::string label(Element a) const { return impl_->label(a); }

    /// Construction string, e.g. "Z2 x GF(4)".
    std::string name() const { return impl_->name(); }

    /// Element whose label equals `text` (whitespace ignored), if any.
    std::optional<Element> find(std::string_view text) const {
        auto strip = [](std::string_view s) {
            std::string out;
            for (char c : s)
                if (c != ' ' && c != '\t') out.push_back(c);
            return out;
        };
        const std::string want = strip(text);
        for (Element a = 0; a < order(); ++a)
            if (strip(label(a)) == want) return a;
        return std::nullopt;
    }

private:
    std::shared_ptr<const detail::RingImpl> impl_;
    std::shared_ptr<const std::vector<Element>> add_table_;
    std::shared_ptr<const std::vector<Element>> mul_table_;
};

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

namespace detail {

class ZnImpl final : public RingImpl {
public:
    explicit ZnImpl(std::size_t n) : n_(static_cast<Element>(n)) {}
    std::size_t order() const override { return n_; }
    Element add(Element a, Element b) const override { return (a + b) % n_; }
    Element mul(Element a, Element b) const override {
        return static_cast<Element>((std::uint64_t{a} * b) % n_);
    }
    Element neg(Element a) const override { return a == 0 ? 0 : n_ - a; }
    Element one() const override { return 1 % n_; }
    std::string label(Element a) const override { return std::to_string(a); }
    std::string name() const override { return "Z" + std::to_string(n_); }

private:
    Element n_;
};

/// GF(p^k) as Z_p[a]/(f) with f the first monic irreducible of degree k.
/// Element id = sum c_i p^i for the coefficient vector (c_0, ..., c_{k-1}).
class GfImpl final : public RingImpl {
public:
    GfImpl(unsigned p, unsigned k, std::vector<unsigned> modulus)
        : p_(p), k_(k), order_(1), modulus_(std::move(modulus)) {
        for (unsigned i = 0; i < k_; ++i) order_ *= p_;
    }

    std::size_t order() const override { return order_; }

    Element add(Element a, Element b) const override {
        Element out = 0, scale = 1;
        for (unsigned i = 0; i < k_; ++i) {
            out += ((a % p_ + b % p_) % p_) * scale;
            a /= p_;
            b /= p_;
            scale *= p_;
        }
        return out;
    }

    Element neg(Element a) const override {
        Element out = 0, scale = 1;
        for (unsigned i = 0; i < k_; ++i) {
            out += ((p_ - a % p_) % p_) * scale;
            a /= p_;
            scale *= p_;
        }
        return out;
    }

    Element mul(Element a, Element b) const override {
        const auto x = digits(a), y = digits(b);
        std::vector<unsigned> prod(2 * k_ - 1, 0);
        for (unsigned i = 0; i < k_; ++i)
            for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
        // Reduce with a^k = -(m_0 + m_1 a + ... + m_{k-1} a^{k-1}).
        for (std::size_t d = prod.size(); d-- > k_;) {
            const unsigned c = prod[d];
            if (c == 0) continue;
            prod[d] = 0;
            for (unsigned i = 0; i < k_; ++i)
                prod[d - k_ + i] = (prod[d - k_ + i] + (p_ - modulus_[i]) % p_ * c) % p_;
        }
        Element out = 0, scale = 1;
        for (unsigned i = 0; i < k_; ++i) {
            out += prod[i] * scale;
            scale *= p_;
        }
        return out;
    }

    Element one() const override { return 1; }

    std::string label(Element a) const override {
        if (k_ == 1) return std::to_string(a);
        const auto c = digits(a);
        std::string out;
        for (unsigned i = k_; i-- > 0;) {
            if (c[i] == 0) continue;
            if (!out.empty()) out += "+";
            if (i == 0 || c[i] != 1) out += std::to_string(c[i]);
            if (i >= 1) out += "a";
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out.empty() ? "0" : out;
    }

    std::string name() const override {
        return k_ == 1 ? "GF(" + std::to_string(p_) + ")" : "GF(" + std::to_string(order_) + ")";
    }

    /// Non-leading coefficients of the defining polynomial, constant term first.
    const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

private:
    std::vector<unsigned> digits(Element a) const {
        std::vector<unsigned> d(k_);
        for (unsigned i = 0; i < k_; ++i) {
            d[i] = a % p_;
            a /= p_;
        }
        return d;
    }

    unsigned p_, k_;
    std::size_t order_;
    std::vector<unsigned> modulus_;
};

class ProductImpl final : public RingImpl {
public:
    explicit ProductImpl(std::vector<FiniteRing> factors) : factors_(std::move(factors)) {
        stride_.assign(factors_.size(), 1);
        for (std::size_t i = factors_.size() - 1; i-- > 0;)
            stride_[i] = stride_[i + 1] * factors_[i + 1].order();
        order_ = stride_[0] * factors_[0].order();
    }

    std::size_t order() const override { return order_; }
    Element add(Element a, Element b) const override {
        return combine(a, b, [](const FiniteRing& r, Element x, Element y) { return r.add(x, y); });
    }
    Element mul(Element a, Element b) const override {
        return combine(a, b, [](const FiniteRing& r, Element x, Element y) { return r.mul(x, y); });
    }
    Element neg(Element a) const override {
        return combine(a, a, [](const FiniteRing& r, Element x, Element) { return r.neg(x); });
    }
    Element one() const override {
        Element out = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i)
            out += factors_[i].one() * static_cast<Element>(stride_[i]);
        return out;
    }
    std::string label(Element a) const override {
        std::string out = "(";
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i) out += ",";
            out += factors_[i].label(component(a, i));
        }
        return out + ")";
    }
    std::string name() const override {
        std::string out;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i) out += " x ";
            const std::string n = factors_[i].name();
            out += n.find(" x ") != std::string::npos ? "(" + n + ")" : n;
        }
        return out;
    }

    Element component(Element a, std::size_t i) const {
        return static_cast<Element>((a / stride_[i]) % factors_[i].order());
    }
    const std::vector<FiniteRing>& factors() const noexcept { return factors_; }

private:
    template <typename Op>
    Element combine(Element a, Element b, Op op) const {
        Element out = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i)
            out += op(factors_[i], component(a, i), component(b, i)) * static_cast<Element>(stride_[i]);
        return out;
    }

    std::vector<FiniteRing> factors_;
    std::vector<std::size_t> stride_;
    std::size_t order_ = 0;
};

/// R(+)R^rank with (a,n)(b,m) = (ab, am + bn).
class IdealizationImpl final : public RingImpl {
public:
    IdealizationImpl(FiniteRing base, unsigned rank) : base_(std::move(base)), rank_(rank) {
        order_ = 1;
        for (unsigned i = 0; i <= rank_; ++i) order_ *= base_.order();
    }

    std::size_t order() const override { return order_; }

    Element add(Element a, Element b) const override {
        auto x = split(a), y = split(b);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = base_.add(x[i], y[i]);
        return join(x);
    }
    Element neg(Element a) const override {
        auto x = split(a);
        for (auto& c : x) c = base_.neg(c);
        return join(x);
    }
    Element mul(Element a, Element b) const override {
        const auto x = split(a), y = split(b);
        std::vector<Element> out(x.size());
        out[0] = base_.mul(x[0], y[0]);
        for (std::size_t i = 1; i < x.size(); ++i)
            out[i] = base_.add(base_.mul(x[0], y[i]), base_.mul(y[0], x[i]));
        return join(out);
    }
    Element one() const override {
        std::vector<Element> x(rank_ + 1, 0);
        x[0] = base_.one();
        return join(x);
    }
    std::string label(Element a) const override {
        const auto x = split(a);
        std::string out = "(";
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (i) out += ",";
            out += base_.label(x[i]);
        }
        return out + ")";
    }
    std::string name() const override { return "Id(" + base_.name() + ", " + std::to_string(rank_) + ")"; }

private:
    std::vector<Element> split(Element a) const {
        std::vector<Element> x(rank_ + 1);
        const auto b = static_cast<Element>(base_.order());
        for (std::size_t i = x.size(); i-- > 0;) {
            x[i] = a % b;
            a /= b;
        }
        return x;
    }
    Element join(const std::vector<Element>& x) const {
        const auto b = static_cast<Element>(base_.order());
        Element a = 0;
        for (auto c : x) a = a * b + c;
        return a;
    }

    FiniteRing base_;
    unsigned rank_;
    std::size_t order_ = 0;
};

/// Coefficients (constant first) of the lexicographically smallest monic
/// irreducible polynomial of degree k over Z_p, ordering by the coefficient
/// tuple from x^{k-1} down to x^0.
inline std::vector<unsigned> smallest_irreducible(unsigned p, unsigned k) {
    auto to_digits = [p](std::size_t t, unsigned len) {
        std::vector<unsigned> d(len);
        for (unsigned i = 0; i < len; ++i) {
            d[i] = static_cast<unsigned>(t % p);
            t /= p;
        }
        return d;
    };
    // Remainder of monic f (full coefficients, leading last) by monic g.
    auto divides = [p](std::vector<unsigned> f, const std::vector<unsigned>& g) {
        const std::size_t dg = g.size() - 1;
        for (std::size_t d = f.size() - 1; d >= dg; --d) {
            const unsigned c = f[d];
            if (c) {
                for (std::size_t i = 0; i <= dg; ++i)
                    f[d - dg + i] = (f[d - dg + i] + (p - g[i]) * c) % p;
            }
            if (d == dg) break;
        }
        for (std::size_t i = 0; i < dg; ++i)
            if (f[i]) return false;
        return true;
    };

    std::size_t span = 1;
    for (unsigned i = 0; i < k; ++i) span *= p;
    for (std::size_t t = 0; t < span; ++t) {
        auto low = to_digits(t, k);
        if (k == 1) return low;
        std::vector<unsigned> f = low;
        f.push_back(1);
        bool irreducible = true;
        for (unsigned d = 1; d <= k / 2 && irreducible; ++d) {
            std::size_t count = 1;
            for (unsigned i = 0; i < d; ++i) count *= p;
            for (std::size_t s = 0; s < count; ++s) {
                auto g = to_digits(s, d);
                g.push_back(1);
                if (divides(f, g)) {
                    irreducible = false;
                    break;
                }
            }
        }
        if (irreducible) return low;
    }
    throw InternalError("no irreducible polynomial of degree " + std::to_string(k) + " over Z" +
                        std::to_string(p));
}

}  // namespace detail

inline FiniteRing make_zn(long long n, std::size_t order_cap = kDefaultOrderCap) {
    if (n < 2) throw InvalidParameter("Z_n needs n >= 2, got " + std::to_string(n));
    if (static_cast<unsigned long long>(n) > order_cap)
        throw CapacityError("Z" + std::to_string(n) + " exceeds order cap " + std::to_string(order_cap));
    return FiniteRing(std::make_shared<detail::ZnImpl>(static_cast<std::size_t>(n)));
}

inline FiniteRing make_gf(long long p, long long k, std::size_t order_cap = kDefaultOrderCap) {
    if (p < 2 || !detail::is_prime(static_cast<std::uint64_t>(p)))
        throw InvalidParameter("GF(p,k) needs p prime, got " + std::to_string(p));
    if (k < 1) throw InvalidParameter("GF(p,k) needs k >= 1, got " + std::to_string(k));
    if (!detail::checked_pow(static_cast<std::size_t>(p), static_cast<std::size_t>(k), order_cap))
        throw CapacityError("GF(" + std::to_string(p) + "^" + std::to_string(k) + ") exceeds order cap " +
                            std::to_string(order_cap));
    const auto pu = static_cast<unsigned>(p), ku = static_cast<unsigned>(k);
    return FiniteRing(std::make_shared<detail::GfImpl>(pu, ku, detail::smallest_irreducible(pu, ku)));
}

inline FiniteRing make_product(std::vector<FiniteRing> factors, std::size_t order_cap = kDefaultOrderCap) {
    if (factors.size() < 2) throw InvalidParameter("a direct product needs at least two factors");
    std::size_t order = 1;
    for (const auto& f : factors) {
        if (order > order_cap / f.order())
            throw CapacityError("product order exceeds order cap " + std::to_string(order_cap));
        order *= f.order();
    }
    return FiniteRing(std::make_shared<detail::ProductImpl>(std::move(factors)));
}

inline FiniteRing make_idealization(FiniteRing base, long long rank, std::size_t order_cap = kDefaultOrderCap) {
    if (rank < 1) throw InvalidParameter("idealization rank must be >= 1, got " + std::to_string(rank));
    if (!detail::checked_pow(base.order(), static_cast<std::size_t>(rank) + 1, order_cap))
        throw CapacityError("idealization order exceeds order cap " + std::to_string(order_cap));
    return FiniteRing(std::make_shared<detail::IdealizationImpl>(std::move(base), static_cast<unsigned>(rank)));
}

// ---------------------------------------------------------------------------
// Subsets and structure
// ---------------------------------------------------------------------------

/// A set of element ids of one ring (Z(R), Ann(x), Nil(R), U(R), M, ...).
struct RingSubset {
    Bitset members;

    bool contains(Element x) const { return members.test(x); }
    std::size_t size() const { return members.count(); }
    std::vector<Element> elements() const {
        std::vector<Element> out;
        members.for_each([&](std::size_t i) { out.push_back(static_cast<Element>(i)); });
        return out;
    }
    friend bool operator==(const RingSubset&, const RingSubset&) = default;
};

/// Z(R), including 0.
inline RingSubset zero_divisors(const FiniteRing& r) {
    RingSubset z{Bitset(r.order())};
    z.members.set(0);
    for (Element x = 1; x < r.order(); ++x) {
        if (z.contains(x)) continue;
        for (Element y = 1; y < r.order(); ++y)
            if (r.mul(x, y) == 0) {
                z.members.set(x);
                z.members.set(y);
                break;
            }
    }
    return z;
}

inline RingSubset annihilator(const FiniteRing& r, Element x) {
    if (x >= r.order()) throw InvalidParameter("element id out of range");
    RingSubset a{Bitset(r.order())};
    for (Element y = 0; y < r.order(); ++y)
        if (r.mul(x, y) == 0) a.members.set(y);
    return a;
}

inline RingSubset units(const FiniteRing& r) {
    RingSubset u{Bitset(r.order())};
    const Element one = r.one();
    for (Element x = 0; x < r.order(); ++x)
        for (Element y = 0; y < r.order(); ++y)
            if (r.mul(x, y) == one) {
                u.members.set(x);
                break;
            }
    return u;
}

inline bool is_nilpotent(const FiniteRing& r, Element x) {
    Element power = x;
    for (std::size_t e = 1; e <= r.order(); ++e) {
        if (power == 0) return true;
        power = r.mul(power, x);
    }
    return false;
}

inline RingSubset nilradical(const FiniteRing& r) {
    RingSubset n{Bitset(r.order())};
    for (Element x = 0; x < r.order(); ++x)
        if (is_nilpotent(r, x)) n.members.set(x);
    return n;
}

inline bool is_reduced(const FiniteRing& r) { return nilradical(r).size() == 1; }

inline bool is_field(const FiniteRing& r) { return r.order() >= 2 && zero_divisors(r).size() == 1; }

/// Smallest additive subgroup containing `generators`.
inline RingSubset additive_closure(const FiniteRing& r, const RingSubset& generators) {
    RingSubset out{Bitset(r.order())};
    out.members.set(0);
    std::vector<Element> frontier{0};
    const auto gens = generators.elements();
    while (!frontier.empty()) {
        const Element x = frontier.back();
        frontier.pop_back();
        for (Element g : gens) {
            const Element y = r.add(x, g);
            if (!out.contains(y)) {
                out.members.set(y);
                frontier.push_back(y);
            }
        }
    }
    return out;
}

/// The ideal product I*J: additive closure of all ab with a in I, b in J.
inline RingSubset ideal_product(const FiniteRing& r, const RingSubset& i, const RingSubset& j) {
    RingSubset products{Bitset(r.order())};
    const auto je = j.elements();
    i.members.for_each([&](std::size_t a) {
        for (Element b : je) products.members.set(r.mul(static_cast<Element>(a), b));
    });
    return additive_closure(r, products);
}

struct LocalStructure {
    RingSubset maximal_ideal;
    std::optional<int> nilpotency_index;  ///< least t with M^t = 0, if any
};

/// Local iff Z(R) is closed under addition; then M = Z(R).
inline std::optional<LocalStructure> local_structure(const FiniteRing& r) {
    const RingSubset z = zero_divisors(r);
    const auto ze = z.elements();
    for (Element a : ze)
        for (Element b : ze)
            if (!z.contains(r.add(a, b))) return std::nullopt;

    LocalStructure ls{z, std::nullopt};
    RingSubset power = z;
    for (int t = 1; t <= static_cast<int>(r.order()) + 1; ++t) {
        if (power.size() == 1) {
            ls.nilpotency_index = t;
            break;
        }
        RingSubset next = ideal_product(r, power, z);
        if (next == power) break;
        power = std::move(next);
    }
    return ls;
}

}  // namespace zdk
