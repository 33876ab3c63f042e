#pragma once

// Ring expression language:
//
//   expr := term ( "x" term )*
//   term := "Z" digits | "GF(" digits ")" | "GF(" digits "," digits ")"
//         | "Id(" expr "," digits ")" | "(" expr ")"
//
// Whitespace is insignificant around tokens. "GF(q)" factors q = p^k.

#include <cctype>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "zdk/error.hpp"
#include "zdk/ring.hpp"

namespace zdk {

struct RingExpr;

namespace expr {
struct Zn {
    long long n;
};
struct GF {
    long long p;
    long long k;
};
struct Product {
    std::vector<RingExpr> factors;
};
struct Idealization {
    std::shared_ptr<RingExpr> base;
    long long rank;
};
}  // namespace expr

struct RingExpr {
    std::variant<expr::Zn, expr::GF, expr::Product, expr::Idealization> node;
};

inline bool operator==(const RingExpr& a, const RingExpr& b);

namespace expr {
inline bool operator==(const Zn& a, const Zn& b) { return a.n == b.n; }
inline bool operator==(const GF& a, const GF& b) { return a.p == b.p && a.k == b.k; }
inline bool operator==(const Product& a, const Product& b) { return a.factors == b.factors; }
inline bool operator==(const Idealization& a, const Idealization& b) {
    return a.rank == b.rank && *a.base == *b.base;
}
}  // namespace expr

inline bool operator==(const RingExpr& a, const RingExpr& b) { return a.node == b.node; }

inline RingExpr zn_expr(long long n) { return {expr::Zn{n}}; }
inline RingExpr gf_expr(long long p, long long k) { return {expr::GF{p, k}}; }
inline RingExpr product_expr(std::vector<RingExpr> f) { return {expr::Product{std::move(f)}}; }
inline RingExpr idealization_expr(RingExpr base, long long rank) {
    return {expr::Idealization{std::make_shared<RingExpr>(std::move(base)), rank}};
}

/// Canonical text; parses back to the same tree.
inline std::string to_string(const RingExpr& e) {
    struct Printer {
        std::string operator()(const expr::Zn& z) const { return "Z" + std::to_string(z.n); }
        std::string operator()(const expr::GF& g) const {
            return "GF(" + std::to_string(g.p) + "," + std::to_string(g.k) + ")";
        }
        std::string operator()(const expr::Product& p) const {
            std::string out;
            for (std::size_t i = 0; i < p.factors.size(); ++i) {
                if (i) out += " x ";
                const bool nested = std::holds_alternative<expr::Product>(p.factors[i].node);
                out += nested ? "(" + to_string(p.factors[i]) + ")" : to_string(p.factors[i]);
            }
            return out;
        }
        std::string operator()(const expr::Idealization& d) const {
            return "Id(" + to_string(*d.base) + "," + std::to_string(d.rank) + ")";
        }
    };
    return std::visit(Printer{}, e.node);
}

namespace detail {

class RingExprParser {
public:
    explicit RingExprParser(std::string_view text) : text_(text) {}

    RingExpr parse() {
        RingExpr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    RingExpr parse_expr() {
        std::vector<RingExpr> terms;
        terms.push_back(parse_term());
        while (true) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == 'x') {
                ++pos_;
                terms.push_back(parse_term());
            } else {
                break;
            }
        }
        if (terms.size() == 1) return std::move(terms.front());
        return product_expr(std::move(terms));
    }

    RingExpr parse_term() {
        skip_ws();
        if (pos_ >= text_.size()) fail("expected a ring term, found end of input");
        const std::size_t start = pos_;
        if (accept("GF")) {
            expect('(');
            const long long a = parse_digits();
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == ',') {
                ++pos_;
                const long long k = parse_digits();
                expect(')');
                if (!is_prime(static_cast<std::uint64_t>(a)))
                    throw ParseError("GF(p,k): " + std::to_string(a) + " is not prime", start);
                if (k < 1) throw ParseError("GF(p,k): k must be >= 1", start);
                return gf_expr(a, k);
            }
            expect(')');
            long long p = 0, k = 0;
            if (!prime_power(a, p, k))
                throw ParseError("GF(q): " + std::to_string(a) + " is not a prime power", start);
            return gf_expr(p, k);
        }
        if (accept("Id")) {
            expect('(');
            RingExpr base = parse_expr();
            expect(',');
            const long long rank = parse_digits();
            expect(')');
            if (rank < 1) throw ParseError("Id(R, n): rank must be >= 1", start);
            return idealization_expr(std::move(base), rank);
        }
        if (accept("Z")) {
            const long long n = parse_digits();
            if (n < 2) throw ParseError("Z_n needs n >= 2", start);
            return zn_expr(n);
        }
        if (text_[pos_] == '(') {
            ++pos_;
            RingExpr inner = parse_expr();
            expect(')');
            return inner;
        }
        fail("expected 'Z', 'GF(', 'Id(' or '('");
    }

    long long parse_digits() {
        skip_ws();
        const std::size_t start = pos_;
        long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (v > 1'000'000'000LL) throw ParseError("number too large", start);
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        if (pos_ == start) fail("expected digits");
        return v;
    }

    bool accept(std::string_view token) {
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    static bool prime_power(long long q, long long& p, long long& k) {
        if (q < 2) return false;
        p = 2;
        while (q % p != 0) ++p;
        k = 0;
        while (q % p == 0) {
            q /= p;
            ++k;
        }
        return q == 1;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse a ring expression. Throws ParseError with the byte offset on bad
/// syntax or a non-prime/non-prime-power field size.
inline RingExpr parse_ring_expr(std::string_view text) { return detail::RingExprParser(text).parse(); }

/// Build the ring via the make_* constructions. Cap violations surface as CapacityError.
inline FiniteRing evaluate(const RingExpr& e, std::size_t order_cap = kDefaultOrderCap) {
    struct Builder {
        std::size_t cap;
        FiniteRing operator()(const expr::Zn& z) const { return make_zn(z.n, cap); }
        FiniteRing operator()(const expr::GF& g) const { return make_gf(g.p, g.k, cap); }
        FiniteRing operator()(const expr::Product& p) const {
            std::vector<FiniteRing> factors;
            for (const auto& f : p.factors) factors.push_back(evaluate(f, cap));
            return make_product(std::move(factors), cap);
        }
        FiniteRing operator()(const expr::Idealization& d) const {
            return make_idealization(evaluate(*d.base, cap), d.rank, cap);
        }
    };
    return std::visit(Builder{order_cap}, e.node);
}

inline FiniteRing parse_ring(std::string_view text, std::size_t order_cap = kDefaultOrderCap) {
    return evaluate(parse_ring_expr(text), order_cap);
}

}  // namespace zdk
