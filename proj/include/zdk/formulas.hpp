#pragma once

/**
 * @file formulas.hpp
 * @brief Closed-form global defensive k-alliance numbers and cardinality
 *        bounds for the ring families with known formulas.
 *
 * Every prediction is a pure function of family parameters and k; nothing
 * here looks at a graph or calls the solver. Each family is written as a list
 * of (interval, value) cases. Intervals [a, b] with a > b are empty.
 * Overlapping cases must agree; family_cases() exposes every applicable case
 * so callers can check that.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zdk/error.hpp"

namespace zdk {

enum class PredictionKind { ExactValue, Bounds, OutOfStatedRange };

struct FormulaPrediction {
    PredictionKind kind = PredictionKind::OutOfStatedRange;
    long long lower = 0;  ///< value for ExactValue
    long long upper = 0;
    std::string source;   ///< which case produced it, e.g. "two_fields:floor_sum"

    static FormulaPrediction exact(long long v, std::string src) {
        if (v < 1) throw InternalError("exact prediction below 1 from " + src);
        return {PredictionKind::ExactValue, v, v, std::move(src)};
    }
    static FormulaPrediction bounds(long long lo, long long hi, std::string src) {
        if (lo > hi) throw InternalError("inverted bounds from " + src);
        return {PredictionKind::Bounds, lo, hi, std::move(src)};
    }
    static FormulaPrediction out_of_range(std::string src) {
        return {PredictionKind::OutOfStatedRange, 0, 0, std::move(src)};
    }

    bool is_exact() const noexcept { return kind == PredictionKind::ExactValue; }
    long long value() const noexcept { return lower; }
};

inline std::string to_string(PredictionKind k) {
    switch (k) {
        case PredictionKind::ExactValue: return "exact";
        case PredictionKind::Bounds: return "bounds";
        case PredictionKind::OutOfStatedRange: return "out_of_range";
    }
    return "?";
}

/// Floor/ceiling division by 2 for any sign.
inline long long floor_half(long long v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }
inline long long ceil_half(long long v) { return -floor_half(-v); }

inline bool in_interval(long long k, long long lo, long long hi) { return lo <= k && k <= hi; }

/// One applicable piece of a piecewise formula.
struct FormulaCase {
    std::string tag;
    long long value;
};

namespace detail {

inline FormulaPrediction first_case(const std::vector<FormulaCase>& cases, const std::string& family) {
    if (cases.empty()) return FormulaPrediction::out_of_range(family);
    for (const auto& c : cases)
        if (c.value != cases.front().value)
            throw InternalError(family + ": overlapping cases " + cases.front().tag + " and " + c.tag + " disagree");
    return FormulaPrediction::exact(cases.front().value, family + ":" + cases.front().tag);
}

inline long long ipow(long long b, long long e) {
    long long v = 1;
    for (long long i = 0; i < e; ++i) v *= b;
    return v;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Complete graphs and local rings whose maximal ideal squares to zero
// ---------------------------------------------------------------------------

/// gamma_k^d(K_n) = ceil((n+k+1)/2) for k in [1-n, n-1].
inline std::vector<FormulaCase> complete_cases(long long n, long long k) {
    if (n < 1) throw InvalidParameter("complete graph needs n >= 1");
    if (in_interval(k, 1 - n, n - 1)) return {{"complete", ceil_half(n + k + 1)}};
    return {};
}

inline FormulaPrediction predict_complete(long long n, long long k) {
    return detail::first_case(complete_cases(n, k), "complete");
}

/// Local ring, M nilpotent of index 2, m = |M|: ceil((m+k)/2) on [2-m, m-2].
inline FormulaPrediction predict_local_index2(long long m, long long k) {
    if (m < 2) throw InvalidParameter("local_index2 needs |M| >= 2");
    if (in_interval(k, 2 - m, m - 2)) return FormulaPrediction::exact(ceil_half(m + k), "local_index2");
    return FormulaPrediction::out_of_range("local_index2");
}

/// Gamma(Z_{p^n}). n = 2 is a complete graph on p-1 vertices and goes through
/// predict_local_index2; n >= 3 uses ceil((p^{n-1}+k)/2) on [2-p^{n-1}, p-1].
inline FormulaPrediction predict_zpn(long long p, long long n, long long k) {
    if (p < 2 || n < 2) throw InvalidParameter("zpn needs p prime and n >= 2");
    if (n == 2) {
        auto pred = predict_local_index2(p, k);
        if (pred.is_exact()) pred.source = "zpn:n2_complete";
        return pred;
    }
    const long long top = detail::ipow(p, n - 1);
    if (in_interval(k, 2 - top, p - 1)) return FormulaPrediction::exact(ceil_half(top + k), "zpn");
    return FormulaPrediction::out_of_range("zpn");
}

// ---------------------------------------------------------------------------
// Products of fields
// ---------------------------------------------------------------------------

/// Gamma(F x K) with 2 <= f = |F| <= q = |K|.
inline std::vector<FormulaCase> two_fields_cases(long long f, long long q, long long k) {
    if (f < 2 || q < f) throw InvalidParameter("two_fields needs 2 <= |F| <= |K|");
    std::vector<FormulaCase> out;
    if (f == 2) {
        if (in_interval(k, 1 - q, 1)) out.push_back({"z2_field", ceil_half(q + k + 1)});
        return out;
    }
    if (k == 1 - q) out.push_back({"pair", 2});
    if (in_interval(k, 2 - q, 3 - f)) out.push_back({"star_side", ceil_half(q + k + 1)});
    if (in_interval(k, 4 - f, f - 1)) out.push_back({"floor_sum", floor_half(f + k) + floor_half(q + k)});
    return out;
}

inline FormulaPrediction predict_two_fields(long long f, long long q, long long k) {
    return detail::first_case(two_fields_cases(f, q, k), "two_fields");
}

enum class AllianceVariant { Global, GlobalStrong };  ///< gamma_a (k=-1), gamma_â (k=0)

/// Closed forms for gamma_a and gamma_â of Gamma(F x K), |F| = 2 meaning
/// Z_2 x K. Kept apart from the piecewise formula so the two can be compared.
inline long long closed_form_two_fields(long long f, long long q, AllianceVariant which) {
    if (f < 2 || q < f) throw InvalidParameter("closed_form_two_fields needs 2 <= |F| <= |K|");
    if (f == 2) {
        return which == AllianceVariant::Global ? floor_half(q - 1) + 1 : ceil_half(q) + 1;
    }
    return which == AllianceVariant::Global ? floor_half(f - 1) + floor_half(q - 1)
                                            : ceil_half(f - 1) + ceil_half(q - 1);
}

/// Gamma(Z_2 x Z_2 x F), f = |F| >= 2.
inline std::vector<FormulaCase> z2z2F_cases(long long f, long long k) {
    if (f < 2) throw InvalidParameter("z2z2F needs |F| >= 2");
    std::vector<FormulaCase> out;
    if (in_interval(k, 1 - 2 * f, 3 - 2 * f)) out.push_back({"three", 3});
    if (in_interval(k, 4 - 2 * f, 1)) out.push_back({"field_plus", f + ceil_half(1 + k)});
    return out;
}

inline FormulaPrediction predict_z2z2F(long long f, long long k) {
    return detail::first_case(z2z2F_cases(f, k), "z2z2F");
}

/// Gamma(Z_2 x F x K), 3 <= f <= q.
inline std::vector<FormulaCase> z2FK_cases(long long f, long long q, long long k) {
    if (f < 3 || q < f) throw InvalidParameter("z2FK needs 3 <= |F| <= |K|");
    std::vector<FormulaCase> out;
    const long long fq = f * q;
    if (in_interval(k, 1 - fq, 5 - fq)) out.push_back({"three", 3});
    if (in_interval(k, 6 - fq, 1)) out.push_back({"half", ceil_half(fq + k + 1)});
    return out;
}

inline FormulaPrediction predict_z2FK(long long f, long long q, long long k) {
    return detail::first_case(z2FK_cases(f, q, k), "z2FK");
}

// ---------------------------------------------------------------------------
// Z_2 x R for a finite local ring R that is not a field
// ---------------------------------------------------------------------------

/// Exact cases for Gamma(Z_2 x R); r = |R|, z = |Z(R)| = |M|.
inline std::vector<FormulaCase> z2_local_cases(long long r, long long z, bool m_index2, long long k) {
    if (z < 2 || r <= z) throw InvalidParameter("z2_local needs a local ring that is not a field");
    std::vector<FormulaCase> out;
    if (in_interval(k, 1 - r, 3 - r)) out.push_back({"pair", 2});
    if (in_interval(k, 4 - r, 4 - 2 * z)) out.push_back({"low_interval", ceil_half(r + k + 1)});
    if (k == -1) out.push_back({"k_minus1", ceil_half(r)});
    if (k == 0) out.push_back({"k0", ceil_half(r + 1)});
    if (k == 1) out.push_back({"k1", ceil_half(r) + 2});
    if (m_index2 && z >= 4 && in_interval(k, 5 - 2 * z, -2)) out.push_back({"index2", ceil_half(r + k + 1)});
    if (z == 2 && r == 4) {
        // R = Z_4 or Z_2[X]/(X^2)
        static const std::pair<long long, long long> table[] = {{-3, 2}, {-2, 2}, {-1, 2}, {0, 3}, {1, 4}};
        for (auto [kk, v] : table)
            if (kk == k) out.push_back({"m2_table", v});
    }
    if (z == 3 && r == 9) {
        // R = Z_9 or Z_3[X]/(X^2)
        static const std::pair<long long, long long> table[] = {{-8, 2}, {-7, 2}, {-6, 2}, {-5, 3}, {-4, 3},
                                                                {-3, 4}, {-2, 4}, {-1, 5}, {0, 5},  {1, 7}};
        for (auto [kk, v] : table)
            if (kk == k) out.push_back({"m3_table", v});
    }
    return out;
}

/// Lower/upper bound valid for every k in [1-|R|, 1] and any finite R.
inline std::pair<long long, long long> z2_ring_bounds(long long r, long long z, long long k) {
    return {ceil_half(r + k + 1), ceil_half(r + 2 * z + k - 1)};
}

inline FormulaPrediction predict_z2_local(long long r, long long z, bool m_index2, long long k) {
    auto cases = z2_local_cases(r, z, m_index2, k);
    if (!cases.empty()) return detail::first_case(cases, "z2_local");
    if (in_interval(k, 1 - r, 1)) {
        auto [lo, hi] = z2_ring_bounds(r, z, k);
        return FormulaPrediction::bounds(lo, hi, "z2_local:bounds");
    }
    return FormulaPrediction::out_of_range("z2_local");
}

// ---------------------------------------------------------------------------
// Bound expressions
// ---------------------------------------------------------------------------

/// A_k = 1 + g^2 - k g, or with a common-neighbour set of size L:
/// 1 + L + g^2 - g (k + L).
inline long long bound_Ak(long long gamma, long long k, std::optional<long long> lambda_size = std::nullopt) {
    if (gamma < 1) throw InvalidParameter("bound_Ak needs gamma >= 1");
    if (!lambda_size) return 1 + gamma * gamma - k * gamma;
    const long long l = *lambda_size;
    return 1 + l + gamma * gamma - gamma * (k + l);
}

struct BoundsBC {
    long long b;
    long long c;
};

/// B_k = 2g - k, C_k = 2 + g^2 - (k+1) g.
inline BoundsBC bound_Bk_Ck(long long gamma, long long k) {
    if (gamma < 1) throw InvalidParameter("bound_Bk_Ck needs gamma >= 1");
    return {2 * gamma - k, 2 + gamma * gamma - (k + 1) * gamma};
}

/// Alliance numbers of stars K_{1,s} and complete bipartite K_{r,s}.
inline long long predict_star_bipartite(long long r, long long s, AllianceVariant which) {
    if (r < 1 || s < 1) throw InvalidParameter("star/bipartite needs r, s >= 1");
    if (which == AllianceVariant::Global) {
        if (r == 1) return floor_half(s) + 1;
        if (s == 1) return floor_half(r) + 1;
        return floor_half(r) + floor_half(s);
    }
    return ceil_half(r) + ceil_half(s);
}

}  // namespace zdk
