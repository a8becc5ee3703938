#pragma once

#include "qva/rational.hpp"

#include <limits>
#include <map>
#include <string>

namespace qva {

/// Order value meaning "exact to all degrees" (polynomials and constants).
inline constexpr int kExactOrder = std::numeric_limits<int>::max() / 4;

/// Truncated Laurent series in one variable.  Coefficients at degrees >= order
/// are unknown (not zero); min_deg is a certified lower bound on the support.
struct TruncSeries {
    char var = 'x';
    int min_deg = 0;
    int order = kExactOrder;
    std::map<int, Scalar> coeffs;

    TruncSeries() = default;
    explicit TruncSeries(char v, int min_d = 0, int ord = kExactOrder)
        : var(v), min_deg(min_d), order(ord) {}

    static TruncSeries constant(const Scalar& c, char v = 'x') {
        TruncSeries s(v, 0, kExactOrder);
        if (!c.is_zero()) s.coeffs[0] = c;
        return s;
    }
    static TruncSeries one(char v = 'x') { return constant(Scalar(1), v); }

    /// Polynomial sum c[k] x^(lo+k), exact to all orders.
    static TruncSeries polynomial(const std::vector<Scalar>& c, int lo = 0, char v = 'x') {
        TruncSeries s(v, lo, kExactOrder);
        for (size_t k = 0; k < c.size(); ++k)
            if (!c[k].is_zero()) s.coeffs[lo + static_cast<int>(k)] = c[k];
        return s;
    }

    bool exact() const { return order >= kExactOrder; }
    bool known(int deg) const { return deg < order; }

    /// Coefficient at degree deg; throws if the degree is not certified.
    Scalar at(int deg) const {
        if (!known(deg))
            throw insufficient_order(
                "series coefficient at degree " + std::to_string(deg) +
                    " beyond truncation order " + std::to_string(order),
                deg + 1);
        auto it = coeffs.find(deg);
        return it == coeffs.end() ? Scalar(0) : it->second;
    }

    void set(int deg, const Scalar& c) {
        if (c.is_zero())
            coeffs.erase(deg);
        else
            coeffs[deg] = c;
        if (deg < min_deg) min_deg = deg;
    }

    /// Drops stored coefficients at degrees >= new_order.
    TruncSeries truncated(int new_order) const {
        TruncSeries r(var, min_deg, std::min(order, new_order));
        for (const auto& [d, c] : coeffs)
            if (d < r.order) r.coeffs.emplace(d, c);
        return r;
    }

    TruncSeries operator-() const {
        TruncSeries r(var, min_deg, order);
        for (const auto& [d, c] : coeffs) r.coeffs.emplace(d, -c);
        return r;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.var == b.var && a.order == b.order && a.coeffs == b.coeffs;
    }
};

namespace detail {
inline void check_var(const TruncSeries& a, const TruncSeries& b) {
    if (a.var != b.var)
        throw variable_mismatch(std::string("series variable mismatch: '") + a.var +
                                "' vs '" + b.var + "'");
}
inline int add_capped(int a, int b) {
    if (a >= kExactOrder || b >= kExactOrder) {
        long long s = static_cast<long long>(a) + b;
        return s >= kExactOrder ? kExactOrder : static_cast<int>(s);
    }
    return a + b;
}
} // namespace detail

inline TruncSeries series_add(const TruncSeries& a, const TruncSeries& b) {
    detail::check_var(a, b);
    TruncSeries r(a.var, std::min(a.min_deg, b.min_deg), std::min(a.order, b.order));
    for (const auto& [d, c] : a.coeffs)
        if (d < r.order) r.coeffs[d] = c;
    for (const auto& [d, c] : b.coeffs)
        if (d < r.order) {
            auto& acc = r.coeffs[d];
            acc += c;
            if (acc.is_zero()) r.coeffs.erase(d);
        }
    return r;
}

inline TruncSeries series_sub(const TruncSeries& a, const TruncSeries& b) {
    return series_add(a, -b);
}

inline TruncSeries series_scale(const TruncSeries& a, const Scalar& s) {
    TruncSeries r(a.var, a.min_deg, a.order);
    if (s.is_zero()) return r;
    for (const auto& [d, c] : a.coeffs) r.coeffs.emplace(d, c * s);
    return r;
}

inline TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
    detail::check_var(a, b);
    // Unknown a-coefficients (degree >= a.order) first pollute the product at
    // degree a.order + b.min_deg, and symmetrically.
    int ord = std::min(detail::add_capped(a.order, b.min_deg),
                       detail::add_capped(b.order, a.min_deg));
    TruncSeries r(a.var, a.min_deg + b.min_deg, ord);
    for (const auto& [da, ca] : a.coeffs)
        for (const auto& [db, cb] : b.coeffs) {
            int d = da + db;
            if (d >= ord) continue;
            auto& acc = r.coeffs[d];
            acc += ca * cb;
            if (acc.is_zero()) r.coeffs.erase(d);
        }
    return r;
}

/// Multiplicative inverse, computed to absolute order target_order (which is
/// further capped by what a's own truncation certifies).
inline TruncSeries series_inv(const TruncSeries& a, int target_order = kExactOrder) {
    // locate the actual leading term
    int lead = a.min_deg;
    while (lead < a.order && !a.coeffs.count(lead)) ++lead;
    if (lead >= a.order || !a.coeffs.count(lead))
        throw not_invertible("series has no certified nonzero leading coefficient");
    Scalar c0 = a.coeffs.at(lead);
    Scalar c0inv = c0.inverse();

    // relative degrees of the inverse certified up to a.order - lead
    long long rel_cert = a.exact() ? static_cast<long long>(kExactOrder)
                                   : static_cast<long long>(a.order) - lead;
    long long rel_target = static_cast<long long>(target_order) + lead;
    long long rel = std::min(rel_cert, rel_target);
    if (rel > kExactOrder) rel = kExactOrder;

    TruncSeries r(a.var, -lead,
                  rel >= kExactOrder ? kExactOrder : static_cast<int>(rel - lead));
    if (rel >= kExactOrder && a.coeffs.size() == 1) {
        // monomial: exact inverse
        r.coeffs[-lead] = c0inv;
        return r;
    }
    if (rel >= kExactOrder)
        throw invalid_parameter(
            "series_inv of a non-monomial exact series needs a finite target order");
    std::map<int, Scalar> inv; // relative-degree coefficients
    inv[0] = c0inv;
    for (long long k = 1; k < rel; ++k) {
        Scalar s(0);
        for (const auto& [d, c] : a.coeffs) {
            long long t = d - lead;
            if (t < 1 || t > k) continue;
            auto it = inv.find(static_cast<int>(k - t));
            if (it != inv.end()) s += c * it->second;
        }
        if (!s.is_zero()) inv[static_cast<int>(k)] = -c0inv * s;
    }
    r.order = static_cast<int>(rel) - lead;
    for (const auto& [k, c] : inv) r.coeffs.emplace(k - lead, c);
    return r;
}

/// Coefficientwise substitution x -> -x.
inline TruncSeries series_negate_var(const TruncSeries& a) {
    TruncSeries r(a.var, a.min_deg, a.order);
    for (const auto& [d, c] : a.coeffs) {
        Scalar v = (d % 2 == 0) ? c : -c;
        if (!v.is_zero()) r.coeffs.emplace(d, v);
    }
    return r;
}

inline TruncSeries series_derivative(const TruncSeries& a) {
    TruncSeries r(a.var, a.min_deg - 1,
                  a.exact() ? kExactOrder : a.order - 1);
    for (const auto& [d, c] : a.coeffs) {
        if (d == 0) continue;
        Scalar v = c * Scalar(Rat(d));
        if (!v.is_zero()) r.coeffs.emplace(d - 1, v);
    }
    return r;
}

/// Equality of all certified coefficients below `upto`.
inline bool series_agree(const TruncSeries& a, const TruncSeries& b, int upto) {
    detail::check_var(a, b);
    int hi = std::min({a.order, b.order, upto});
    for (const auto& [d, c] : a.coeffs)
        if (d < hi && !(b.coeffs.count(d) ? b.coeffs.at(d) == c : c.is_zero())) return false;
    for (const auto& [d, c] : b.coeffs)
        if (d < hi && !a.coeffs.count(d) && !c.is_zero()) return false;
    return true;
}

inline bool series_is_one(const TruncSeries& a, int upto) {
    return series_agree(a, TruncSeries::one(a.var), upto);
}

inline std::string to_string(const TruncSeries& a) {
    if (a.coeffs.empty()) return "0";
    std::string s;
    for (const auto& [d, c] : a.coeffs) {
        if (!s.empty()) s += " + ";
        std::string cs = to_string(c);
        if (d == 0) {
            s += cs;
        } else {
            if (cs == "1")
                ;
            else if (cs == "-1")
                s += "-";
            else
                s += "(" + cs + ")*";
            s += a.var;
            if (d != 1) s += "^" + std::to_string(d);
        }
    }
    if (!a.exact()) s += " + O(" + std::string(1, a.var) + "^" + std::to_string(a.order) + ")";
    return s;
}

} // namespace qva
