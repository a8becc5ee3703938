#pragma once

#include "qva/deformation.hpp"
#include "qva/window.hpp"

namespace qva {

/// The diagonal one-parameter S-operator on H (x) H, stored eigenvalue-wise on
/// the basis tags {a_1..a_l, b_1..b_l}.
struct DiagonalS {
    int l = 1;
    // entry[t1][t2] = eigenvalue series of S(x) on tag t1 (x) tag t2,
    // tags 0..l-1 = a_i, tags l..2l-1 = b_i
    std::vector<std::vector<TruncSeries>> entry;

    bool is_b(int tag) const { return tag >= l; }
    int color(int tag) const { return tag % l + 1; }
    std::string tag_name(int tag) const {
        return (is_b(tag) ? "b" : "a") + std::to_string(color(tag));
    }
};

/// S(x)(a_i (x) a_j) = q_ji(x); same for b_i (x) b_j; mixed pairs get
/// q_ij(-x).
inline DiagonalS build_S(const QSeriesSpec& spec, int to_order = -1) {
    if (to_order < 0) to_order = spec.order;
    auto qx = build_qx(spec, to_order);
    DiagonalS S;
    S.l = spec.l;
    S.entry.assign(2 * spec.l, std::vector<TruncSeries>(2 * spec.l));
    for (int t1 = 0; t1 < 2 * spec.l; ++t1)
        for (int t2 = 0; t2 < 2 * spec.l; ++t2) {
            int i = S.color(t1), j = S.color(t2);
            if (S.is_b(t1) == S.is_b(t2))
                S.entry[t1][t2] = qx[j - 1][i - 1];
            else
                S.entry[t1][t2] = series_negate_var(qx[i - 1][j - 1]);
        }
    return S;
}

/// S(x) S^{21}(-x) = 1: entry(t1,t2)(x) * entry(t2,t1)(-x) = 1 within order.
inline CheckReport unitarity_check(const DiagonalS& S, int order) {
    CheckReport rep;
    for (int t1 = 0; t1 < 2 * S.l; ++t1)
        for (int t2 = 0; t2 < 2 * S.l; ++t2) {
            TruncSeries prod =
                series_mul(S.entry[t1][t2], series_negate_var(S.entry[t2][t1]));
            rep.record(prod.order >= order && series_is_one(prod, order),
                       "unitarity on (" + S.tag_name(t1) + "," + S.tag_name(t2) + ")");
        }
    return rep;
}

struct QybeReport {
    CheckReport cells;
    long long inconclusive = 0;
    bool pass() const { return cells.pass(); }
    bool conclusive() const { return inconclusive == 0; }
};

/// S^{12}(x1) S^{13}(x1-x2) S^{23}(x2) = S^{23}(x2) S^{13}(x1-x2) S^{12}(x1)
/// per basis triple; each side is an independently executed product of three
/// commuting scalar windows over exponents [0, radius]^2.
inline QybeReport qybe_check(const DiagonalS& S, int order, int radius) {
    QybeReport rep;
    auto one_var_window = [&](const TruncSeries& s, int var_index) {
        CoeffWindow<Scalar> w(2, {'1', '2', 'z'}, {{{0, radius}, {0, radius}, {0, 0}}});
        w.zero_below[0] = w.zero_below[1] = true;
        for (int d = 0; d <= radius; ++d) {
            CellKey k{var_index == 0 ? d : 0, var_index == 1 ? d : 0, 0};
            if (!s.known(d)) {
                w.flag_invalid(k);
                continue;
            }
            auto it = s.coeffs.find(d);
            if (it != s.coeffs.end()) w.set(k, it->second);
        }
        return w;
    };
    for (int t1 = 0; t1 < 2 * S.l; ++t1)
        for (int t2 = 0; t2 < 2 * S.l; ++t2)
            for (int t3 = 0; t3 < 2 * S.l; ++t3) {
                auto s12 = one_var_window(S.entry[t1][t2].truncated(order), 0);
                auto s23 = one_var_window(S.entry[t2][t3].truncated(order), 1);
                auto s13 = expand_two_var(S.entry[t1][t3].truncated(order),
                                          ExpandRegion::InSecond, {'1', '2'}, {0, radius},
                                          {0, radius});
                auto lhs = multiply_windows(multiply_windows(s12, s13), s23);
                auto rhs = multiply_windows(multiply_windows(s23, s13), s12);
                WindowCompare cmp = compare_windows(lhs, rhs);
                rep.inconclusive += cmp.inconclusive;
                rep.cells.record(cmp.pass(), "qybe triple (" + S.tag_name(t1) + "," +
                                                 S.tag_name(t2) + "," + S.tag_name(t3) + ")");
            }
    return rep;
}

} // namespace qva
