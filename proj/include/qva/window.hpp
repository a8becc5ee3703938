#pragma once

#include "qva/series.hpp"

#include <array>
#include <functional>
#include <set>
#include <vector>

namespace qva {

using CellKey = std::array<int, 3>;

enum class ExpandRegion { InSecond, InFirst };

/// Finite box of multi-degree coefficients (1-3 variables) with per-cell
/// exactness flags.  Comparisons only consume cells valid in both operands.
template <class P>
struct CoeffWindow {
    int nvars = 1;
    std::array<char, 3> vars{'x', 'y', 'z'};
    std::array<std::pair<int, int>, 3> box{};
    std::map<CellKey, P> cells;    // nonzero values of certified cells
    std::set<CellKey> invalid;     // cells inside the box that are not certified
    /// zero_below[t]: all cells with coordinate t below the box are exactly 0.
    std::array<bool, 3> zero_below{false, false, false};

    CoeffWindow() = default;
    CoeffWindow(int n, std::array<char, 3> v, std::array<std::pair<int, int>, 3> b)
        : nvars(n), vars(v), box(b) {}

    bool in_box(const CellKey& k) const {
        for (int t = 0; t < nvars; ++t)
            if (k[t] < box[t].first || k[t] > box[t].second) return false;
        return true;
    }
    bool valid(const CellKey& k) const { return in_box(k) && !invalid.count(k); }

    P value(const CellKey& k) const {
        auto it = cells.find(k);
        return it == cells.end() ? P{} : it->second;
    }

    void set(const CellKey& k, P v) {
        if (v == P{})
            cells.erase(k);
        else
            cells[k] = std::move(v);
    }
    void flag_invalid(const CellKey& k) {
        invalid.insert(k);
        cells.erase(k);
    }

    std::vector<CellKey> all_cells() const {
        std::vector<CellKey> out;
        CellKey k{0, 0, 0};
        std::function<void(int)> rec = [&](int t) {
            if (t == nvars) {
                out.push_back(k);
                return;
            }
            for (int d = box[t].first; d <= box[t].second; ++d) {
                k[t] = d;
                rec(t + 1);
            }
        };
        rec(0);
        return out;
    }
};

struct WindowCompare {
    long long checked = 0;
    long long mismatched = 0;
    long long inconclusive = 0;
    CellKey first_mismatch{0, 0, 0};
    bool pass() const { return mismatched == 0; }
    bool conclusive() const { return inconclusive == 0; }
};

template <class P>
WindowCompare compare_windows(const CoeffWindow<P>& a, const CoeffWindow<P>& b) {
    WindowCompare r;
    for (const auto& k : a.all_cells()) {
        if (!b.in_box(k)) continue;
        if (!a.valid(k) || !b.valid(k)) {
            ++r.inconclusive;
            continue;
        }
        ++r.checked;
        if (!(a.value(k) == b.value(k))) {
            if (r.mismatched == 0) r.first_mismatch = k;
            ++r.mismatched;
        }
    }
    return r;
}

/// Coefficients of a(x_u - x_v) expanded as a power series in the designated
/// variable (InSecond: nonnegative powers of x_v; InFirst: of x_u).  A cell
/// (d1, d2) only receives contributions from the degree-(d1+d2) coefficient of
/// a, so it is exact iff d1 + d2 < a.order; cells with negative degree in the
/// designated variable are exactly zero.
inline CoeffWindow<Scalar> expand_two_var(const TruncSeries& a, ExpandRegion region,
                                          std::array<char, 2> vars,
                                          std::pair<int, int> box1,
                                          std::pair<int, int> box2) {
    CoeffWindow<Scalar> w(2, {vars[0], vars[1], 'z'}, {box1, box2, {0, 0}});
    if (a.min_deg >= 0) {
        // support confined to the nonnegative quadrant
        w.zero_below[0] = box1.first <= 0;
        w.zero_below[1] = box2.first <= 0;
    }
    for (const auto& k : w.all_cells()) {
        int d1 = k[0], d2 = k[1];
        int designated = region == ExpandRegion::InSecond ? d2 : d1;
        if (designated < 0) continue; // certified zero
        int n = d1 + d2;
        if (!a.known(n)) {
            w.flag_invalid(k);
            continue;
        }
        auto it = a.coeffs.find(n);
        if (it == a.coeffs.end()) continue;
        // (x_u - x_v)^n expanded with j >= 0 powers of the designated variable
        int j = designated;
        Scalar c = it->second * Scalar(Rat(binomial(n, j)));
        if (j % 2 != 0) c = -c;
        if (region == ExpandRegion::InFirst && n % 2 != 0) c = -c;
        w.set(k, c);
    }
    return w;
}

/// Convolution product of scalar windows.  Requires both factors to be
/// certified zero below their boxes in every variable (power-series shaped
/// supports); a result cell is certified only when every contributing source
/// pair lies inside the certified boxes.
inline CoeffWindow<Scalar> multiply_windows(const CoeffWindow<Scalar>& a,
                                            const CoeffWindow<Scalar>& b) {
    if (a.nvars != b.nvars) throw variable_mismatch("window arity mismatch");
    for (int t = 0; t < a.nvars; ++t)
        if (!a.zero_below[t] || !b.zero_below[t])
            throw invalid_parameter("multiply_windows needs zero_below factors");

    CoeffWindow<Scalar> w(a.nvars, a.vars, a.box);
    for (int t = 0; t < a.nvars; ++t) {
        w.box[t].first = a.box[t].first + b.box[t].first;
        w.box[t].second = std::min(a.box[t].second + b.box[t].first,
                                   b.box[t].second + a.box[t].first);
        w.zero_below[t] = true;
    }
    for (const auto& k : w.all_cells()) {
        bool bad = false;
        Scalar acc(0);
        CellKey ka{0, 0, 0};
        std::function<void(int)> rec = [&](int t) {
            if (bad) return;
            if (t == a.nvars) {
                CellKey kb{0, 0, 0};
                for (int s = 0; s < a.nvars; ++s) kb[s] = k[s] - ka[s];
                if (!a.valid(ka) || !b.valid(kb)) {
                    bad = true;
                    return;
                }
                acc += a.value(ka) * b.value(kb);
                return;
            }
            int lo = std::max(a.box[t].first, k[t] - b.box[t].second);
            int hi = std::min(a.box[t].second, k[t] - b.box[t].first);
            for (int d = lo; d <= hi && !bad; ++d) {
                ka[t] = d;
                rec(t + 1);
            }
        };
        rec(0);
        if (bad)
            w.flag_invalid(k);
        else
            w.set(k, acc);
    }
    return w;
}

} // namespace qva
