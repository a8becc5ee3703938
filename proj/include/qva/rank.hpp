#pragma once

#include "qva/rational.hpp"

#include <map>
#include <vector>

namespace qva {

/// Rank over the exact field of a list of sparse vectors (index -> Scalar).
/// Deterministic fraction-free-ish elimination: repeatedly pick the pending row
/// whose leading index is smallest and eliminate it from the rest.
template <class Index>
int exact_rank(std::vector<std::map<Index, Scalar>> rows) {
    for (auto& r : rows)
        for (auto it = r.begin(); it != r.end();)
            it = it->second.is_zero() ? r.erase(it) : std::next(it);

    int rank = 0;
    std::vector<bool> used(rows.size(), false);
    while (true) {
        int pivot = -1;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (used[i] || rows[i].empty()) continue;
            if (pivot < 0 || rows[i].begin()->first < rows[pivot].begin()->first)
                pivot = static_cast<int>(i);
        }
        if (pivot < 0) break;
        used[pivot] = true;
        ++rank;
        const Index lead = rows[pivot].begin()->first;
        const Scalar inv = rows[pivot].begin()->second.inverse();
        for (size_t i = 0; i < rows.size(); ++i) {
            if (used[i] || rows[i].empty()) continue;
            auto it = rows[i].find(lead);
            if (it == rows[i].end()) continue;
            Scalar f = it->second * inv;
            for (const auto& [idx, v] : rows[pivot]) {
                auto jt = rows[i].find(idx);
                if (jt == rows[i].end()) {
                    Scalar nv = -f * v;
                    if (!nv.is_zero()) rows[i].emplace(idx, nv);
                } else {
                    jt->second -= f * v;
                    if (jt->second.is_zero()) rows[i].erase(jt);
                }
            }
        }
    }
    return rank;
}

/// Membership of v in the span of rows: adjoining v must not raise the rank.
template <class Index>
bool in_span(const std::vector<std::map<Index, Scalar>>& rows,
             const std::map<Index, Scalar>& v) {
    int r0 = exact_rank(rows);
    auto ext = rows;
    ext.push_back(v);
    return exact_rank(ext) == r0;
}

} // namespace qva
