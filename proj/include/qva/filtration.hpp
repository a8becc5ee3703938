#pragma once

#include "qva/deformation.hpp"
#include "qva/rank.hpp"

#include <vector>

namespace qva {

/// One level of the increasing mode-sum filtration: dressed words with
/// mode-sum >= -n applied to the vacuum.
struct FiltrationLevel {
    int n = 0;
    std::vector<Word> ops;         // dressed operator words
    std::vector<State> spanning;   // their values on the vacuum
    int rank = 0;
};

namespace detail {

/// All dressed operator words (modes <= -1) with mode-sum >= -n and nominal
/// weight <= max_weight, colors/kinds free, order significant.
inline std::vector<Word> dressed_words(int l, int n, HalfInt max_weight) {
    std::vector<Word> out;
    Word w;
    // budget counts sum of (-mode); nominal weight is budget - r/2
    std::function<void(long long)> rec = [&](long long budget) {
        out.push_back(w);
        for (long long k = 1; k <= budget; ++k) {
            long long used = 0;
            for (const Gen& g : w) used += -g.mode;
            if (2 * (used + k) - static_cast<long long>(w.size() + 1) > max_weight.twice)
                continue;
            for (int c = 1; c <= l; ++c)
                for (Kind kind : {Kind::X, Kind::Y}) {
                    w.push_back(Gen{kind, c, static_cast<int>(-k)});
                    rec(budget - k);
                    w.pop_back();
                }
        }
    };
    rec(n);
    return out;
}

inline State apply_dressed_word(DressedEngine& de, const Word& ops) {
    State s = vacuum();
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        if (s.is_zero()) break;
        s = de.dressed_mode(it->color, it->kind, it->mode, s);
    }
    return s;
}

} // namespace detail

inline FiltrationLevel filtration_F(DressedEngine& de, int n, HalfInt max_weight) {
    FiltrationLevel lvl;
    lvl.n = n;
    if (n < 0) return lvl; // F_n = 0 for n <= -1
    for (const Word& ops : detail::dressed_words(de.series_spec().l, n, max_weight)) {
        State s = detail::apply_dressed_word(de, ops);
        if (s.is_zero()) continue;
        lvl.ops.push_back(ops);
        lvl.spanning.push_back(std::move(s));
    }
    std::vector<std::map<Word, Scalar>> rows;
    rows.reserve(lvl.spanning.size());
    for (const State& s : lvl.spanning) rows.push_back(s.terms);
    lvl.rank = exact_rank(rows);
    return lvl;
}

struct GrRow {
    int n;
    HalfInt weight_cap;
    int dressed_dim;   // rank of F_n within nominal weight <= cap
    int dressed_quot;  // rank difference against F_{n-1}
    long long base_dim;
    long long base_quot;
};

struct GrReport {
    std::vector<GrRow> rows;
    bool pass = true;
};

/// Filtered/graded dimension comparison between the dressed model and the
/// constant-Q module: for every filtration degree n <= n_max and weight cap
/// w <= max_weight, the rank of the dressed spanning set must match the count
/// of normal words with mode-sum >= -n, and likewise for the quotients
/// F_n / F_{n-1}.
inline GrReport gr_compare(DressedEngine& de, int n_max, HalfInt max_weight) {
    GrReport rep;
    const QSpec qc = de.constant_spec();
    auto basis = enumerate_basis(qc, max_weight);
    auto mode_sum = [](const Word& w) {
        long long s = 0;
        for (const Gen& g : w) s += g.mode;
        return s;
    };

    for (long long wt = 0; wt <= max_weight.twice; ++wt) {
        HalfInt cap(wt);
        std::vector<int> dressed_rank(n_max + 2, 0);
        std::vector<long long> base_count(n_max + 2, 0);
        for (int n = 0; n <= n_max; ++n) {
            std::vector<std::map<Word, Scalar>> rows;
            for (const Word& ops : detail::dressed_words(qc.l, n, cap)) {
                State s = detail::apply_dressed_word(de, ops);
                if (!s.is_zero()) rows.push_back(s.terms);
            }
            dressed_rank[n + 1] = exact_rank(rows);
            long long count = 0;
            for (const Word& bw : basis)
                if (word_weight(bw) <= cap && mode_sum(bw) >= -n) ++count;
            base_count[n + 1] = count;
        }
        for (int n = 0; n <= n_max; ++n) {
            GrRow row{n,
                      cap,
                      dressed_rank[n + 1],
                      dressed_rank[n + 1] - dressed_rank[n],
                      base_count[n + 1],
                      base_count[n + 1] - base_count[n]};
            if (row.dressed_dim != row.base_dim || row.dressed_quot != row.base_quot)
                rep.pass = false;
            rep.rows.push_back(row);
        }
    }
    return rep;
}

/// a_k E_n subset E_{m+n} for the length filtration of the constant-Q module,
/// verified by rank-membership on sampled pairs of basis words.
inline CheckReport filtration_E_check(Engine& eng, int n_max, int mode_lo, int mode_hi,
                                      HalfInt max_weight) {
    CheckReport rep;
    auto basis = enumerate_basis(eng.spec(), max_weight);
    for (const Word& wa : basis) {
        int m = static_cast<int>(wa.size());
        if (m > n_max) continue;
        for (const Word& wb : basis) {
            int n = static_cast<int>(wb.size());
            if (n > n_max) continue;
            for (int k = mode_lo; k <= mode_hi; ++k) {
                State v = eng.mode(State::monomial(wa), k, State::monomial(wb));
                if (v.is_zero()) continue;
                // ambient: normal words of the occurring weights with length <= m+n
                HalfInt w = state_max_weight(v);
                std::vector<std::map<Word, Scalar>> rows;
                for (const Word& bw : enumerate_basis(eng.spec(), w))
                    if (static_cast<int>(bw.size()) <= m + n) {
                        std::map<Word, Scalar> row;
                        row.emplace(bw, Scalar(1));
                        rows.push_back(std::move(row));
                    }
                rep.record(in_span(rows, v.terms),
                           "a_k E_n membership: len(a)=" + std::to_string(m) +
                               " len(b)=" + std::to_string(n) + " k=" + std::to_string(k));
            }
        }
    }
    return rep;
}

struct HalfBasisReport {
    long long words = 0;
    int rank = 0;
    bool pass() const { return words == rank; }
};

/// Dressed u-only words in normal shape (per color: modes weakly decreasing
/// for q_ii = 1, strictly decreasing for q_ii = -1; colors ascending) up to
/// the weight cap must be linearly independent.
inline HalfBasisReport half_basis_check(DressedEngine& de, HalfInt max_weight) {
    const QSpec qc = de.constant_spec();
    std::vector<Word> shapes;
    Word w;
    std::function<void(int, long long)> rec = [&](int color, long long budget) {
        if (color > qc.l) {
            shapes.push_back(w);
            return;
        }
        bool strict = qc.qij(color, color) == Scalar(-1);
        std::function<void(long long, long long)> block = [&](long long maxn, long long left) {
            rec(color + 1, left); // close this color block
            for (long long nn = std::min(maxn, (left + 1) / 2); nn >= 1; --nn) {
                if (2 * nn - 1 > left) continue;
                w.push_back(Gen{Kind::X, color, static_cast<int>(-nn)});
                block(strict ? nn - 1 : nn, left - (2 * nn - 1));
                w.pop_back();
            }
        };
        block(std::numeric_limits<long long>::max() / 4, budget);
    };
    rec(1, max_weight.twice);

    HalfBasisReport rep;
    std::vector<std::map<Word, Scalar>> rows;
    for (const Word& ops : shapes) {
        State s = detail::apply_dressed_word(de, ops);
        ++rep.words;
        if (!s.is_zero()) rows.push_back(s.terms);
    }
    rep.rank = exact_rank(rows);
    return rep;
}

} // namespace qva
