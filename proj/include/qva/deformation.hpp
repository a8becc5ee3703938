#pragma once

#include "qva/engine.hpp"
#include "qva/series.hpp"

#include <map>
#include <tuple>

namespace qva {

/// The deformed data (q_ij, p_ij(x), truncation order) defining the diagonal
/// S-operator: q_ij q_ji = 1, p_ij(0) = 1, p_ij = p_ji.
struct QSeriesSpec {
    int l = 1;
    std::vector<std::vector<Scalar>> q;
    std::vector<std::vector<TruncSeries>> p;
    int order = 8;

    QSeriesSpec() : q{{Scalar(1)}}, p{{TruncSeries::one()}} {}

    const Scalar& qij(int i, int j) const { return q[i - 1][j - 1]; }
    const TruncSeries& pij(int i, int j) const { return p[i - 1][j - 1]; }

    QSpec constant() const { return QSpec(l, q); }
};

inline void validate_qx(const QSeriesSpec& spec) {
    validate_q(spec.constant());
    if (static_cast<int>(spec.p.size()) != spec.l)
        throw invalid_parameter("p matrix must be l x l");
    for (const auto& row : spec.p)
        if (static_cast<int>(row.size()) != spec.l)
            throw invalid_parameter("p matrix must be l x l");
    for (int i = 1; i <= spec.l; ++i)
        for (int j = 1; j <= spec.l; ++j) {
            const TruncSeries& pij = spec.pij(i, j);
            if (pij.min_deg < 0) throw invalid_parameter("p_ij must be a power series");
            if (!(pij.at(0) == Scalar(1)))
                throw invalid_parameter("p_ij(0) must be 1 at (" + std::to_string(i) + "," +
                                        std::to_string(j) + ")");
            if (!(pij == spec.pij(j, i)))
                throw invalid_parameter("p must be symmetric at (" + std::to_string(i) + "," +
                                        std::to_string(j) + ")");
        }
}

/// q_ij(x) = q_ij p_ij(-x) / p_ij(x), certified at least to to_order.
/// Callers are responsible for validate_qx; skipping it here lets the
/// negative-control checks exercise deliberately broken data.
inline std::vector<std::vector<TruncSeries>> build_qx(const QSeriesSpec& spec,
                                                      int to_order = -1) {
    if (to_order < 0) to_order = spec.order;
    std::vector<std::vector<TruncSeries>> out(spec.l);
    for (int i = 1; i <= spec.l; ++i)
        for (int j = 1; j <= spec.l; ++j) {
            const TruncSeries& pij = spec.pij(i, j);
            TruncSeries inv = series_inv(pij, pij.exact() && pij.coeffs.size() == 1
                                                  ? kExactOrder
                                                  : to_order);
            out[i - 1].push_back(
                series_scale(series_mul(series_negate_var(pij), inv), spec.qij(i, j)));
        }
    return out;
}

/// A state with truncated-series coefficients: the carrier of Phi_i(x)w.
using SeriesState = std::map<Word, TruncSeries>;

inline void series_state_add(SeriesState& acc, const Word& w, const TruncSeries& s) {
    auto [it, fresh] = acc.try_emplace(w, s);
    if (!fresh) it->second = series_add(it->second, s);
}

/// Dressed-field engine on the constant-Q vacuum module: the
/// pseudo-automorphisms Phi_i(x) and the modes of
/// a^(i)(x) = Y(u^(i),x) Phi_i(x),  b^(i)(x) = Y(v^(i),x) Phi_i(x)^{-1}.
class DressedEngine {
public:
    explicit DressedEngine(QSeriesSpec spec, int work_order = -1)
        : sspec_(std::move(spec)), qc_(sspec_.constant()), eng_(qc_) {
        work_order_ = std::max(work_order, sspec_.order);
        build_tables();
    }

    const QSeriesSpec& series_spec() const { return sspec_; }
    const QSpec& constant_spec() const { return qc_; }
    Engine& engine() { return eng_; }

    /// Grows the certified working order; clears dependent caches.
    void ensure_order(int ord) {
        if (ord <= work_order_) return;
        work_order_ = ord;
        build_tables();
        phi_memo_.clear();
        dressed_memo_.clear();
    }
    int work_order() const { return work_order_; }

    /// Phi_i(x) (inverse = false) or Phi_i(x)^{-1} (inverse = true) applied to
    /// a state, recursively through the pseudo-endomorphism law
    /// Phi(x1) Y(v,x2) = Y(Phi(x1-x2)v, x2) Phi(x1).
    SeriesState phi(int i, const State& s, bool inverse = false) {
        SeriesState out;
        for (const auto& [w, c] : s.terms) {
            const SeriesState& part = phi_word(i, w, inverse);
            for (const auto& [pw, ps] : part) series_state_add(out, pw, series_scale(ps, c));
        }
        return out;
    }

    /// Exact state a^(i)_m s (kind = X) or b^(i)_m s (kind = Y).
    State dressed_mode(int i, Kind kind, long long m, const State& s) {
        State out;
        for (const auto& [w, c] : s.terms) {
            State part = dressed_mode_word(i, kind, m, w);
            if (!part.is_zero()) out += part.scaled(c);
        }
        return out;
    }

    /// Coefficient of x^d in a series state (exactness enforced).
    State series_state_coeff(const SeriesState& ss, int d) const {
        State out;
        for (const auto& [w, s] : ss) {
            if (!s.known(d))
                throw insufficient_order("series-state coefficient at degree " +
                                             std::to_string(d) + " not certified",
                                         d + 1);
            auto it = s.coeffs.find(d);
            if (it != s.coeffs.end()) out.add_term(w, it->second);
        }
        return out;
    }

    /// (-1)^s f^{(s)}(x)/s! for f = p_ij (inverse = false) or p_ij^{-1}.
    const TruncSeries& shift_series(int i, int j, bool inverse, int s) {
        auto& fam = tables_[key3(i, j, inverse)];
        while (static_cast<int>(fam.size()) <= s) {
            TruncSeries next = series_derivative(fam.back());
            next = series_scale(next, Scalar(Rat(-1, static_cast<long long>(fam.size()))));
            fam.push_back(std::move(next));
        }
        return fam[s];
    }

private:
    static long long key3(int i, int j, bool inv) {
        return (static_cast<long long>(i) << 24) | (j << 1) | (inv ? 1 : 0);
    }

    void build_tables() {
        tables_.clear();
        for (int i = 1; i <= sspec_.l; ++i)
            for (int j = 1; j <= sspec_.l; ++j) {
                const TruncSeries& pij = sspec_.pij(i, j);
                tables_[key3(i, j, false)] = {pij};
                int target = (pij.exact() && pij.coeffs.size() == 1) ? kExactOrder
                                                                     : work_order_;
                tables_[key3(i, j, true)] = {series_inv(pij, target)};
            }
    }

    const SeriesState& phi_word(int i, const Word& w, bool inverse) {
        auto key = std::make_tuple(i, inverse, w);
        if (auto it = phi_memo_.find(key); it != phi_memo_.end()) return it->second;

        SeriesState out;
        if (w.empty()) {
            out.emplace(Word{}, TruncSeries::one());
        } else {
            Gen g = w.front();
            Word rest(w.begin() + 1, w.end());
            const SeriesState inner = phi_word(i, rest, inverse);
            // Phi_i past an X_j picks up p_ij(x - x2); past a Y_j its inverse.
            bool use_inverse = (g.kind == Kind::X) ? inverse : !inverse;
            long long wt_hi = 0;
            for (const auto& [iw, is] : inner)
                wt_hi = std::max(wt_hi, word_weight(iw).twice);
            long long s_max = HalfInt(wt_hi - 1).floor() - g.mode;
            for (long long s = 0; s <= s_max; ++s) {
                const TruncSeries coeff = shift_series(i, g.color, use_inverse,
                                                       static_cast<int>(s));
                Gen shifted{g.kind, g.color, static_cast<int>(g.mode + s)};
                for (const auto& [iw, is] : inner) {
                    State moved = act(shifted, State::monomial(iw), qc_);
                    if (moved.is_zero()) continue;
                    TruncSeries factor = series_mul(coeff, is);
                    for (const auto& [mw, mc] : moved.terms)
                        series_state_add(out, mw, series_scale(factor, mc));
                }
            }
        }
        return phi_memo_.emplace(std::move(key), std::move(out)).first->second;
    }

    State dressed_mode_word(int i, Kind kind, long long m, const Word& w) {
        auto key = std::make_tuple(i, static_cast<int>(kind), m, w);
        if (auto it = dressed_memo_.find(key); it != dressed_memo_.end()) return it->second;

        // make sure the shift series cover every degree this call can touch
        long long need = word_weight(w).twice + std::llabs(m) + 4;
        ensure_order(static_cast<int>(std::max<long long>(need, work_order_)));

        const SeriesState ss = phi_word(i, w, kind == Kind::Y);
        State out;
        for (const auto& [pw, psr] : ss) {
            long long p_hi = HalfInt(word_weight(pw).twice - 1).floor();
            for (long long p = m; p <= p_hi; ++p) {
                State moved = act(Gen{kind, i, static_cast<int>(p)}, State::monomial(pw), qc_);
                if (moved.is_zero()) continue;
                Scalar c = psr.at(static_cast<int>(p - m)); // throws if uncertified
                if (c.is_zero()) continue;
                out += moved.scaled(c);
            }
        }
        dressed_memo_.emplace(std::move(key), out);
        return out;
    }

    QSeriesSpec sspec_;
    QSpec qc_;
    Engine eng_;
    int work_order_ = 8;
    std::map<long long, std::vector<TruncSeries>> tables_;
    std::map<std::tuple<int, bool, Word>, SeriesState> phi_memo_;
    std::map<std::tuple<int, int, long long, Word>, State> dressed_memo_;
};

/// Phi applied to a series state in the same variable (coefficient series
/// multiply through).
inline SeriesState phi_series(DressedEngine& de, int i, const SeriesState& ss, bool inverse) {
    SeriesState out;
    for (const auto& [w, f] : ss) {
        SeriesState part = de.phi(i, State::monomial(w), inverse);
        for (const auto& [pw, pf] : part) series_state_add(out, pw, series_mul(f, pf));
    }
    return out;
}

/// Phi_i(x1) Y(g,x2) = Y(Phi_i(x1-x2)g, x2) Phi_i(x1) on basis states, with
/// the left side evaluated reduce-then-dress and the right side through the
/// Taylor shift coefficients; compared degreewise up to cmp_order.
inline CheckReport pseudo_endo_law_check(DressedEngine& de, int i, HalfInt max_weight,
                                         int mode_lo, int mode_hi, int cmp_order) {
    CheckReport rep;
    const QSpec& qc = de.constant_spec();
    for (const Word& bw : enumerate_basis(qc, max_weight)) {
        State s = State::monomial(bw);
        for (int j = 1; j <= qc.l; ++j)
            for (Kind kind : {Kind::X, Kind::Y})
                for (int m = mode_lo; m <= mode_hi; ++m) {
                    bool use_inv = kind == Kind::Y;
                    SeriesState lhs = de.phi(i, act(Gen{kind, j, m}, s, qc), false);
                    SeriesState phis = de.phi(i, s, false);
                    SeriesState rhs;
                    long long s_hi = state_max_weight(s).twice + std::abs(m) + 2;
                    for (long long t = 0; t <= s_hi; ++t) {
                        TruncSeries coeff =
                            de.shift_series(i, j, use_inv, static_cast<int>(t));
                        Gen shifted{kind, j, static_cast<int>(m + t)};
                        for (const auto& [pw, pf] : phis) {
                            State moved = act(shifted, State::monomial(pw), qc);
                            if (moved.is_zero()) continue;
                            TruncSeries f = series_mul(coeff, pf);
                            for (const auto& [mw, mc] : moved.terms)
                                series_state_add(rhs, mw, series_scale(f, mc));
                        }
                    }
                    bool ok = true;
                    for (const auto& [w, f] : lhs)
                        if (!series_agree(f, rhs.count(w) ? rhs.at(w) : TruncSeries('x'),
                                          cmp_order))
                            ok = false;
                    for (const auto& [w, f] : rhs)
                        if (!lhs.count(w) && !series_agree(f, TruncSeries('x'), cmp_order))
                            ok = false;
                    rep.record(ok, "pseudo-endomorphism law at color " + std::to_string(j) +
                                       " mode " + std::to_string(m) + " on " + to_string(bw));
                }
    }
    return rep;
}

/// Phi_i(x1) Phi_j(x2) = Phi_j(x2) Phi_i(x1), compared cellwise on degrees in
/// [0, radius]^2.
inline CheckReport phi_commute_check(DressedEngine& de, int i, int j, HalfInt max_weight,
                                     int radius) {
    CheckReport rep;
    const QSpec& qc = de.constant_spec();
    for (const Word& bw : enumerate_basis(qc, max_weight)) {
        State s = State::monomial(bw);
        SeriesState pj = de.phi(j, s, false);
        SeriesState pi = de.phi(i, s, false);
        bool ok = true;
        for (int d1 = 0; d1 <= radius && ok; ++d1)
            for (int d2 = 0; d2 <= radius && ok; ++d2) {
                State one = de.series_state_coeff(de.phi(i, de.series_state_coeff(pj, d2),
                                                         false),
                                                  d1);
                State two = de.series_state_coeff(de.phi(j, de.series_state_coeff(pi, d1),
                                                         false),
                                                  d2);
                if (!(one == two)) ok = false;
            }
        rep.record(ok, "phi commutativity on " + to_string(bw));
    }
    return rep;
}

/// Phi_i(x) composed with Phi_i(x)^{-1} is the identity within order.
inline CheckReport phi_inverse_check(DressedEngine& de, int i, HalfInt max_weight,
                                     int cmp_order) {
    CheckReport rep;
    const QSpec& qc = de.constant_spec();
    for (const Word& bw : enumerate_basis(qc, max_weight)) {
        State s = State::monomial(bw);
        SeriesState comp = phi_series(de, i, de.phi(i, s, false), true);
        bool ok = true;
        for (const auto& [w, f] : comp) {
            TruncSeries expect =
                w == bw ? TruncSeries::one() : TruncSeries('x');
            if (!series_agree(f, expect, cmp_order)) ok = false;
        }
        if (!comp.count(bw)) ok = false;
        rep.record(ok, "phi inverse on " + to_string(bw));
    }
    return rep;
}

struct ZfReport {
    CheckReport cells;
    long long inconclusive = 0;
    bool pass() const { return cells.pass(); }
    bool conclusive() const { return inconclusive == 0; }
};

/// The three defining relation families of the deformed module, verified as
/// two-variable windows (exponents in [-radius, radius]^2) applied to every
/// basis state of weight <= max_weight.
inline ZfReport zf_relation_check(DressedEngine& de, int i, int j, int radius,
                                  HalfInt max_weight) {
    ZfReport rep;
    const QSeriesSpec& spec = de.series_spec();
    int qx_order = 2 * radius + static_cast<int>(max_weight.twice) + 4;
    auto qx = build_qx(spec, qx_order);
    const TruncSeries& qxij = qx[i - 1][j - 1];
    const TruncSeries& qxji = qx[j - 1][i - 1];

    auto basis = enumerate_basis(de.constant_spec(), max_weight);
    for (const Word& bw : basis) {
        State w = State::monomial(bw);
        long long wt2 = word_weight(bw).twice;

        // coeff of x1^{e1} x2^{e2} in F1(x1) F2(x2) w
        auto cell2 = [&](Kind k1, int col1, Kind k2, int col2, long long e1, long long e2) {
            State innerv = de.dressed_mode(col2, k2, -e2 - 1, w);
            if (innerv.is_zero()) return innerv;
            return de.dressed_mode(col1, k1, -e1 - 1, innerv);
        };

        struct Family {
            Kind k1, k2;      // field at x1, field at x2
            int c1, c2;
            const TruncSeries* braid; // evaluated at (x2-x1) or (x1-x2)
            bool arg_x2_minus_x1;
            bool delta;
        };
        std::vector<Family> fams = {
            {Kind::X, Kind::X, i, j, &qxij, true, false},
            {Kind::Y, Kind::Y, i, j, &qxij, true, false},
            {Kind::X, Kind::Y, i, j, &qxji, false, true},
        };

        for (const auto& fam : fams) {
            for (int c1 = -radius; c1 <= radius; ++c1)
                for (int c2 = -radius; c2 <= radius; ++c2) {
                    State lhs = cell2(fam.k1, fam.c1, fam.k2, fam.c2, c1, c2);
                    // braided side: sum over the expansion of braid((x2-x1)) or ((x1-x2))
                    State rhs;
                    bool inconclusive = false;
                    long long n_hi = c1 + c2 + (wt2 + 2) / 2 + 2;
                    for (long long n = 0; n <= n_hi; ++n) {
                        State block;
                        for (long long t = 0; t <= n; ++t) {
                            // (x2-x1)^n: x2^{n-t} x1^{t} coeff binom(n,t)(-1)^t
                            // (x1-x2)^n: x1^{n-t} x2^{t} coeff binom(n,t)(-1)^t
                            long long e1 = fam.arg_x2_minus_x1 ? c1 - t : c1 - (n - t);
                            long long e2 = fam.arg_x2_minus_x1 ? c2 - (n - t) : c2 - t;
                            // swapped operator order: the field at x1 acts first
                            State innerv = de.dressed_mode(fam.c1, fam.k1, -e1 - 1, w);
                            if (innerv.is_zero()) continue;
                            State val = de.dressed_mode(fam.c2, fam.k2, -e2 - 1, innerv);
                            if (val.is_zero()) continue;
                            Int bin = binomial(n, t);
                            Scalar cc(Rat(t % 2 == 0 ? bin : Int(-bin)));
                            block += val.scaled(cc);
                        }
                        if (block.is_zero()) continue;
                        if (!fam.braid->known(static_cast<int>(n))) {
                            inconclusive = true;
                            break;
                        }
                        auto itc = fam.braid->coeffs.find(static_cast<int>(n));
                        if (itc != fam.braid->coeffs.end())
                            rhs += block.scaled(itc->second);
                    }
                    if (inconclusive) {
                        ++rep.inconclusive;
                        continue;
                    }
                    State delta_term;
                    if (fam.delta && fam.c1 == fam.c2 && c1 + c2 == -1) delta_term = w;
                    State want = fam.delta ? lhs - rhs : lhs;
                    State have = fam.delta ? delta_term : rhs;
                    rep.cells.record(want == have,
                                     "zf cell (" + std::to_string(c1) + "," +
                                         std::to_string(c2) + ") on " + to_string(bw));
                }
        }
    }
    return rep;
}

} // namespace qva
