#pragma once

#include "qva/engine.hpp"
#include "qva/window.hpp"

#include <optional>

namespace qva {

/// One term of S(x)(v (x) u) = sum_i v_i (x) u_i (x) f_i; for the constant-Q
/// module the braiding factors are scalars.
struct BraidTerm {
    Scalar f;
    State u2;
    State v2;
};

/// S-locality data for a generator pair: the power k of (x1 - x2) needed and
/// the scalar braiding factor.
inline std::pair<int, Scalar> slocality_generator_data(Kind ku, int cu, Kind kv, int cv,
                                                       const QSpec& spec) {
    if (ku == kv) return {0, spec.qij(cu, cv)};
    // mixed kinds exchange with q_{ji}; the contact term needs one power
    if (ku == Kind::X) return {cu == cv ? 1 : 0, spec.qij(cv, cu)};
    return {cu == cv ? 1 : 0, spec.qij(cv, cu)};
}

namespace detail {
inline long long q_max_bound(const State& a, const State& b) {
    return HalfInt(state_max_weight(a).twice + state_max_weight(b).twice - 2).floor();
}
} // namespace detail

/// Verifies (x1-x2)^k Y(u,x1)Y(v,x2)s = (x1-x2)^k sum_i f_i Y(v_i,x2)Y(u_i,x1)s
/// as exact two-variable windows of states, exponents in [-radius, radius].
inline CheckReport slocality_verify(Engine& eng, const State& u, const State& v, int k,
                                    const std::vector<BraidTerm>& braiding,
                                    const std::vector<Word>& test_words, int radius) {
    CheckReport rep;
    for (const Word& sw : test_words) {
        State s = State::monomial(sw);
        auto lhs_plain = [&](long long e1, long long e2) {
            return eng.mode(u, -e1 - 1, eng.mode(v, -e2 - 1, s));
        };
        auto rhs_plain = [&](long long e1, long long e2) {
            State r;
            for (const BraidTerm& bt : braiding) {
                State t = eng.mode(bt.v2, -e2 - 1, eng.mode(bt.u2, -e1 - 1, s));
                if (!t.is_zero()) r += t.scaled(bt.f);
            }
            return r;
        };
        for (int c1 = -radius; c1 <= radius; ++c1)
            for (int c2 = -radius; c2 <= radius; ++c2) {
                State lhs, rhs;
                for (int t = 0; t <= k; ++t) {
                    Scalar c(Rat(binomial(k, t)));
                    if (t % 2 != 0) c = -c;
                    lhs += lhs_plain(c1 - (k - t), c2 - t).scaled(c);
                    rhs += rhs_plain(c1 - (k - t), c2 - t).scaled(c);
                }
                rep.record(lhs == rhs, "s-locality cell (" + std::to_string(c1) + "," +
                                           std::to_string(c2) + ") on " + to_string(sw));
            }
    }
    return rep;
}

struct SLocalityWitness {
    int k = 0;
    Scalar factor;
    CheckReport report;
};

/// For generator states u, v: returns (k, factor) read off the defining
/// relations and verifies the multiplied exchange identity against all basis
/// states of weight <= max_weight.
inline SLocalityWitness slocality_witness(Engine& eng, Kind ku, int cu, Kind kv, int cv,
                                          HalfInt max_weight, int radius) {
    auto [k, f] = slocality_generator_data(ku, cu, kv, cv, eng.spec());
    State u = gen_state(ku, cu), v = gen_state(kv, cv);
    std::vector<BraidTerm> braiding{{f, u, v}};
    auto basis = enumerate_basis(eng.spec(), max_weight);
    SLocalityWitness w{k, f, slocality_verify(eng, u, v, k, braiding, basis, radius)};
    return w;
}

/// (x0+x2)^l Y(u,x0+x2)Y(v,x2)w = (x0+x2)^l Y(Y(u,x0)v,x2)w with
/// l = ModeBound(u,w), compared as exact windows over exponents in
/// [-radius, radius]^2.
inline CheckReport weak_assoc_check(Engine& eng, const State& u, const State& v,
                                    const State& w, int radius) {
    CheckReport rep;
    const int l = eng.bound(u, w).annihilation_degree;
    const long long qmax = detail::q_max_bound(v, w);
    for (int c0 = -radius; c0 <= radius; ++c0)
        for (int c2 = -radius; c2 <= radius; ++c2) {
            State lhs;
            long long a_hi = l - 1 - c0;
            long long a_lo = l - 2 - c0 - c2 - qmax;
            for (long long a = a_lo; a <= a_hi; ++a) {
                long long t = l - a - 1 - c0;
                long long b = t - c2 - 1;
                Int bin = binomial(l - a - 1, t);
                if (bin == 0) continue;
                State inner = eng.mode(v, b, w);
                if (inner.is_zero()) continue;
                State term = eng.mode(u, a, inner);
                if (!term.is_zero()) lhs += term.scaled(Scalar(Rat(bin)));
            }
            State rhs;
            for (int j = 0; j <= l; ++j) {
                long long a = l - j - c0 - 1, b = j - c2 - 1;
                State iter = eng.mode(u, a, v);
                if (iter.is_zero()) continue;
                State term = eng.mode(iter, b, w);
                if (!term.is_zero()) rhs += term.scaled(Scalar(Rat(binomial(l, j))));
            }
            rep.record(lhs == rhs, "weak-assoc cell (" + std::to_string(c0) + "," +
                                       std::to_string(c2) + ")");
        }
    return rep;
}

/// The three terms of the S-Jacobi identity realized as exact three-variable
/// windows applied to w, for u (and the braiding anchor) a generator state or
/// the vacuum.  Cells are exponents of (x0, x1, x2) in [-radius, radius]^3.
inline CheckReport sjacobi_check(Engine& eng, const State& u, const State& v, const State& w,
                                 int radius) {
    CheckReport rep;
    // braiding data: scalar pair from the defining relations
    Scalar f(1);
    if (u.terms.size() == 1 && v.terms.size() == 1 && !u.terms.begin()->first.empty() &&
        !v.terms.begin()->first.empty()) {
        const Word& wu = u.terms.begin()->first;
        const Word& wv = v.terms.begin()->first;
        if (wu.size() == 1 && wv.size() == 1)
            f = slocality_generator_data(wu[0].kind, wu[0].color, wv[0].kind, wv[0].color,
                                         eng.spec())
                    .second;
    }
    const long long qmax_vw = detail::q_max_bound(v, w);
    const long long qmax_uw = detail::q_max_bound(u, w);
    const int luv = eng.bound(u, v).annihilation_degree;

    for (int c0 = -radius; c0 <= radius; ++c0)
        for (int c1 = -radius; c1 <= radius; ++c1)
            for (int c2 = -radius; c2 <= radius; ++c2) {
                const long long n = -c0 - 1;
                State t1;
                for (long long j = 0;; ++j) {
                    long long b = j - c2 - 1;
                    if (b > qmax_vw) break;
                    Int bin = binomial(n, j);
                    if (n >= 0 && j > n) break;
                    if (bin == 0) continue;
                    State inner = eng.mode(v, b, w);
                    if (inner.is_zero()) continue;
                    State term = eng.mode(u, n - j - c1 - 1, inner);
                    if (term.is_zero()) continue;
                    Int c = j % 2 == 0 ? bin : Int(-bin);
                    t1 += term.scaled(Scalar(Rat(c)));
                }
                State t2;
                for (long long j = 0;; ++j) {
                    long long a = j - c1 - 1;
                    if (a > qmax_uw) break;
                    Int bin = binomial(n, j);
                    if (n >= 0 && j > n) break;
                    if (bin == 0) continue;
                    State inner = eng.mode(u, a, w);
                    if (inner.is_zero()) continue;
                    State term = eng.mode(v, n - j - c2 - 1, inner);
                    if (term.is_zero()) continue;
                    Int c = (j + n) % 2 == 0 ? bin : Int(-bin);
                    t2 += term.scaled(Scalar(Rat(c)) * f);
                }
                State t3;
                for (long long j = 0;; ++j) {
                    long long a = j - c0 - 1;
                    if (a >= luv) break;
                    Int bin = binomial(c1 + j, j);
                    if (bin == 0) continue;
                    State iter = eng.mode(u, a, v);
                    if (iter.is_zero()) continue;
                    State term = eng.mode(iter, -c1 - j - c2 - 2, w);
                    if (term.is_zero()) continue;
                    Int c = j % 2 == 0 ? bin : Int(-bin);
                    t3 += term.scaled(Scalar(Rat(c)));
                }
                rep.record(t1 - t2 == t3, "s-jacobi cell (" + std::to_string(c0) + "," +
                                              std::to_string(c1) + "," + std::to_string(c2) +
                                              ")");
            }
    return rep;
}

/// u_p v_q w against the finite double-sum expansion
///   sum_{i=0}^{m} sum_{j=0}^{l} binom(p-l,i) binom(l,j) (u_{p-l-i+j}v)_{q+l+i-j} w
/// with l = ModeBound(u,w) and m = max(0, ModeBound(v,w) - q - 1).
inline CheckReport mode_product_check(Engine& eng, const State& u, const State& v,
                                      const State& w, long long p, long long q) {
    CheckReport rep;
    const int l = eng.bound(u, w).annihilation_degree;
    const long long mcap = std::max<long long>(0, eng.bound(v, w).annihilation_degree - q - 1);
    State lhs = eng.mode(u, p, eng.mode(v, q, w));
    State rhs;
    for (long long i = 0; i <= mcap; ++i) {
        Int ci = binomial(p - l, i);
        if (ci == 0) continue;
        for (int j = 0; j <= l; ++j) {
            Int c = ci * binomial(l, j);
            if (c == 0) continue;
            State iter = eng.mode(u, p - l - i + j, v);
            if (iter.is_zero()) continue;
            State term = eng.mode(iter, q + l + i - j, w);
            if (!term.is_zero()) rhs += term.scaled(Scalar(Rat(c)));
        }
    }
    rep.record(lhs == rhs,
               "mode product p=" + std::to_string(p) + " q=" + std::to_string(q));
    return rep;
}

} // namespace qva
