#pragma once

#include "qva/vacuum.hpp"

#include <unordered_map>

namespace qva {

/// L(u,w) = 1 + max{p : u_p w != 0}, clamped to >= 0.  Only p >= 0 can
/// contribute to the clamped value, so the scan stays in annihilation modes.
struct ModeBound {
    int annihilation_degree = 0;
};

namespace detail {

struct MemoKey {
    Word a;
    long long n;
    Word b;
    friend bool operator==(const MemoKey& x, const MemoKey& y) {
        return x.n == y.n && x.a == y.a && x.b == y.b;
    }
};

struct MemoKeyHash {
    static void mix(size_t& h, size_t v) {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    size_t operator()(const MemoKey& k) const {
        size_t h = std::hash<long long>()(k.n);
        for (const Gen& g : k.a) {
            mix(h, static_cast<size_t>(g.mode) * 4 + static_cast<size_t>(g.kind) * 2 + 1);
            mix(h, static_cast<size_t>(g.color));
        }
        mix(h, 0xabcdef);
        for (const Gen& g : k.b) {
            mix(h, static_cast<size_t>(g.mode) * 4 + static_cast<size_t>(g.kind) * 2 + 1);
            mix(h, static_cast<size_t>(g.color));
        }
        return h;
    }
};

} // namespace detail

/// The state-field engine: computes arbitrary modes a_n b on the vacuum module
/// through the iterate expansion
///   (u_m v)_n w = sum_{i=0}^{k} sum_{j>=0} binom(-l,i) binom(m+i,j) (-1)^j
///                 u_{m+l+i-j} v_{n-l-i+j} w
/// peeled off the leading generator of a's normal word, with l the
/// annihilation degree of u on w and k the one of u on v shifted by m.
class Engine {
public:
    explicit Engine(QSpec spec) : spec_(std::move(spec)) { validate_q(spec_); }

    const QSpec& spec() const { return spec_; }

    /// a_n b, extended bilinearly over the normal-word terms.
    State mode(const State& a, long long n, const State& b) {
        State r;
        for (const auto& [wa, ca] : a.terms)
            for (const auto& [wb, cb] : b.terms) {
                State part = mode_word(wa, n, wb);
                if (!part.is_zero()) r += part.scaled(ca * cb);
            }
        return r;
    }

    State dop(const State& v) { return mode(v, -2, vacuum()); }

    ModeBound gen_bound(Kind kind, int color, const State& s) {
        if (s.is_zero()) return {0};
        long long p_hi = HalfInt(state_max_weight(s).twice - 1).floor();
        for (long long p = p_hi; p >= 0; --p)
            if (!act(Gen{kind, color, static_cast<int>(p)}, s, spec_).is_zero())
                return {static_cast<int>(p + 1)};
        return {0};
    }

    /// Annihilation degree for arbitrary states.
    ModeBound bound(const State& a, const State& b) {
        if (a.is_zero() || b.is_zero()) return {0};
        long long p_hi =
            HalfInt(state_max_weight(a).twice + state_max_weight(b).twice - 2).floor();
        for (long long p = p_hi; p >= 0; --p)
            if (!mode(a, p, b).is_zero()) return {static_cast<int>(p + 1)};
        return {0};
    }

private:
    State mode_word(const Word& a, long long n, const Word& b) {
        if (a.empty()) return n == -1 ? State::monomial(b) : State{};
        // result weight wt(a)+wt(b)-n-1 must be nonnegative
        if (word_weight(a).twice + word_weight(b).twice - 2 * (n + 1) < 0) return {};

        detail::MemoKey key{a, n, b};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        State result;
        const Gen g = a.front();
        if (a.size() == 1 && g.mode == -1) {
            // generator state: modes act directly through the algebra
            result = act(Gen{g.kind, g.color, static_cast<int>(n)}, State::monomial(b), spec_);
        } else {
            Word rest(a.begin() + 1, a.end());
            const State rest_state = State::monomial(rest);
            const State b_state = State::monomial(b);
            const long long m = g.mode;
            const int l = gen_bound(g.kind, g.color, b_state).annihilation_degree;
            const int luv = gen_bound(g.kind, g.color, rest_state).annihilation_degree;
            const long long k = std::max<long long>(0, luv - m);
            const long long q_max =
                HalfInt(word_weight(rest).twice + word_weight(b).twice - 2).floor();
            for (long long i = 0; i <= k; ++i) {
                Int ci = binomial(-l, i);
                for (long long j = 0;; ++j) {
                    long long q = n - l - i + j;
                    if (q > q_max) break;
                    if (m + i >= 0 && j > m + i) break; // binomial vanishes for good
                    Int cj = binomial(m + i, j);
                    if (cj == 0) continue;
                    State inner = mode_word(rest, q, b);
                    if (inner.is_zero()) continue;
                    Int coef = ci * cj;
                    if (j % 2 != 0) coef = -coef;
                    long long p = m + l + i - j;
                    State outer = act(Gen{g.kind, g.color, static_cast<int>(p)}, inner, spec_);
                    if (!outer.is_zero()) result += outer.scaled(Scalar(Rat(coef)));
                }
            }
        }
        memo_.emplace(std::move(key), result);
        return result;
    }

    QSpec spec_;
    std::unordered_map<detail::MemoKey, State, detail::MemoKeyHash> memo_;
};

/// Compares v_{-k-1} 1 against D^k v / k! for k < order.
inline CheckReport creation_check(Engine& eng, const State& v, int order) {
    if (order < 1) throw invalid_parameter("creation_check needs order >= 1");
    CheckReport rep;
    State dk = v;
    Int fact = 1;
    for (int k = 0; k < order; ++k) {
        if (k > 0) {
            dk = eng.dop(dk);
            fact *= k;
        }
        State lhs = eng.mode(v, -k - 1, vacuum());
        State rhs = dk.scaled(Scalar(Rat(1, fact)));
        rep.record(lhs == rhs, "creation coefficient k=" + std::to_string(k));
    }
    return rep;
}

} // namespace qva
