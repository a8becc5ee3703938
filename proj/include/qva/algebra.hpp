#pragma once

#include "qva/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace qva {

struct skew_violation : error {
    skew_violation(int i_, int j_, const Scalar& prod)
        : error("skew condition violated at (" + std::to_string(i_) + "," +
                std::to_string(j_) + "): q_ij*q_ji = " + qva::to_string(prod)),
          i(i_), j(j_) {}
    int i, j;
};

/// The constant matrix Q = (q_ij) with q_ij q_ji = 1.
struct QSpec {
    int l = 1;
    std::vector<std::vector<Scalar>> q; // l x l

    QSpec() : q{{Scalar(1)}} {}
    QSpec(int l_, std::vector<std::vector<Scalar>> q_) : l(l_), q(std::move(q_)) {}

    const Scalar& qij(int i, int j) const { return q[i - 1][j - 1]; }
};

inline void validate_q(const QSpec& spec) {
    if (spec.l <= 0 || static_cast<int>(spec.q.size()) != spec.l)
        throw invalid_parameter("Q matrix must be l x l with l >= 1");
    for (const auto& row : spec.q)
        if (static_cast<int>(row.size()) != spec.l)
            throw invalid_parameter("Q matrix must be l x l");
    for (int i = 1; i <= spec.l; ++i)
        for (int j = 1; j <= spec.l; ++j) {
            Scalar p = spec.qij(i, j) * spec.qij(j, i);
            if (!(p == Scalar(1))) throw skew_violation(i, j, p);
        }
    for (int i = 1; i <= spec.l; ++i)
        if (!(spec.qij(i, i) == Scalar(1)) && !(spec.qij(i, i) == Scalar(-1)))
            throw skew_violation(i, i, spec.qij(i, i) * spec.qij(i, i));
}

enum class Kind : uint8_t { Y = 0, X = 1 }; // Y sorts before X inside a block

struct Gen {
    Kind kind = Kind::X;
    int color = 1;
    int mode = 0;

    /// Canonical order: negative-mode block first, then by (color, Y<X, mode).
    std::tuple<int, int, int, int> key() const {
        return {mode >= 0 ? 1 : 0, color, static_cast<int>(kind), mode};
    }
    friend bool operator==(const Gen& a, const Gen& b) {
        return a.kind == b.kind && a.color == b.color && a.mode == b.mode;
    }
    friend auto operator<=>(const Gen& a, const Gen& b) { return a.key() <=> b.key(); }
};

using Word = std::vector<Gen>;
using GradeVec = std::vector<long long>;

inline bool word_is_canonical(const Word& w, const QSpec& spec) {
    for (size_t t = 0; t + 1 < w.size(); ++t) {
        if (w[t].key() > w[t + 1].key()) return false;
        if (w[t] == w[t + 1] && spec.qij(w[t].color, w[t].color) == Scalar(-1))
            return false;
    }
    return true;
}

/// Finite linear combination of words in the generators.
struct AlgebraElement {
    std::map<Word, Scalar> terms;

    AlgebraElement() = default;
    static AlgebraElement zero() { return {}; }
    static AlgebraElement unit() { return monomial(Word{}); }
    static AlgebraElement monomial(Word w, Scalar c = Scalar(1)) {
        AlgebraElement e;
        if (!c.is_zero()) e.terms.emplace(std::move(w), std::move(c));
        return e;
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(const Word& w, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms.try_emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        for (const auto& [w, c] : o.terms) add_term(w, c);
        return *this;
    }
    AlgebraElement& operator-=(const AlgebraElement& o) {
        for (const auto& [w, c] : o.terms) add_term(w, -c);
        return *this;
    }
    AlgebraElement scaled(const Scalar& s) const {
        AlgebraElement r;
        if (s.is_zero()) return r;
        for (const auto& [w, c] : terms) r.terms.emplace(w, c * s);
        return r;
    }
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.terms == b.terms;
    }
};

namespace detail {

// "A B" -> factor * "B A" (+ delta from the X/Y contact term)
inline Scalar swap_factor(const Gen& a, const Gen& b, const QSpec& spec) {
    if (a.kind == b.kind) return spec.qij(a.color, b.color);
    return spec.qij(b.color, a.color);
}

inline Scalar swap_delta(const Gen& a, const Gen& b, const QSpec& spec) {
    if (a.color != b.color || a.mode + b.mode + 1 != 0 || a.kind == b.kind)
        return Scalar(0);
    if (a.kind == Kind::X) return Scalar(1);                    // X Y -> q Y X + 1
    return -spec.qij(b.color, a.color);                         // Y X -> q X Y - q
}

} // namespace detail

/// Rewrites to the canonical (PBW) normal form: leftmost out-of-order adjacent
/// pair first, repeated to fixpoint.  Terminates by the (inversions, length)
/// measure; confluence is covered by tests.
inline AlgebraElement normal_form(const AlgebraElement& e, const QSpec& spec) {
    AlgebraElement out;
    std::vector<std::pair<Word, Scalar>> todo(e.terms.begin(), e.terms.end());
    while (!todo.empty()) {
        auto [w, c] = std::move(todo.back());
        todo.pop_back();
        if (c.is_zero()) continue;
        bool rewritten = false;
        for (size_t t = 0; t + 1 < w.size(); ++t) {
            const Gen &a = w[t], &b = w[t + 1];
            if (a == b && spec.qij(a.color, a.color) == Scalar(-1)) {
                rewritten = true; // square of a fermionic generator
                break;
            }
            if (a.key() > b.key()) {
                Scalar delta = detail::swap_delta(a, b, spec);
                if (!delta.is_zero()) {
                    Word contracted;
                    contracted.reserve(w.size() - 2);
                    contracted.insert(contracted.end(), w.begin(), w.begin() + t);
                    contracted.insert(contracted.end(), w.begin() + t + 2, w.end());
                    todo.emplace_back(std::move(contracted), c * delta);
                }
                Scalar f = detail::swap_factor(a, b, spec);
                std::swap(w[t], w[t + 1]);
                todo.emplace_back(std::move(w), c * f);
                rewritten = true;
                break;
            }
        }
        if (!rewritten) out.add_term(w, c);
    }
    return out;
}

inline AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b,
                               const QSpec& spec) {
    AlgebraElement prod;
    for (const auto& [wa, ca] : a.terms)
        for (const auto& [wb, cb] : b.terms) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            prod.add_term(w, ca * cb);
        }
    return normal_form(prod, spec);
}

inline GradeVec grade(const Word& w, int l) {
    GradeVec g(l, 0);
    for (const Gen& x : w) g[x.color - 1] += x.kind == Kind::X ? 1 : -1;
    return g;
}

/// Bimultiplicative extension of epsilon(e_i, e_j) = q_ij (i > j), 1 (i <= j).
inline Scalar epsilon(const GradeVec& alpha, const GradeVec& beta, const QSpec& spec) {
    Scalar r(1);
    for (int i = 1; i <= spec.l; ++i)
        for (int j = 1; j < i; ++j) {
            long long e = alpha[i - 1] * beta[j - 1];
            if (e != 0) r *= pow(spec.qij(i, j), e);
        }
    return r;
}

/// X_{i,m} -> q_i X_{i,m}, Y_{i,m} -> q_i^{-1} Y_{i,m}, extended
/// multiplicatively.
inline AlgebraElement sigma_q(const AlgebraElement& e, const std::vector<Scalar>& qvec) {
    for (const auto& s : qvec)
        if (s.is_zero()) throw invalid_parameter("sigma_q parameter must be nonzero");
    AlgebraElement r;
    for (const auto& [w, c] : e.terms) {
        Scalar f = c;
        for (const Gen& g : w) {
            const Scalar& s = qvec.at(g.color - 1);
            f *= g.kind == Kind::X ? s : s.inverse();
        }
        r.add_term(w, f);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Cocycle-twist cross-check: A_Q vs the epsilon-twist of the tensor product of
// the one-color algebras.

struct CheckReport {
    long long checked = 0;
    long long failed = 0;
    std::string first_failure;
    bool pass() const { return failed == 0; }
    void record(bool ok, const std::string& what) {
        ++checked;
        if (!ok) {
            if (failed == 0) first_failure = what;
            ++failed;
        }
    }
};

using EpsilonFn = std::function<Scalar(const GradeVec&, const GradeVec&)>;

namespace detail {

// tuple of per-color words, each kept in one-color normal form
using ModelTerm = std::vector<Word>;
using ModelElement = std::map<ModelTerm, Scalar>;

inline GradeVec model_grade(const ModelTerm& t, int l) {
    GradeVec g(l, 0);
    for (int c = 0; c < l; ++c)
        for (const Gen& x : t[c]) g[c] += x.kind == Kind::X ? 1 : -1;
    return g;
}

inline ModelElement model_mul_gen(const ModelElement& e, const Gen& g, const QSpec& spec,
                                  const EpsilonFn& eps) {
    GradeVec beta(spec.l, 0);
    beta[g.color - 1] = g.kind == Kind::X ? 1 : -1;
    ModelElement out;
    for (const auto& [term, c] : e) {
        Scalar f = c * eps(model_grade(term, spec.l), beta);
        Word w = term[g.color - 1];
        w.push_back(g);
        // one-color reduction: only q_{cc} is ever consulted
        AlgebraElement red = normal_form(AlgebraElement::monomial(std::move(w)), spec);
        for (const auto& [nw, nc] : red.terms) {
            ModelTerm nt = term;
            nt[g.color - 1] = nw;
            auto [it, fresh] = out.try_emplace(nt, f * nc);
            if (!fresh) {
                it->second += f * nc;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

// the linear isomorphism from the tensor-product model: color-major
// concatenation of the per-color words
inline AlgebraElement model_to_algebra(const ModelElement& e) {
    AlgebraElement out;
    for (const auto& [term, c] : e) {
        Word w;
        for (const Word& part : term) w.insert(w.end(), part.begin(), part.end());
        out.add_term(w, c);
    }
    return out;
}

} // namespace detail

inline std::string to_string(const Word& w);
inline std::string to_string(const AlgebraElement& e);

/// Multiplies every word over the generator alphabet (modes in
/// [mode_lo, mode_hi], length <= max_len) both in A_Q and in the
/// epsilon-twisted per-color tensor model, and compares.
inline CheckReport twist_check(const QSpec& spec, int max_len, int mode_lo = -2,
                               int mode_hi = 1, const EpsilonFn& eps_override = nullptr) {
    validate_q(spec);
    EpsilonFn eps = eps_override
        ? eps_override
        : EpsilonFn([&spec](const GradeVec& a, const GradeVec& b) { return epsilon(a, b, spec); });

    std::vector<Gen> alphabet;
    for (int c = 1; c <= spec.l; ++c)
        for (Kind k : {Kind::Y, Kind::X})
            for (int m = mode_lo; m <= mode_hi; ++m) alphabet.push_back(Gen{k, c, m});

    CheckReport rep;
    Word w;
    std::function<void(int)> rec = [&](int remaining) {
        if (!w.empty()) {
            AlgebraElement direct = normal_form(AlgebraElement::monomial(w), spec);
            detail::ModelElement model{{detail::ModelTerm(spec.l), Scalar(1)}};
            for (const Gen& g : w) model = detail::model_mul_gen(model, g, spec, eps);
            AlgebraElement via_model = normal_form(detail::model_to_algebra(model), spec);
            rep.record(direct == via_model, "twist mismatch on word " + to_string(w));
        }
        if (remaining == 0) return;
        for (const Gen& g : alphabet) {
            w.push_back(g);
            rec(remaining - 1);
            w.pop_back();
        }
    };
    rec(max_len);
    return rep;
}

/// The four exchange relations of the iterated smash presentation, checked for
/// color pairs (i, l) with i < l inside A_Q via normal_form.  factor_q supplies
/// the expected exchange constants (defaults to the spec itself).
inline CheckReport smash_relation_check(const QSpec& spec, int mode_lo = -2, int mode_hi = 2,
                                        const QSpec* factor_q = nullptr) {
    validate_q(spec);
    if (spec.l < 2) throw invalid_parameter("smash_relation_check needs l >= 2");
    const QSpec& fq = factor_q ? *factor_q : spec;
    const int L = spec.l;
    CheckReport rep;
    auto nf2 = [&](Gen a, Gen b) {
        return normal_form(AlgebraElement::monomial(Word{a, b}), spec);
    };
    for (int i = 1; i < L; ++i)
        for (int n = mode_lo; n <= mode_hi; ++n)
            for (int m = mode_lo; m <= mode_hi; ++m) {
                Gen XL{Kind::X, L, n}, YL{Kind::Y, L, n};
                Gen Xi{Kind::X, i, m}, Yi{Kind::Y, i, m};
                auto eq = [&](const AlgebraElement& lhs, const AlgebraElement& rhs,
                              const char* tag) {
                    rep.record(lhs == rhs, std::string(tag) + " at i=" + std::to_string(i) +
                                               " m=" + std::to_string(m) +
                                               " n=" + std::to_string(n));
                };
                eq(nf2(XL, Xi), nf2(Xi, XL).scaled(fq.qij(L, i)), "X_l X_i");
                eq(nf2(YL, Yi), nf2(Yi, YL).scaled(fq.qij(L, i)), "Y_l Y_i");
                eq(nf2(YL, Xi), nf2(Xi, YL).scaled(fq.qij(i, L)), "Y_l X_i");
                eq(nf2(XL, Yi), nf2(Yi, XL).scaled(fq.qij(i, L)), "X_l Y_i");
            }
    return rep;
}

// ---------------------------------------------------------------------------
// Word text syntax: whitespace-separated tokens X[i,m] / Y[i,m].

inline Word parse_word(const std::string& text) {
    Word w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok.size() < 6 || (tok[0] != 'X' && tok[0] != 'Y') || tok[1] != '[' ||
            tok.back() != ']')
            throw parse_error("bad generator token '" + tok + "'");
        auto comma = tok.find(',');
        if (comma == std::string::npos) throw parse_error("bad generator token '" + tok + "'");
        Gen g;
        g.kind = tok[0] == 'X' ? Kind::X : Kind::Y;
        try {
            g.color = std::stoi(tok.substr(2, comma - 2));
            g.mode = std::stoi(tok.substr(comma + 1, tok.size() - comma - 2));
        } catch (const std::exception&) {
            throw parse_error("bad generator token '" + tok + "'");
        }
        if (g.color < 1) throw parse_error("color must be >= 1 in '" + tok + "'");
        w.push_back(g);
    }
    return w;
}

inline std::string to_string(const Gen& g) {
    return std::string(g.kind == Kind::X ? "X" : "Y") + "[" + std::to_string(g.color) + "," +
           std::to_string(g.mode) + "]";
}

inline std::string to_string(const Word& w) {
    std::string s;
    for (const Gen& g : w) {
        if (!s.empty()) s += " ";
        s += to_string(g);
    }
    return s;
}

inline std::string to_string(const AlgebraElement& e) {
    if (e.terms.empty()) return "0";
    std::string s;
    // longer words first, constant term last
    for (auto it = e.terms.rbegin(); it != e.terms.rend(); ++it) {
        const auto& [w, c] = *it;
        std::string cs = to_string(c);
        bool neg = cs.size() > 1 && cs[0] == '-' && c.im == 0;
        if (s.empty()) {
            if (neg) s += "- ", cs = cs.substr(1);
        } else {
            s += neg ? " - " : " + ";
            if (neg) cs = cs.substr(1);
        }
        if (w.empty()) {
            s += cs;
        } else {
            if (cs != "1") s += cs + " ";
            s += to_string(w);
        }
    }
    return s;
}

} // namespace qva
