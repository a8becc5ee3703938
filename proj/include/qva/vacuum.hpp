#pragma once

#include "qva/algebra.hpp"

#include <algorithm>
#include <vector>

namespace qva {

/// States of the vacuum module are stored in the normal-word basis: canonical
/// words whose modes are all <= -1.
using State = AlgebraElement;

/// Twice the weight of a generator state (mode -1); the grading convention in
/// one place: a generator at mode -n carries weight (n - 1) + this/2.
inline constexpr long long kGeneratorWeightTwice = 1;

inline HalfInt word_weight(const Word& w) {
    long long t = 0;
    for (const Gen& g : w) t += -2LL * (g.mode + 1) + kGeneratorWeightTwice;
    return HalfInt(t);
}

/// Largest weight appearing in a state (HalfInt(-1) for the zero state).
inline HalfInt state_max_weight(const State& s) {
    HalfInt m(-1);
    for (const auto& [w, c] : s.terms) m = std::max(m, word_weight(w));
    return m;
}

inline bool state_homogeneous(const State& s, HalfInt w) {
    for (const auto& [word, c] : s.terms)
        if (word_weight(word) != w) return false;
    return true;
}

inline State weight_component(const State& s, HalfInt w) {
    State r;
    for (const auto& [word, c] : s.terms)
        if (word_weight(word) == w) r.terms.emplace(word, c);
    return r;
}

inline State vacuum() { return State::unit(); }

inline State gen_state(Kind k, int color) {
    return State::monomial(Word{Gen{k, color, -1}});
}
inline State u_state(int color) { return gen_state(Kind::X, color); }
inline State v_state(int color) { return gen_state(Kind::Y, color); }

/// Deletes every word that still contains an annihilation mode; in canonical
/// order those sit at the right, next to the vacuum.
inline State project_to_vacuum_module(const AlgebraElement& e) {
    State r;
    for (const auto& [w, c] : e.terms) {
        bool kills = false;
        for (const Gen& g : w)
            if (g.mode >= 0) {
                kills = true;
                break;
            }
        if (!kills) r.terms.emplace(w, c);
    }
    return r;
}

/// Left action of one generator mode on a state.
inline State act(const Gen& g, const State& s, const QSpec& spec) {
    AlgebraElement shifted;
    for (const auto& [w, c] : s.terms) {
        Word nw;
        nw.reserve(w.size() + 1);
        nw.push_back(g);
        nw.insert(nw.end(), w.begin(), w.end());
        shifted.terms.emplace(std::move(nw), c);
    }
    return project_to_vacuum_module(normal_form(shifted, spec));
}

/// Left action of a whole word (rightmost generator acts first).
inline State act_word(const Word& w, const State& s, const QSpec& spec) {
    State r = s;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (r.is_zero()) return r;
        r = act(*it, r, spec);
    }
    return r;
}

/// Complete duplicate-free list of normal words of weight <= max_weight,
/// sorted by (weight, word).
inline std::vector<Word> enumerate_basis(const QSpec& spec, HalfInt max_weight) {
    std::vector<Word> out;
    if (max_weight.twice < 0) return out;
    Word w;
    std::function<void(long long)> rec = [&](long long budget_twice) {
        out.push_back(w);
        Gen last = w.empty() ? Gen{Kind::Y, 0, 0} : w.back();
        for (int color = std::max(1, last.color); color <= spec.l; ++color) {
            bool fermionic = spec.qij(color, color) == Scalar(-1);
            for (Kind kind : {Kind::Y, Kind::X}) {
                for (long long n = (budget_twice + 1) / 2; n >= 1; --n) {
                    Gen g{kind, color, static_cast<int>(-n)};
                    if (2 * n - 1 > budget_twice) continue;
                    if (!w.empty()) {
                        if (g.key() < last.key()) continue;
                        if (g == last && fermionic) continue;
                    }
                    w.push_back(g);
                    rec(budget_twice - (2 * n - 1));
                    w.pop_back();
                }
            }
        }
    };
    rec(max_weight.twice);
    std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
        HalfInt wa = word_weight(a), wb = word_weight(b);
        return wa != wb ? wa < wb : a < b;
    });
    return out;
}

inline long long graded_dim(const QSpec& spec, HalfInt w) {
    long long count = 0;
    for (const Word& word : enumerate_basis(spec, w))
        if (word_weight(word) == w) ++count;
    return count;
}

/// Character oracle: coefficients of the product over colors of
/// prod_{n>=1} (1 - t^{n-1/2})^{-2} (bosonic) or (1 + t^{n-1/2})^2 (fermionic),
/// indexed by twice the weight.  Computed from the product formula alone.
inline std::vector<long long> character_table(const QSpec& spec, HalfInt max_weight) {
    const int N = static_cast<int>(max_weight.twice); // degrees in s = t^{1/2}
    std::vector<Rat> acc(N + 1, Rat(0));
    acc[0] = 1;
    auto mul_by = [&](const std::vector<Rat>& f) {
        std::vector<Rat> r(N + 1, Rat(0));
        for (int a = 0; a <= N; ++a) {
            if (acc[a] == 0) continue;
            for (int b = 0; a + b <= N; ++b)
                if (f[b] != 0) r[a + b] += acc[a] * f[b];
        }
        acc = std::move(r);
    };
    for (int c = 1; c <= spec.l; ++c) {
        bool fermionic = spec.qij(c, c) == Scalar(-1);
        for (long long n = 1; 2 * n - 1 <= N; ++n) {
            int k = static_cast<int>(2 * n - 1);
            std::vector<Rat> f(N + 1, Rat(0));
            if (fermionic) {
                f[0] = 1;
                f[k] = 1;
            } else {
                for (int d = 0; d <= N; d += k) f[d] = 1;
            }
            mul_by(f); // twice: one factor for X_{c}, one for Y_{c}
            mul_by(f);
        }
    }
    std::vector<long long> dims(N + 1, 0);
    for (int d = 0; d <= N; ++d) dims[d] = acc[d].convert_to<long long>();
    return dims;
}

// State text syntax mirrors the word syntax with a |0> terminator.
inline Word parse_state_word(const std::string& text) {
    auto pos = text.rfind("|0>");
    if (pos == std::string::npos) throw parse_error("state must end with |0>");
    return parse_word(text.substr(0, pos));
}

inline std::string to_string_state(const State& s) {
    if (s.terms.empty()) return "0";
    std::string out;
    for (auto it = s.terms.rbegin(); it != s.terms.rend(); ++it) {
        const auto& [w, c] = *it;
        if (!out.empty()) out += " + ";
        std::string cs = to_string(c);
        if (cs != "1") out += "(" + cs + ") ";
        if (!w.empty()) out += to_string(w) + " ";
        out += "|0>";
    }
    return out;
}

} // namespace qva
