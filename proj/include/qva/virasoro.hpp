#pragma once

#include "qva/checks.hpp"

#include <optional>

namespace qva {

/// omega = 1/2 sum_i (v^(i)_{-2} u^(i) - q_ii u^(i)_{-2} v^(i)).
inline State conformal_vector(Engine& eng) {
    const QSpec& spec = eng.spec();
    State omega;
    Scalar half(Rat(1, 2));
    for (int i = 1; i <= spec.l; ++i) {
        State a = eng.mode(v_state(i), -2, u_state(i));
        State b = eng.mode(u_state(i), -2, v_state(i));
        omega += a.scaled(half);
        omega += b.scaled(-half * spec.qij(i, i));
    }
    return omega;
}

struct VirasoroReport {
    Scalar central_charge;
    std::vector<std::pair<long long, long long>> checked_pairs;
    HalfInt max_weight;
    bool pass = false;
    CheckReport details;
};

/// Verifies [L(m),L(n)] = (m-n)L(m+n) + (1/12)(m^3-m) delta_{m+n,0} c on every
/// basis state of weight <= max_weight for |m|,|n| <= mode_radius, extracting
/// the anomaly scalar c and insisting it is the same across all (m,-m) pairs
/// and states; also checks L(-1) = D and that L(0) eigenvalues are the
/// weights.
inline VirasoroReport virasoro_check(Engine& eng, int mode_radius, HalfInt max_weight) {
    if (mode_radius < 2) throw invalid_parameter("virasoro_check needs mode_radius >= 2");
    VirasoroReport rep;
    rep.max_weight = max_weight;
    State omega = conformal_vector(eng);
    auto L = [&](long long n, const State& s) { return eng.mode(omega, n + 1, s); };

    auto basis = enumerate_basis(eng.spec(), max_weight);
    std::optional<Scalar> c;

    for (long long m = -mode_radius; m <= mode_radius; ++m)
        for (long long n = -mode_radius; n <= mode_radius; ++n) {
            rep.checked_pairs.emplace_back(m, n);
            for (const Word& bw : basis) {
                State s = State::monomial(bw);
                State resid = L(m, L(n, s)) - L(n, L(m, s)) -
                              L(m + n, s).scaled(Scalar(Rat(m - n)));
                if (m + n != 0 || m * m * m - m == 0) {
                    rep.details.record(resid.is_zero(),
                                       "bracket (" + std::to_string(m) + "," +
                                           std::to_string(n) + ") on " + to_string(bw));
                    continue;
                }
                // anomaly: resid must be ((m^3-m)/12) c * s exactly
                Scalar coef(Rat(Int(m) * m * m - m, 12));
                bool proportional = true;
                Scalar lambda(0);
                if (resid.is_zero()) {
                    proportional = true;
                } else if (resid.terms.size() == s.terms.size()) {
                    auto it = resid.terms.begin();
                    auto jt = s.terms.begin();
                    lambda = it->second / jt->second;
                    for (; it != resid.terms.end(); ++it, ++jt)
                        if (it->first != jt->first || !(it->second == lambda * jt->second)) {
                            proportional = false;
                            break;
                        }
                } else {
                    proportional = false;
                }
                if (!proportional) {
                    rep.details.record(false, "anomaly not proportional at (" +
                                                  std::to_string(m) + "," + std::to_string(n) +
                                                  ") on " + to_string(bw));
                    continue;
                }
                Scalar c_here = lambda / coef;
                if (!c) {
                    c = c_here;
                } else if (!(*c == c_here)) {
                    throw inconsistent_central_charge(
                        "central charge " + to_string(c_here) + " at (m,n)=(" +
                        std::to_string(m) + "," + std::to_string(n) + ") disagrees with " +
                        to_string(*c));
                }
                rep.details.record(true, "anomaly");
            }
        }

    for (const Word& bw : basis) {
        State s = State::monomial(bw);
        rep.details.record(L(-1, s) == eng.dop(s), "L(-1) = D on " + to_string(bw));
        rep.details.record(L(0, s) == s.scaled(Scalar(Rat(word_weight(bw).twice, 2))),
                           "L(0) eigenvalue on " + to_string(bw));
    }

    rep.central_charge = c.value_or(Scalar(0));
    rep.pass = rep.details.pass();
    return rep;
}

} // namespace qva
