#pragma once

#include "qva/checks.hpp"
#include "qva/filtration.hpp"
#include "qva/presets.hpp"
#include "qva/qyb.hpp"
#include "qva/virasoro.hpp"

#include <json.hpp>

#include <chrono>
#include <random>

namespace qva {

using Json = nlohmann::ordered_json;

inline const std::vector<std::string> kAllSuites = {
    "algebra", "vacuum", "vertex", "virasoro", "deformed", "filtration", "ybe"};

struct Config {
    QSeriesSpec spec;
    std::vector<std::string> suites = kAllSuites;
    HalfInt max_weight = HalfInt::whole(2);
    int mode_radius = 2;
    int box_radius = 2;
    int filt_degree = 4;
    std::string report_path;
    bool timings = false;
    std::string preset_name;
};

inline HalfInt parse_half_int(const Json& j) {
    if (j.is_number_integer()) return HalfInt::whole(j.get<long long>());
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        auto slash = s.find('/');
        if (slash == std::string::npos) return HalfInt::whole(std::stoll(s));
        if (s.substr(slash + 1) != "2") throw parse_error("half-integers use the form a/2");
        return HalfInt::half(std::stoll(s.substr(0, slash)));
    }
    throw parse_error("expected an integer or \"a/2\" string");
}

/// Builds a validated QSeriesSpec plus run parameters from the JSON config.
inline Config parse_config(const Json& j) {
    Config cfg;
    if (j.contains("preset")) {
        cfg.preset_name = j.at("preset").get<std::string>();
        cfg.spec = preset(cfg.preset_name);
    }
    if (j.contains("l")) cfg.spec.l = j.at("l").get<int>();
    if (j.contains("q")) {
        cfg.spec.q.clear();
        for (const auto& row : j.at("q")) {
            std::vector<Scalar> r;
            for (const auto& cell : row) r.push_back(parse_scalar(cell.get<std::string>()));
            cfg.spec.q.push_back(std::move(r));
        }
    }
    if (j.contains("order")) cfg.spec.order = j.at("order").get<int>();
    if (j.contains("p")) {
        cfg.spec.p.clear();
        for (const auto& row : j.at("p")) {
            std::vector<TruncSeries> r;
            for (const auto& cell : row) {
                std::vector<Scalar> coeffs;
                for (const auto& c : cell) coeffs.push_back(parse_scalar(c.get<std::string>()));
                r.push_back(TruncSeries::polynomial(coeffs));
            }
            cfg.spec.p.push_back(std::move(r));
        }
    } else if (j.contains("q") || j.contains("l")) {
        cfg.spec.p.assign(cfg.spec.l,
                          std::vector<TruncSeries>(cfg.spec.l, TruncSeries::one()));
    }
    if (j.contains("suites")) {
        cfg.suites.clear();
        for (const auto& s : j.at("suites")) cfg.suites.push_back(s.get<std::string>());
    }
    if (j.contains("max_weight")) cfg.max_weight = parse_half_int(j.at("max_weight"));
    if (j.contains("mode_radius")) cfg.mode_radius = j.at("mode_radius").get<int>();
    if (j.contains("box_radius")) cfg.box_radius = j.at("box_radius").get<int>();
    if (j.contains("filt_degree")) cfg.filt_degree = j.at("filt_degree").get<int>();
    if (j.contains("report_path")) cfg.report_path = j.at("report_path").get<std::string>();
    validate_qx(cfg.spec);
    for (const auto& s : cfg.suites)
        if (std::find(kAllSuites.begin(), kAllSuites.end(), s) == kAllSuites.end())
            throw invalid_parameter("unknown suite '" + s + "'");
    return cfg;
}

namespace detail {

inline Json check_json(const CheckReport& rep) {
    Json d;
    d["checked"] = rep.checked;
    d["failed"] = rep.failed;
    if (!rep.pass()) d["first_failure"] = rep.first_failure;
    return d;
}

inline std::string status_of(bool pass, long long inconclusive = 0) {
    if (!pass) return "fail";
    return inconclusive > 0 ? "inconclusive" : "pass";
}

inline Word random_word(std::mt19937_64& rng, int l, int max_len, int lo, int hi) {
    std::uniform_int_distribution<int> len(1, max_len), color(1, l), mode(lo, hi), kind(0, 1);
    Word w;
    int n = len(rng);
    for (int t = 0; t < n; ++t)
        w.push_back(Gen{kind(rng) ? Kind::X : Kind::Y, color(rng), mode(rng)});
    return w;
}

} // namespace detail

inline Json suite_algebra(const Config& cfg) {
    const QSpec qc = cfg.spec.constant();
    Json details;
    CheckReport all;

    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 200; ++rep) {
        Word w = detail::random_word(rng, qc.l, 6, -3, 3);
        if (w.size() < 2) continue;
        size_t t = rng() % (w.size() - 1);
        AlgebraElement direct = normal_form(AlgebraElement::monomial(w), qc);
        AlgebraElement pre;
        Word sw = w;
        std::swap(sw[t], sw[t + 1]);
        pre.add_term(sw, detail::swap_factor(w[t], w[t + 1], qc));
        Scalar d = detail::swap_delta(w[t], w[t + 1], qc);
        if (!d.is_zero()) {
            Word contracted(w.begin(), w.begin() + t);
            contracted.insert(contracted.end(), w.begin() + t + 2, w.end());
            pre.add_term(contracted, d);
        }
        all.record(direct == normal_form(pre, qc), "confluence on " + to_string(w));
    }
    details["confluence"] = detail::check_json(all);

    CheckReport tw = twist_check(qc, 3, -1, 0);
    details["twist"] = detail::check_json(tw);
    all.checked += tw.checked;
    all.failed += tw.failed;

    if (qc.l >= 2) {
        CheckReport sm = smash_relation_check(qc, -2, 2);
        details["smash"] = detail::check_json(sm);
        all.checked += sm.checked;
        all.failed += sm.failed;
    }

    Json out;
    out["name"] = "algebra";
    out["status"] = detail::status_of(all.pass());
    out["details"] = details;
    return out;
}

inline Json suite_vacuum(const Config& cfg) {
    const QSpec qc = cfg.spec.constant();
    Json details;
    auto oracle = character_table(qc, cfg.max_weight);
    Json dims = Json::array();
    bool match = true;
    for (long long t = 0; t <= cfg.max_weight.twice; ++t) {
        long long enumerated = graded_dim(qc, HalfInt(t));
        Json row;
        row["weight"] = to_string(HalfInt(t));
        row["dim"] = enumerated;
        row["character"] = oracle[t];
        dims.push_back(row);
        if (enumerated != oracle[t]) match = false;
    }
    details["graded_dims"] = dims;
    details["character_match"] = match;

    // operator relations on the low-weight basis
    CheckReport rel;
    HalfInt cap = std::min(cfg.max_weight, HalfInt::whole(1));
    for (const Word& bw : enumerate_basis(qc, cap)) {
        State s = State::monomial(bw);
        for (int i = 1; i <= qc.l; ++i)
            for (int j = 1; j <= qc.l; ++j)
                for (int m = -2; m <= 2; ++m)
                    for (int n = -2; n <= 2; ++n) {
                        Gen Xi{Kind::X, i, m}, Xj{Kind::X, j, n};
                        Gen Yi{Kind::Y, i, m}, Yj{Kind::Y, j, n};
                        rel.record(act(Xi, act(Xj, s, qc), qc) ==
                                       act(Xj, act(Xi, s, qc), qc).scaled(qc.qij(i, j)),
                                   "XX relation on basis");
                        rel.record(act(Yi, act(Yj, s, qc), qc) ==
                                       act(Yj, act(Yi, s, qc), qc).scaled(qc.qij(i, j)),
                                   "YY relation on basis");
                        State lhs = act(Xi, act(Yj, s, qc), qc) -
                                    act(Yj, act(Xi, s, qc), qc).scaled(qc.qij(j, i));
                        State expect;
                        if (i == j && m + n + 1 == 0) expect = s;
                        rel.record(lhs == expect, "contact relation on basis");
                    }
    }
    details["relations"] = detail::check_json(rel);

    Json out;
    out["name"] = "vacuum";
    out["status"] = detail::status_of(match && rel.pass());
    out["details"] = details;
    return out;
}

inline Json suite_vertex(const Config& cfg) {
    const QSpec qc = cfg.spec.constant();
    Engine eng(qc);
    Json details;
    CheckReport all;

    for (int i = 1; i <= qc.l; ++i) {
        for (Kind k : {Kind::X, Kind::Y}) {
            CheckReport cr = creation_check(eng, gen_state(k, i), 4);
            all.checked += cr.checked;
            all.failed += cr.failed;
        }
    }
    details["creation"] = detail::status_of(all.pass());

    HalfInt wcap = std::min(cfg.max_weight, HalfInt::whole(1));
    CheckReport sloc;
    for (int cu = 1; cu <= qc.l; ++cu)
        for (int cv = 1; cv <= qc.l; ++cv)
            for (Kind ku : {Kind::X, Kind::Y})
                for (Kind kv : {Kind::X, Kind::Y}) {
                    auto w = slocality_witness(eng, ku, cu, kv, cv, wcap, cfg.box_radius);
                    sloc.checked += w.report.checked;
                    sloc.failed += w.report.failed;
                }
    details["s_locality"] = detail::check_json(sloc);
    all.checked += sloc.checked;
    all.failed += sloc.failed;

    CheckReport wa, sj, mp;
    auto basis = enumerate_basis(qc, wcap);
    for (int cu = 1; cu <= qc.l; ++cu)
        for (Kind ku : {Kind::X, Kind::Y})
            for (int cv = 1; cv <= qc.l; ++cv)
                for (Kind kv : {Kind::X, Kind::Y}) {
                    State u = gen_state(ku, cu), v = gen_state(kv, cv);
                    for (const Word& bw : basis) {
                        State w = State::monomial(bw);
                        CheckReport r1 = weak_assoc_check(eng, u, v, w, cfg.box_radius);
                        wa.checked += r1.checked;
                        wa.failed += r1.failed;
                        CheckReport r2 = sjacobi_check(eng, u, v, w, cfg.box_radius);
                        sj.checked += r2.checked;
                        sj.failed += r2.failed;
                    }
                }
    details["weak_associativity"] = detail::check_json(wa);
    details["s_jacobi"] = detail::check_json(sj);
    all.checked += wa.checked + sj.checked;
    all.failed += wa.failed + sj.failed;

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> pq(-3, 2);
    for (int rep = 0; rep < 40; ++rep) {
        State u = State::monomial(basis[pick(rng)]);
        State v = State::monomial(basis[pick(rng)]);
        State w = State::monomial(basis[pick(rng)]);
        CheckReport r = mode_product_check(eng, u, v, w, pq(rng), pq(rng));
        mp.checked += r.checked;
        mp.failed += r.failed;
    }
    details["mode_product"] = detail::check_json(mp);
    all.checked += mp.checked;
    all.failed += mp.failed;

    Json out;
    out["name"] = "vertex";
    out["status"] = detail::status_of(all.pass());
    out["details"] = details;
    return out;
}

inline Json suite_virasoro(const Config& cfg) {
    const QSpec qc = cfg.spec.constant();
    Engine eng(qc);
    Json details;
    Json out;
    out["name"] = "virasoro";
    try {
        VirasoroReport rep = virasoro_check(eng, std::max(2, cfg.mode_radius), cfg.max_weight);
        Scalar expected(0);
        for (int i = 1; i <= qc.l; ++i) expected -= qc.qij(i, i);
        details["central_charge"] = to_string(rep.central_charge);
        details["expected_charge"] = to_string(expected);
        details["brackets"] = detail::check_json(rep.details);
        // the naive "charge = l" reading only reconciles when every q_ii = -1
        details["charge_l_reconciled"] = rep.central_charge == Scalar(qc.l);
        bool ok = rep.pass && rep.central_charge == expected;
        out["status"] = detail::status_of(ok);
    } catch (const inconsistent_central_charge& e) {
        details["error"] = e.what();
        out["status"] = "fail";
    }
    out["details"] = details;
    return out;
}

inline Json suite_deformed(const Config& cfg) {
    Json details;
    DressedEngine de(cfg.spec);
    CheckReport all;
    long long inconclusive = 0;

    auto qx = build_qx(cfg.spec);
    CheckReport unit;
    for (int i = 1; i <= cfg.spec.l; ++i)
        for (int j = 1; j <= cfg.spec.l; ++j) {
            TruncSeries prod =
                series_mul(qx[i - 1][j - 1], series_negate_var(qx[j - 1][i - 1]));
            unit.record(series_is_one(prod, std::min(prod.order, cfg.spec.order)),
                        "q_ij(x) q_ji(-x) = 1 at (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
        }
    details["qx_unitarity"] = detail::check_json(unit);
    all.checked += unit.checked;
    all.failed += unit.failed;

    Json zf = Json::array();
    for (int i = 1; i <= cfg.spec.l; ++i)
        for (int j = 1; j <= cfg.spec.l; ++j) {
            ZfReport rep = zf_relation_check(de, i, j, cfg.box_radius, cfg.max_weight);
            Json row;
            row["pair"] = {i, j};
            row["cells"] = rep.cells.checked;
            row["failed"] = rep.cells.failed;
            row["inconclusive"] = rep.inconclusive;
            zf.push_back(row);
            all.checked += rep.cells.checked;
            all.failed += rep.cells.failed;
            inconclusive += rep.inconclusive;
        }
    details["zf_relations"] = zf;

    CheckReport pseudo;
    HalfInt cap = std::min(cfg.max_weight, HalfInt::whole(1));
    for (int i = 1; i <= cfg.spec.l; ++i) {
        CheckReport r1 = pseudo_endo_law_check(de, i, cap, -2, 1, cfg.spec.order / 2);
        pseudo.checked += r1.checked;
        pseudo.failed += r1.failed;
        CheckReport r3 = phi_inverse_check(de, i, cap, cfg.spec.order / 2);
        pseudo.checked += r3.checked;
        pseudo.failed += r3.failed;
        for (int j = i; j <= cfg.spec.l; ++j) {
            CheckReport r2 = phi_commute_check(de, i, j, cap, cfg.box_radius);
            pseudo.checked += r2.checked;
            pseudo.failed += r2.failed;
        }
    }
    details["pseudo_automorphisms"] = detail::check_json(pseudo);
    all.checked += pseudo.checked;
    all.failed += pseudo.failed;

    Json out;
    out["name"] = "deformed";
    out["status"] = detail::status_of(all.pass(), inconclusive);
    out["details"] = details;
    return out;
}

inline Json suite_filtration(const Config& cfg) {
    Json details;
    DressedEngine de(cfg.spec);
    Engine eng(cfg.spec.constant());
    bool ok = true;

    FiltrationLevel f_neg = filtration_F(de, -1, cfg.max_weight);
    FiltrationLevel f0 = filtration_F(de, 0, cfg.max_weight);
    ok = ok && f_neg.rank == 0 && f0.rank == 1;
    details["F_minus1_rank"] = f_neg.rank;
    details["F_0_rank"] = f0.rank;

    GrReport gr = gr_compare(de, cfg.filt_degree, cfg.max_weight);
    Json table = Json::array();
    for (const GrRow& row : gr.rows) {
        Json r;
        r["n"] = row.n;
        r["weight_cap"] = to_string(row.weight_cap);
        r["dim"] = row.dressed_dim;
        r["quotient"] = row.dressed_quot;
        r["base_dim"] = row.base_dim;
        r["base_quotient"] = row.base_quot;
        table.push_back(r);
    }
    details["gr_table"] = table;
    details["gr_match"] = gr.pass;
    ok = ok && gr.pass;

    CheckReport e_rep = filtration_E_check(eng, 2, -1, 1,
                                           std::min(cfg.max_weight, HalfInt::whole(1)));
    details["length_filtration"] = detail::check_json(e_rep);
    ok = ok && e_rep.pass();

    HalfBasisReport hb = half_basis_check(de, cfg.max_weight);
    details["half_basis_words"] = hb.words;
    details["half_basis_rank"] = hb.rank;
    ok = ok && hb.pass();

    Json out;
    out["name"] = "filtration";
    out["status"] = detail::status_of(ok);
    out["details"] = details;
    return out;
}

inline Json suite_ybe(const Config& cfg) {
    Json details;
    DiagonalS S = build_S(cfg.spec);
    CheckReport unit = unitarity_check(S, cfg.spec.order);
    details["unitarity"] = detail::check_json(unit);
    QybeReport qy = qybe_check(S, cfg.spec.order, cfg.box_radius);
    details["qybe_cells"] = qy.cells.checked;
    details["qybe_failed"] = qy.cells.failed;
    details["qybe_inconclusive"] = qy.inconclusive;

    Json out;
    out["name"] = "ybe";
    out["status"] = detail::status_of(unit.pass() && qy.pass(), qy.inconclusive);
    out["details"] = details;
    return out;
}

/// Executes the requested suites; exit code 0 iff all pass (inconclusive
/// counts as non-failure only for the report status, not the exit code).
inline Json run_suites(const Config& cfg, int& exit_code) {
    Json report;
    if (!cfg.preset_name.empty()) report["preset"] = cfg.preset_name;
    report["l"] = cfg.spec.l;
    report["order"] = cfg.spec.order;
    report["max_weight"] = to_string(cfg.max_weight);
    Json suites = Json::array();
    bool all_pass = true;
    for (const std::string& name : cfg.suites) {
        Json entry;
        auto started = std::chrono::steady_clock::now();
        try {
            if (name == "algebra") entry = suite_algebra(cfg);
            else if (name == "vacuum") entry = suite_vacuum(cfg);
            else if (name == "vertex") entry = suite_vertex(cfg);
            else if (name == "virasoro") entry = suite_virasoro(cfg);
            else if (name == "deformed") entry = suite_deformed(cfg);
            else if (name == "filtration") entry = suite_filtration(cfg);
            else if (name == "ybe") entry = suite_ybe(cfg);
        } catch (const error& e) {
            entry["name"] = name;
            entry["status"] = "fail";
            entry["details"] = Json{{"error", e.what()}};
        }
        if (cfg.timings) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - started)
                          .count();
            entry["wall_time_ms"] = ms;
        }
        if (entry.at("status").get<std::string>() == "fail") all_pass = false;
        suites.push_back(entry);
    }
    report["suites"] = suites;
    report["overall"] = all_pass ? "pass" : "fail";
    exit_code = all_pass ? 0 : 1;
    return report;
}

} // namespace qva
