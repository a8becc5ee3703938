#include "qva/deformation.hpp"
#include "qva/presets.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qva;

namespace {
QSeriesSpec zf_linear() { return preset("zf-linear"); }

QSeriesSpec broken_symmetry() {
    // p_12 != p_21; skew q intact.  Deliberately invalid.
    QSeriesSpec s;
    s.l = 2;
    s.q = {{Scalar(-1), Scalar(1)}, {Scalar(1), Scalar(-1)}};
    s.p = {{TruncSeries::one(), TruncSeries::polynomial({Scalar(1), Scalar(1)})},
           {TruncSeries::one(), TruncSeries::one()}};
    s.order = 8;
    return s;
}
} // namespace

TEST_CASE("series-spec validation") {
    REQUIRE_NOTHROW(validate_qx(zf_linear()));
    for (const std::string& name : preset_names()) REQUIRE_NOTHROW(validate_qx(preset(name)));
    REQUIRE_THROWS_AS(validate_qx(broken_symmetry()), invalid_parameter);

    QSeriesSpec bad0 = zf_linear();
    bad0.p[0][0] = TruncSeries::polynomial({Scalar(2)});
    REQUIRE_THROWS_AS(validate_qx(bad0), invalid_parameter);
}

TEST_CASE("deformed braiding series") {
    SECTION("zf-linear: q(x) = -(1-x)/(1+x)") {
        auto qx = build_qx(zf_linear(), 6);
        const TruncSeries& q = qx[0][0];
        REQUIRE(q.at(0) == Scalar(-1));
        for (int d = 1; d < 6; ++d)
            REQUIRE(q.at(d) == (d % 2 ? Scalar(2) : Scalar(-2)));
    }
    SECTION("constant p gives constant q") {
        auto qx = build_qx(preset("mixed"), 8);
        REQUIRE(qx[0][1].coeffs.size() == 1);
        REQUIRE(qx[0][1].at(0) == Scalar::i());
        REQUIRE(qx[0][1].exact());
    }
    SECTION("unitarity within order: q_ij(x) q_ji(-x) = 1") {
        for (const char* name : {"zf-linear", "yangian-sl2"}) {
            QSeriesSpec s = preset(name);
            auto qx = build_qx(s, s.order);
            for (int i = 1; i <= s.l; ++i)
                for (int j = 1; j <= s.l; ++j) {
                    TruncSeries prod = series_mul(
                        qx[i - 1][j - 1], series_negate_var(qx[j - 1][i - 1]));
                    REQUIRE(series_is_one(prod, s.order));
                }
        }
    }
    SECTION("broken symmetry destroys unitarity") {
        auto qx = build_qx(broken_symmetry(), 6);
        TruncSeries prod = series_mul(qx[0][1], series_negate_var(qx[1][0]));
        REQUIRE(!series_is_one(prod, 6));
    }
}

TEST_CASE("pseudo-automorphism on low states") {
    DressedEngine de(zf_linear());
    SECTION("fixes the vacuum") {
        SeriesState s = de.phi(1, vacuum());
        REQUIRE(s.size() == 1);
        REQUIRE(series_agree(s.at(Word{}), TruncSeries::one(), 8));
    }
    SECTION("scales a generator by p(x)") {
        SeriesState s = de.phi(1, u_state(1));
        REQUIRE(s.size() == 1);
        const TruncSeries& f = s.at(parse_word("X[1,-1]"));
        REQUIRE(f.at(0) == Scalar(1));
        REQUIRE(f.at(1) == Scalar(1));
        // and the Y generator by p(x)^{-1}
        SeriesState t = de.phi(1, v_state(1));
        const TruncSeries& g = t.at(parse_word("Y[1,-1]"));
        REQUIRE(g.at(0) == Scalar(1));
        REQUIRE(g.at(1) == Scalar(-1));
        REQUIRE(g.at(2) == Scalar(1));
    }
    SECTION("deeper mode picks up the derivative correction") {
        SeriesState s = de.phi(1, State::monomial(parse_word("X[1,-2]")));
        // p(x) X_{1,-2} - p'(x) X_{1,-1}
        REQUIRE(series_agree(s.at(parse_word("X[1,-2]")),
                             TruncSeries::polynomial({Scalar(1), Scalar(1)}), 8));
        REQUIRE(series_agree(s.at(parse_word("X[1,-1]")),
                             TruncSeries::polynomial({Scalar(-1)}), 8));
    }
}

TEST_CASE("pseudo-endomorphism law, commutativity, inverse") {
    SECTION("zf-linear") {
        DressedEngine de(zf_linear());
        REQUIRE(pseudo_endo_law_check(de, 1, HalfInt::whole(1), -2, 1, 5).pass());
        REQUIRE(phi_commute_check(de, 1, 1, HalfInt::half(3), 3).pass());
        REQUIRE(phi_inverse_check(de, 1, HalfInt::half(3), 6).pass());
    }
    SECTION("yangian preset, distinct colors") {
        DressedEngine de(preset("yangian-sl2"));
        REQUIRE(pseudo_endo_law_check(de, 3, HalfInt::half(1), -1, 0, 4).pass());
        REQUIRE(phi_commute_check(de, 1, 3, HalfInt::half(2), 2).pass());
        REQUIRE(phi_inverse_check(de, 2, HalfInt::half(2), 5).pass());
    }
}

TEST_CASE("dressed modes") {
    DressedEngine de(zf_linear());
    SECTION("reduce to plain modes on the vacuum") {
        for (int m = -3; m <= -1; ++m) {
            State lhs = de.dressed_mode(1, Kind::X, m, vacuum());
            State rhs = act(Gen{Kind::X, 1, m}, vacuum(), de.constant_spec());
            REQUIRE(lhs == rhs);
        }
    }
    SECTION("a_{-1} kills the dressed fermion square") {
        State r = de.dressed_mode(1, Kind::X, -1, u_state(1));
        REQUIRE(r.is_zero());
    }
    SECTION("identity dressing is plain action") {
        DressedEngine plain(preset("clifford"));
        Engine eng(plain.constant_spec());
        for (const Word& bw : enumerate_basis(plain.constant_spec(), HalfInt::whole(1)))
            for (int m = -2; m <= 1; ++m) {
                State lhs = plain.dressed_mode(1, Kind::Y, m, State::monomial(bw));
                State rhs = act(Gen{Kind::Y, 1, m}, State::monomial(bw),
                                plain.constant_spec());
                REQUIRE(lhs == rhs);
            }
    }
}

TEST_CASE("deformed exchange relations") {
    SECTION("constant p reduces to the constant relations") {
        DressedEngine de(preset("mixed"));
        ZfReport rep = zf_relation_check(de, 1, 2, 2, HalfInt::half(2));
        REQUIRE(rep.pass());
        REQUIRE(rep.conclusive());
    }
    SECTION("zf-linear at small window") {
        DressedEngine de(zf_linear());
        ZfReport rep = zf_relation_check(de, 1, 1, 2, HalfInt::whole(1));
        REQUIRE(rep.pass());
        REQUIRE(rep.conclusive());
    }
    SECTION("broken p-symmetry fails") {
        DressedEngine de(broken_symmetry());
        ZfReport rep = zf_relation_check(de, 1, 2, 2, HalfInt::half(1));
        REQUIRE(!rep.pass());
    }
}

TEST_CASE("insufficient truncation order is reported with the minimal fix") {
    // genuinely truncated p (not a polynomial): deep modes need more terms
    QSeriesSpec s;
    s.l = 1;
    s.q = {{Scalar(-1)}};
    TruncSeries p = TruncSeries::polynomial({Scalar(1), Scalar(1)});
    s.p = {{series_inv(p, 3)}}; // 1 - x + x^2 + O(x^3)
    s.order = 3;
    DressedEngine de(s);
    bool threw = false;
    try {
        // coefficient of degree p - m = 3 of the truncated series is unknown
        State r = de.dressed_mode(1, Kind::X, -5, u_state(1));
        (void)r;
    } catch (const insufficient_order& e) {
        threw = true;
        REQUIRE(e.minimal_order > 3);
    }
    REQUIRE(threw);
}
