#include "qva/vacuum.hpp"
#include "qva/rank.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qva;

namespace {
QSpec clifford1() { return QSpec(1, {{Scalar(-1)}}); }
QSpec weyl1() { return QSpec(1, {{Scalar(1)}}); }
QSpec mixed2() {
    return QSpec(2, {{Scalar(1), Scalar::i()}, {-Scalar::i(), Scalar(-1)}});
}
} // namespace

TEST_CASE("generator action on the vacuum module") {
    QSpec cl = clifford1();
    SECTION("contact term against the vacuum") {
        State s = v_state(1); // Y[1,-1]|0>
        State r = act(Gen{Kind::X, 1, 0}, s, cl);
        REQUIRE(r == vacuum());
    }
    SECTION("annihilation") {
        REQUIRE(act(Gen{Kind::X, 1, 2}, vacuum(), cl).is_zero());
        for (int m = 0; m <= 3; ++m) {
            REQUIRE(act(Gen{Kind::X, 1, m}, vacuum(), cl).is_zero());
            REQUIRE(act(Gen{Kind::Y, 1, m}, vacuum(), cl).is_zero());
        }
    }
    SECTION("creation") {
        REQUIRE(act(Gen{Kind::X, 1, -1}, vacuum(), cl) == u_state(1));
    }
}

TEST_CASE("defining relations hold as operators on the basis") {
    for (const QSpec& spec : {clifford1(), weyl1(), mixed2()}) {
        auto basis = enumerate_basis(spec, HalfInt::whole(2));
        for (const Word& bw : basis) {
            State s = State::monomial(bw);
            for (int i = 1; i <= spec.l; ++i)
                for (int j = 1; j <= spec.l; ++j)
                    for (int m = -2; m <= 2; ++m)
                        for (int n = -2; n <= 2; ++n) {
                            Gen Xi{Kind::X, i, m}, Xj{Kind::X, j, n};
                            Gen Yi{Kind::Y, i, m}, Yj{Kind::Y, j, n};
                            // X_i,m X_j,n = q_ij X_j,n X_i,m
                            REQUIRE(act(Xi, act(Xj, s, spec), spec) ==
                                    act(Xj, act(Xi, s, spec), spec).scaled(spec.qij(i, j)));
                            // Y_i,m Y_j,n = q_ij Y_j,n Y_i,m
                            REQUIRE(act(Yi, act(Yj, s, spec), spec) ==
                                    act(Yj, act(Yi, s, spec), spec).scaled(spec.qij(i, j)));
                            // X_i,m Y_j,n - q_ji Y_j,n X_i,m = delta delta
                            State lhs = act(Xi, act(Yj, s, spec), spec) -
                                        act(Yj, act(Xi, s, spec), spec).scaled(spec.qij(j, i));
                            State expect;
                            if (i == j && m + n + 1 == 0) expect = s;
                            REQUIRE(lhs == expect);
                        }
        }
    }
}

TEST_CASE("basis enumeration at low weight") {
    QSpec cl = clifford1();
    SECTION("weight <= 1/2") {
        auto basis = enumerate_basis(cl, HalfInt::half(1));
        REQUIRE(basis.size() == 3);
        REQUIRE(basis[0] == Word{});
        REQUIRE((basis[1] == parse_word("Y[1,-1]") || basis[2] == parse_word("Y[1,-1]")));
        REQUIRE((basis[1] == parse_word("X[1,-1]") || basis[2] == parse_word("X[1,-1]")));
    }
    SECTION("clifford weight exactly 1: only the YX pair survives") {
        auto basis = enumerate_basis(cl, HalfInt::whole(1));
        std::vector<Word> w1;
        for (const Word& w : basis)
            if (word_weight(w) == HalfInt::whole(1)) w1.push_back(w);
        REQUIRE(w1 == std::vector<Word>{parse_word("Y[1,-1] X[1,-1]")});
    }
    SECTION("weyl weight exactly 1 has three states") {
        auto basis = enumerate_basis(weyl1(), HalfInt::whole(1));
        std::vector<Word> w1;
        for (const Word& w : basis)
            if (word_weight(w) == HalfInt::whole(1)) w1.push_back(w);
        REQUIRE(w1.size() == 3);
    }
    SECTION("deterministic order") {
        auto a = enumerate_basis(mixed2(), HalfInt::whole(2));
        auto b = enumerate_basis(mixed2(), HalfInt::whole(2));
        REQUIRE(a == b);
        // duplicate-free
        for (size_t i = 0; i + 1 < a.size(); ++i) REQUIRE(!(a[i] == a[i + 1]));
    }
}

TEST_CASE("graded dimensions against the character oracle") {
    std::vector<QSpec> specs = {
        clifford1(), weyl1(), mixed2(),
        QSpec(2, {{Scalar(1), Scalar(1)}, {Scalar(1), Scalar(1)}}),
        QSpec(2, {{Scalar(-1), Scalar(2)}, {Scalar(Rat(1, 2)), Scalar(-1)}})};
    for (const QSpec& spec : specs) {
        HalfInt cap = HalfInt::whole(4);
        auto oracle = character_table(spec, cap);
        for (long long t = 0; t <= cap.twice; ++t) {
            INFO("l=" << spec.l << " twice-weight=" << t);
            REQUIRE(graded_dim(spec, HalfInt(t)) == oracle[t]);
        }
        REQUIRE(oracle[0] == 1);
        REQUIRE(oracle[1] == 2 * spec.l);
    }
    // anchor: dim(2) = 4 for the one-color fermionic case
    REQUIRE(character_table(clifford1(), HalfInt::whole(2))[4] == 4);
    REQUIRE(graded_dim(clifford1(), HalfInt::whole(2)) == 4);
}

TEST_CASE("cyclicity evidence: creation orbit spans the graded pieces") {
    for (const QSpec& spec : {clifford1(), weyl1(), mixed2()}) {
        HalfInt cap = HalfInt::whole(2);
        // all words over creation modes applied to |0>, weight <= cap
        std::vector<std::map<Word, Scalar>> rows;
        std::function<void(Word&, long long)> rec = [&](Word& w, long long budget) {
            State s = act_word(w, vacuum(), spec);
            if (!s.is_zero()) rows.push_back(s.terms);
            for (int c = 1; c <= spec.l; ++c)
                for (Kind k : {Kind::Y, Kind::X})
                    for (long long n = 1; 2 * n - 1 <= budget; ++n) {
                        w.push_back(Gen{k, c, static_cast<int>(-n)});
                        rec(w, budget - (2 * n - 1));
                        w.pop_back();
                    }
        };
        Word w;
        rec(w, cap.twice);
        long long expect = 0;
        for (long long t = 0; t <= cap.twice; ++t) expect += graded_dim(spec, HalfInt(t));
        REQUIRE(exact_rank(rows) == expect);
    }
}

TEST_CASE("state text round trip") {
    Word w = parse_state_word("Y[1,-1] X[1,-1] |0>");
    REQUIRE(w == parse_word("Y[1,-1] X[1,-1]"));
    REQUIRE(parse_state_word("|0>").empty());
    REQUIRE_THROWS_AS(parse_state_word("X[1,-1]"), parse_error);
    State s = State::monomial(w);
    REQUIRE(to_string_state(s) == "Y[1,-1] X[1,-1] |0>");
    REQUIRE(to_string_state(vacuum()) == "|0>");
}

TEST_CASE("weights") {
    REQUIRE(word_weight(parse_word("X[1,-1]")) == HalfInt::half(1));
    REQUIRE(word_weight(parse_word("Y[1,-2] X[1,-1]")) == HalfInt::whole(2));
    REQUIRE(state_max_weight(vacuum()) == HalfInt::whole(0));
}
