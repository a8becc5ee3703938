#include "qva/engine.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qva;

namespace {

QSpec clifford1() { return QSpec(1, {{Scalar(-1)}}); }
QSpec weyl1() { return QSpec(1, {{Scalar(1)}}); }
QSpec mixed2() {
    return QSpec(2, {{Scalar(1), Scalar::i()}, {-Scalar::i(), Scalar(-1)}});
}

// independent realization of the translation operator through the commutator
// shift [D, g_m] = -m g_{m-1} and D|0> = 0
State dop_oracle(const Word& w, const QSpec& spec) {
    State out;
    for (size_t t = 0; t < w.size(); ++t) {
        Word sh = w;
        sh[t].mode -= 1;
        Scalar c(Rat(-w[t].mode));
        out += project_to_vacuum_module(
                   normal_form(AlgebraElement::monomial(sh), spec))
                   .scaled(c);
    }
    return out;
}

} // namespace

TEST_CASE("vacuum modes") {
    Engine eng(clifford1());
    State b = State::monomial(parse_word("Y[1,-2] X[1,-1]"));
    REQUIRE(eng.mode(vacuum(), -1, b) == b);
    for (int n = -4; n <= 3; ++n)
        if (n != -1) REQUIRE(eng.mode(vacuum(), n, b).is_zero());
}

TEST_CASE("creation property for single modes") {
    Engine eng(weyl1());
    REQUIRE(eng.mode(u_state(1), -1, vacuum()) == u_state(1));
    State x2 = State::monomial(parse_word("X[1,-2]"));
    REQUIRE(eng.mode(x2, -1, vacuum()) == x2);
}

TEST_CASE("derivative-field identity") {
    // (X_{1,-2}|0>)_n w = -n (X_{1,-1}|0>)_{n-1} w
    Engine eng(clifford1());
    State dx = State::monomial(parse_word("X[1,-2]"));
    auto basis = enumerate_basis(eng.spec(), HalfInt::whole(1));
    for (const Word& bw : basis) {
        State w = State::monomial(bw);
        for (int n = -3; n <= 2; ++n) {
            State lhs = eng.mode(dx, n, w);
            State rhs = eng.mode(u_state(1), n - 1, w).scaled(Scalar(Rat(-n)));
            INFO("n=" << n << " w=" << to_string(bw));
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("translation operator") {
    for (const QSpec& spec : {clifford1(), weyl1(), mixed2()}) {
        Engine eng(spec);
        REQUIRE(eng.dop(vacuum()).is_zero());
        REQUIRE(eng.dop(u_state(1)) == State::monomial(parse_word("X[1,-2]")));

        State yx = State::monomial(parse_word("Y[1,-1] X[1,-1]"));
        State expect;
        expect.add_term(parse_word("Y[1,-2] X[1,-1]"), Scalar(1));
        expect.add_term(parse_word("Y[1,-1] X[1,-2]"), Scalar(1));
        REQUIRE(eng.dop(yx) == expect);

        for (const Word& bw : enumerate_basis(spec, HalfInt::half(5))) {
            State s = State::monomial(bw);
            REQUIRE(eng.dop(s) == dop_oracle(bw, spec));
        }
    }
}

TEST_CASE("D is a derivation of the modes") {
    // (D a)_n b = -n a_{n-1} b
    for (const QSpec& spec : {clifford1(), mixed2()}) {
        Engine eng(spec);
        auto basis = enumerate_basis(spec, HalfInt::half(3));
        for (const Word& wa : basis)
            for (const Word& wb : basis) {
                State a = State::monomial(wa), b = State::monomial(wb);
                State da = eng.dop(a);
                for (int n = -3; n <= 2; ++n) {
                    REQUIRE(eng.mode(da, n, b) ==
                            eng.mode(a, n - 1, b).scaled(Scalar(Rat(-n))));
                }
            }
    }
}

TEST_CASE("creation check") {
    Engine eng(clifford1());
    REQUIRE(creation_check(eng, vacuum(), 3).pass());
    REQUIRE(creation_check(eng, u_state(1), 4).pass());
    State w32 = State::monomial(parse_word("X[1,-2]")); // weight 3/2
    REQUIRE(creation_check(eng, w32, 3).pass());
    State yx = State::monomial(parse_word("Y[1,-1] X[1,-1]"));
    REQUIRE(creation_check(eng, yx, 3).pass());

    Engine engm(mixed2());
    State cross = State::monomial(parse_word("X[1,-1] Y[2,-1]"));
    REQUIRE(creation_check(engm, cross, 3).pass());
}

TEST_CASE("truncation and weight bookkeeping") {
    Engine eng(mixed2());
    auto basis = enumerate_basis(eng.spec(), HalfInt::whole(2));
    for (const Word& wa : basis) {
        if (wa.empty()) continue;
        for (const Word& wb : basis) {
            State a = State::monomial(wa), b = State::monomial(wb);
            long long L = eng.bound(a, b).annihilation_degree;
            // a_n b = 0 for all n >= L, up to a margin
            for (long long n = L; n < L + 3; ++n) REQUIRE(eng.mode(a, n, b).is_zero());
            // homogeneous weight: wt(a_n b) = wt(a) + wt(b) - n - 1
            for (long long n = -3; n < L; ++n) {
                State r = eng.mode(a, n, b);
                if (r.is_zero()) continue;
                HalfInt expect(word_weight(wa).twice + word_weight(wb).twice -
                               2 * (n + 1));
                REQUIRE(state_homogeneous(r, expect));
            }
        }
    }
}

TEST_CASE("mode bound matches a bilinear scan") {
    Engine eng(clifford1());
    State u = u_state(1);
    REQUIRE(eng.gen_bound(Kind::X, 1, vacuum()).annihilation_degree == 0);
    REQUIRE(eng.gen_bound(Kind::X, 1, v_state(1)).annihilation_degree == 1);
    REQUIRE(eng.gen_bound(Kind::X, 1, u_state(1)).annihilation_degree == 0);
    REQUIRE(eng.bound(u, v_state(1)).annihilation_degree == 1);
}
