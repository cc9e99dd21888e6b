#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superw/bialgebra.hpp"

#include "support/fixtures.hpp"
#include "support/minioracle.hpp"

using namespace superw;
using fixtures::case_a;
using fixtures::case_b;

namespace {

TensorElement pure(const Algebra& alg, const BasisSymbol& a, const BasisSymbol& b,
                   const Rational& c = Rational(1)) {
    return TensorElement::single(alg.group_ptr(), a, b, c);
}

}  // namespace

TEST_CASE("rmatrix construction") {
    Algebra alg = case_a();
    auto L0 = alg.symbol(Family::L, 0);
    auto L1 = alg.symbol(Family::L, 1);
    RMatrix r = make_rmatrix(skew_project(pure(alg, L0, L1)));
    CHECK(r.parity == Parity::Even);
    CHECK(r.skew);
    CHECK_FALSE(make_rmatrix(pure(alg, L0, L1)).skew);
    CHECK(make_rmatrix(TensorElement(), Parity::Odd).parity == Parity::Odd);

    TensorElement mixed = pure(alg, L0, L1) + pure(alg, L0, alg.symbol(Family::G, 2));
    CHECK_THROWS_AS(make_rmatrix(mixed), std::invalid_argument);
}

TEST_CASE("cobracket instances") {
    Algebra alg = case_a();
    auto L0 = alg.symbol(Family::L, 0);
    auto L1 = alg.symbol(Family::L, 1);

    RMatrix r = make_rmatrix(skew_project(pure(alg, L0, L1)));
    // weight: r is homogeneous of degree 1, so L_0 o r = -r
    CHECK(cobracket(r, alg.L(0)) == -r.value);

    RMatrix zero = make_rmatrix(TensorElement());
    CHECK(cobracket(zero, alg.L(5)).is_zero());

    // r = L_0 (x) L_0, x = I_p -> p (I_p (x) L_0 + L_0 (x) I_p)
    RMatrix l00 = make_rmatrix(pure(alg, L0, L0));
    for (long long p : {1, 3, -2}) {
        auto Ip = alg.symbol(Family::I, Rational(p));
        TensorElement expected =
            Rational(p) * (pure(alg, Ip, L0) + pure(alg, L0, Ip));
        CHECK(cobracket(l00, alg.I(Rational(p))) == expected);
        CHECK(cobracket(l00, alg.I(Rational(p))) ==
              oracle::mini_act(alg, Ip, l00.value));
    }

    CHECK_THROWS_AS(cobracket(l00, alg.L(0) + alg.G(1)), std::invalid_argument);
}

TEST_CASE("cybe instances") {
    Algebra alg = case_a();
    auto L0 = alg.symbol(Family::L, 0);
    auto L1 = alg.symbol(Family::L, 1);
    auto I1 = alg.symbol(Family::I, 1);
    auto I2 = alg.symbol(Family::I, 2);

    CHECK(cybe(make_rmatrix(pure(alg, L0, L0))).is_zero());
    CHECK(cybe(make_rmatrix(pure(alg, I1, I2))).is_zero());

    TripleTensor c = cybe(make_rmatrix(pure(alg, L0, L1)));
    TripleTensor expected;
    expected.add_term(alg.group_ptr(), {L0, L1, L1}, Rational(1));
    CHECK(c == expected);
}

TEST_CASE("cybe agrees with the three-sum oracle on random r") {
    for (Algebra alg : {case_a(), case_b()}) {
        DegreeWindow window(alg.group(), 3);
        Rng rng(43);
        for (int trial = 0; trial < 40; ++trial) {
            for (Parity p : {Parity::Even, Parity::Odd}) {
                TensorElement u = fixtures::random_tensor_of_parity(alg, window, rng, p);
                if (u.is_zero()) continue;
                RMatrix r = make_rmatrix(u);
                CHECK(cybe(r) == oracle::mini_cybe(alg, u));
            }
        }
    }
}

TEST_CASE("mybe instances") {
    Algebra alg = case_a();
    auto L0 = alg.symbol(Family::L, 0);
    auto L1 = alg.symbol(Family::L, 1);

    DegreeWindow window(alg.group(), 3);

    // c(r) = 0 passes on any test set
    RMatrix abelian = make_rmatrix(pure(alg, alg.symbol(Family::I, 1), alg.symbol(Family::I, 2)));
    CHECK(mybe_check(alg, abelian, window.symbols(alg)).pass);

    RMatrix r = make_rmatrix(pure(alg, L0, L1));
    CheckReport rep = mybe_check(alg, r, {L0});
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.counterexamples.size() == 1);
    CHECK(rep.counterexamples[0].input == "L(0)");
    CHECK(rep.counterexamples[0].residual == "-2*L(0)(x)L(1)(x)L(1)");

    // window scan of the skew projection: this r is in fact triangular
    // (c(r) = 0), so the per-x residual list comes back empty
    RMatrix skew_r = make_rmatrix(skew_project(pure(alg, L0, L1)));
    CheckReport skewrep = mybe_check(alg, skew_r, window.symbols(alg));
    CHECK(skewrep.pass == cybe(skew_r).is_zero());
}

TEST_CASE("compatibility holds for arbitrary homogeneous r") {
    for (Algebra alg : {case_a(), case_b()}) {
        DegreeWindow window(alg.group(), 2);
        Rng rng(47);
        for (int trial = 0; trial < 6; ++trial) {
            for (Parity p : {Parity::Even, Parity::Odd}) {
                RMatrix r = make_rmatrix(fixtures::random_tensor_of_parity(alg, window, rng, p),
                                         p);
                CheckReport rep = verify_compatibility(alg, r, window);
                INFO("r = ", r.value.str(), " parity ", to_string(r.parity));
                CHECK(rep.pass);
            }
        }
    }
}

TEST_CASE("compatibility spot instances") {
    Algebra alg = case_a();
    auto L0 = alg.symbol(Family::L, 0);
    RMatrix r = make_rmatrix(pure(alg, L0, L0));
    DegreeWindow window(alg.group(), 2);
    CHECK(verify_compatibility(alg, r, window).pass);

    // odd x = y: the identity degenerates to Delta[x,x] = 2 (-1)^[r] x o Delta(x)
    auto G1 = alg.symbol(Family::G, 1);
    AlgElement gx = AlgElement::single(alg.group_ptr(), G1, Rational(1));
    AlgElement gg = bracket(gx, gx);  // = I_2, nonzero
    CHECK_FALSE(gg.is_zero());
    TensorElement lhs = cobracket(r, gg);
    TensorElement rhs = Rational(2) * act(gx, cobracket(r, gx));
    CHECK(lhs == rhs);
}

TEST_CASE("coalgebra verification on triangular r") {
    Algebra alg = case_a();
    DegreeWindow window(alg.group(), 3);
    auto I0 = alg.symbol(Family::I, 0);
    auto I1 = alg.symbol(Family::I, 1);

    // abelian-sector skew even r has c(r) = 0 and passes both axioms
    RMatrix r = make_rmatrix(skew_project(pure(alg, I0, I1)));
    REQUIRE(cybe(r).is_zero());
    CHECK(verify_coalgebra(alg, r, window).pass);

    // the classical Witt coboundary r = L_0 (x) L_a - L_a (x) L_0 is
    // triangular as well and exercises nonabelian cobrackets
    auto L0 = alg.symbol(Family::L, 0);
    auto L1 = alg.symbol(Family::L, 1);
    RMatrix witt = make_rmatrix(skew_project(pure(alg, L0, L1)));
    REQUIRE(cybe(witt).is_zero());
    CHECK(verify_coalgebra(alg, witt, window).pass);

    RMatrix zero = make_rmatrix(TensorElement());
    CHECK(verify_coalgebra(alg, zero, window).pass);
}

TEST_CASE("coalgebra verifier rejects non-skew or odd r") {
    Algebra alg = case_a();
    DegreeWindow window(alg.group(), 2);
    auto L0 = alg.symbol(Family::L, 0);
    auto L1 = alg.symbol(Family::L, 1);
    CHECK_THROWS_AS(verify_coalgebra(alg, make_rmatrix(pure(alg, L0, L1)), window),
                    std::domain_error);
    auto G0 = alg.symbol(Family::G, 0);
    RMatrix odd = make_rmatrix(skew_project(pure(alg, L0, G0)));
    CHECK(odd.skew);
    CHECK_THROWS_AS(verify_coalgebra(alg, odd, window), std::domain_error);
}

TEST_CASE("skew image invariant for skew even r") {
    for (Algebra alg : {case_a(), case_b()}) {
        DegreeWindow window(alg.group(), 3);
        Rng rng(53);
        for (int trial = 0; trial < 20; ++trial) {
            TensorElement u =
                fixtures::random_tensor_of_parity(alg, window, rng, Parity::Even);
            RMatrix r = make_rmatrix(skew_project(u));
            for (const auto& sym : window.symbols(alg)) {
                AlgElement x = AlgElement::single(alg.group_ptr(), sym, Rational(1));
                CHECK(is_skew(cobracket(r, x)));
            }
        }
    }
}

TEST_CASE("co-Jacobi obstruction equals x o c(r) for skew even r") {
    // ties cobracket, cyclic, act_triple and cybe together: for skew even r
    // the co-Jacobi defect of Delta_r at x is exactly the MYBE residual
    for (Algebra alg : {case_a(), case_b()}) {
        DegreeWindow window(alg.group(), 3);
        Rng rng(97);
        for (int trial = 0; trial < 10; ++trial) {
            RMatrix r = make_rmatrix(
                skew_project(fixtures::random_tensor_of_parity(alg, window, rng, Parity::Even)));
            TripleTensor c = cybe(r);
            for (const auto& xs : window.symbols(alg)) {
                AlgElement x = AlgElement::single(alg.group_ptr(), xs, Rational(1));
                TensorElement delta = cobracket(r, x);
                TripleTensor w;
                for (const auto& [key, cc] : delta.terms()) {
                    AlgElement second =
                        AlgElement::single(alg.group_ptr(), key.second, Rational(1));
                    TensorElement inner_delta = cobracket(r, second);
                    for (const auto& [pq, c2] : inner_delta.terms())
                        w.add_term(alg.group_ptr(), {key.first, pq.first, pq.second}, cc * c2);
                }
                TripleTensor xi = cyclic(w);
                CHECK(w + xi + cyclic(xi) == act_triple(x, c));
            }
        }
    }
}

TEST_CASE("bound-M scan is equivalent to cybe vanishing") {
    for (Algebra alg : {case_a(), case_b()}) {
        DegreeWindow window(alg.group(), 3);
        Rng rng(59);
        for (int trial = 0; trial < 25; ++trial) {
            TensorElement u = fixtures::random_tensor_of_parity(alg, window, rng, Parity::Even);
            RMatrix r = make_rmatrix(skew_project(u));
            CheckReport rep = mybe_bound_scan(alg, r);
            CHECK(rep.pass == cybe(r).is_zero());
        }
    }
}
