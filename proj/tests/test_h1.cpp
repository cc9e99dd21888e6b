#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superw/cohomology.hpp"

#include "support/fixtures.hpp"
#include "support/h1_oracle.hpp"

using namespace superw;
using fixtures::case_a;
using fixtures::case_b;

namespace {

Rational dot(const SparseRow& eq, const SparseRow& vec) {
    Rational sum;
    size_t a = 0, b = 0;
    while (a < eq.size() && b < vec.size()) {
        if (eq[a].first < vec[b].first) {
            ++a;
        } else if (vec[b].first < eq[a].first) {
            ++b;
        } else {
            sum += eq[a].second * vec[b].second;
            ++a;
            ++b;
        }
    }
    return sum;
}

}  // namespace

TEST_CASE("row echelon ranks") {
    RowEchelon e;
    CHECK(e.insert({{0, Rational(1)}, {1, Rational(2)}}));
    CHECK(e.insert({{1, Rational(1)}}));
    CHECK_FALSE(e.insert({{0, Rational(2)}, {1, Rational(4)}}));   // dependent
    CHECK_FALSE(e.insert({{0, Rational(3)}, {1, Rational(-1)}}));  // spanned by the first two
    CHECK(e.insert({{2, Rational(5, 3)}}));
    CHECK(e.rank() == 3);
    CHECK_FALSE(e.insert({}));
}

TEST_CASE("inner derivations solve the assembled system exactly") {
    // the decisive soundness check of the truncation: every tracked equation
    // must annihilate every tracked inner generator
    for (Algebra alg : {case_a(), case_b()}) {
        DegreeWindow window(alg.group(), 3);
        for (Parity p : {Parity::Even, Parity::Odd}) {
            for (long long k : {-1, 0, 2}) {
                Degree t = alg.group().degree_of(Rational(k) * alg.group().epsilon());
                CocycleSystem sys = assemble_cocycle_system(alg, t, p, window);
                for (const auto& gen : sys.inner_generators)
                    for (const auto& eq : sys.equations) CHECK(dot(eq, gen) == Rational(0));
            }
        }
    }
}

TEST_CASE("windowed H1 quotient vanishes on small instances") {
    Algebra a = case_a();
    DegreeWindow wa(a.group(), 4);
    CheckReport rep = solve_h1_window(a, Degree{Rational(1), Coset::Gamma}, Parity::Even, wa);
    CHECK(rep.pass);
    CHECK(rep.dimensions.at("interior_quotient") == 0);

    Algebra b = case_b();
    DegreeWindow wb(b.group(), 4);
    CheckReport rb = solve_h1_window(b, Degree{Rational(0), Coset::Gamma}, Parity::Odd, wb);
    CHECK(rb.pass);
    CHECK(rb.dimensions.at("interior_quotient") == 0);

    // a shifted degree in case B
    CheckReport rs = solve_h1_window(b, b.group().degree_of(Rational(1, 2)), Parity::Even, wb);
    CHECK(rs.pass);
}

TEST_CASE("every windowed cocycle with t != 0 is the inner of its witness on the interior") {
    Algebra alg = case_a();
    DegreeWindow window(alg.group(), 3);
    Degree t{Rational(1), Coset::Gamma};
    CocycleSystem sys;
    solve_h1_window(alg, t, Parity::Even, window, &sys);

    h1_oracle::System parsed = h1_oracle::parse_system(sys.export_text());
    auto kernel = [&] {
        h1_oracle::Echelon ech;
        for (const auto& row : parsed.equations) ech.add(row);
        return h1_oracle::kernel_basis(ech, parsed.unknowns);
    }();
    REQUIRE(!kernel.empty());

    BasisSymbol l0 = alg.symbol(Family::L, 0);
    for (const auto& vec : kernel) {
        // witness u = -d(L_0)/t read off the solution's L_0 coordinates
        TensorElement u;
        for (int i = 0; i < static_cast<int>(sys.unknowns.size()); ++i) {
            if (!(sys.unknowns[i].source == l0)) continue;
            auto it = vec.find(i);
            if (it != vec.end())
                u.add_term(alg.group_ptr(), sys.unknowns[i].target,
                           Rational(-1) * it->second / t.value);
        }
        HomDerivation d = inner(alg, window, u, Parity::Even);
        for (int i : sys.interior) {
            auto it = vec.find(i);
            Rational got = it == vec.end() ? Rational(0) : it->second;
            CHECK(got == d.value(sys.unknowns[i].source).coeff(sys.unknowns[i].target));
        }
    }
}

TEST_CASE("windowed degree-0 cocycles vanish on L_0 over the interior") {
    Algebra alg = case_a();
    DegreeWindow window(alg.group(), 3);
    CocycleSystem sys;
    solve_h1_window(alg, Degree{Rational(0), Coset::Gamma}, Parity::Even, window, &sys);

    h1_oracle::System parsed = h1_oracle::parse_system(sys.export_text());
    h1_oracle::Echelon ech;
    for (const auto& row : parsed.equations) ech.add(row);
    auto kernel = h1_oracle::kernel_basis(ech, parsed.unknowns);
    REQUIRE(!kernel.empty());

    BasisSymbol l0 = alg.symbol(Family::L, 0);
    for (const auto& vec : kernel) {
        for (int i : sys.interior) {
            if (!(sys.unknowns[i].source == l0)) continue;
            auto it = vec.find(i);
            if (it != vec.end()) CHECK(it->second.is_zero());
        }
    }
}

TEST_CASE("empty interior is rejected") {
    Algebra alg = case_a();
    DegreeWindow tiny(alg.group(), 1);
    CHECK_THROWS_AS(
        solve_h1_window(alg, Degree{Rational(0), Coset::Gamma}, Parity::Even, tiny),
        std::domain_error);
}

TEST_CASE("system export is parseable and self-consistent") {
    Algebra alg = case_a();
    DegreeWindow window(alg.group(), 3);
    CocycleSystem sys =
        assemble_cocycle_system(alg, Degree{Rational(0), Coset::Gamma}, Parity::Even, window);
    std::string dump = sys.export_text();
    CHECK(dump.find("superw-cocycle-system v1") == 0);
    CHECK(dump.find("unknowns " + std::to_string(sys.unknowns.size())) != std::string::npos);
    CHECK(dump.find("equations " + std::to_string(sys.equations.size())) != std::string::npos);
    CHECK(dump.find("inners " + std::to_string(sys.inner_generators.size())) != std::string::npos);
    CHECK(dump.rfind("end\n") == dump.size() - 4);

    // column references stay in range, rows stay sorted
    for (const auto& row : sys.equations) {
        for (size_t i = 0; i < row.size(); ++i) {
            CHECK(row[i].first >= 0);
            CHECK(row[i].first < static_cast<int>(sys.unknowns.size()));
            if (i) CHECK(row[i - 1].first < row[i].first);
        }
    }
}

TEST_CASE("annihilator scan instances") {
    Algebra alg = case_a();
    CheckReport r1 = annihilator_scan(alg, alg.L(5), Rational(1), 7);
    CHECK(r1.pass);
    CHECK(r1.dimensions.at("found_m") == 1);  // [L_1, L_5] = -4 L_6

    // [L_1, G_(1/2)] has coefficient 1/2 - 1/2 = 0, so the witness is m = 2
    Algebra b = case_b();
    CheckReport r2 = annihilator_scan(b, b.G(Rational(1, 2)), Rational(1), 7);
    CHECK(r2.pass);
    CHECK(r2.dimensions.at("found_m") == 2);

    CHECK_THROWS_AS(annihilator_scan(alg, AlgElement(), Rational(1), 3), std::domain_error);

    // tensor and triple variants
    TensorElement u = TensorElement::single(alg.group_ptr(), alg.symbol(Family::L, 2),
                                            alg.symbol(Family::I, 0), Rational(1));
    CHECK(annihilator_scan(alg, u, Rational(1), 2).pass);
    TripleTensor w;
    w.add_term(alg.group_ptr(),
               {alg.symbol(Family::L, 1), alg.symbol(Family::L, 1), alg.symbol(Family::L, 1)},
               Rational(1));
    CheckReport r3 = annihilator_scan(alg, w, Rational(1), 2);
    CHECK(r3.pass);
    CHECK(r3.dimensions.at("found_m") == 2);  // L_1 annihilates L_1 (x) L_1 (x) L_1
}
