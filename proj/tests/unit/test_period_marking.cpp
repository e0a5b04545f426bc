#include "doctest.h"
#include "k3lat/period.hpp"
#include "k3lat/roots.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace k3lat;

namespace {

QI rand_qi(std::mt19937& rng, bool real = false) {
    std::uniform_int_distribution<long> num(-40, 40), den(1, 9);
    return QI(qq(num(rng), den(rng)), real ? Rat(0) : qq(num(rng), den(rng)));
}

GluingParams random_params(std::mt19937& rng) {
    GluingParams p;
    std::uniform_int_distribution<long> pos(1, 30), den(1, 9);
    p.tau = SymbolicComplex(QI(rand_qi(rng, true).re, qq(pos(rng), den(rng))));
    p.a_alpha = SymbolicComplex(rand_qi(rng, true));
    p.a_beta = SymbolicComplex(rand_qi(rng, true));
    for (int j = 0; j < 8; ++j) {
        p.c_plus.push_back(SymbolicComplex(rand_qi(rng)));
        p.c_minus.push_back(SymbolicComplex(rand_qi(rng)));
    }
    p.gamma9 = SymbolicComplex(rand_qi(rng));
    p.x = SymbolicComplex(rand_qi(rng));
    return p;
}

SymbolicComplex S(long v) { return SymbolicComplex(v); }

}  // namespace

TEST_CASE("Gaussian rationals and symbolic arithmetic") {
    QI a(qq(1, 2), 3), b(2, -1);
    CHECK(a * b == QI(Rat(4), qq(11, 2)));
    CHECK((a / b) * b == a);
    CHECK_THROWS_AS(a / QI(), SymbolError);

    SymbolTable t = example_symbols(0, 1);
    auto mu = SymbolicComplex::symbol("mu");
    CHECK(multiply(mu, mu, t) == SymbolicComplex::symbol("mu2"));
    CHECK(multiply(mu, multiply(mu, mu, t), t) == S(-2));
    CHECK(std::abs(evaluate(multiply(mu, mu, t), t) - evaluate(SymbolicComplex::symbol("mu2"), t)) < 1e-15L);
    CHECK_THROWS_AS(multiply(mu, SymbolicComplex::symbol("xr"), t), SymbolError);
    t.strict = false;
    CHECK(multiply(mu, SymbolicComplex::symbol("xr"), t).terms.count("mu*xr") == 1);
    CHECK_THROWS_AS(t.check(SymbolicComplex::symbol("nu")), SymbolError);
    CHECK((mu - mu).is_zero());
    CHECK(SymbolicComplex(QI(0, 1)).conj() == SymbolicComplex(QI(0, -1)));
}

TEST_CASE("basis pairings") {
    SymbolTable t;
    CHECK(period_pairing(basis_vector("A_ab"), basis_vector("B_g"), false, t) == S(1));
    CHECK(period_pairing(basis_vector("B_a"), basis_vector("B_a"), false, t) == S(-2));
    CHECK(period_pairing(basis_vector("A_bg"), basis_vector("A_bg"), false, t) == S(0));
    CHECK(period_pairing(basis_vector("A_ab"), basis_vector("B_a"), false, t) == S(0));
}

TEST_CASE("the rho = 17 period") {
    SymbolTable t = example_symbols(0.25L, 3);
    PeriodVector s = example_period(t);
    auto mu = SymbolicComplex::symbol("mu");
    CHECK(s.at("A_ab") == QI(2) * mu);
    CHECK(s.at("B_g") == mu);
    CHECK(s.at("B_a") == SymbolicComplex(QI(0, 1)));
    CHECK(s.at("B_b") == S(1));
    SymbolicComplex x = SymbolicComplex::symbol("xr") + SymbolicComplex::symbol("xi", QI(0, 1));
    CHECK(s.at("A_bg") == x);
    // y = -mu^2 - i x
    CHECK(s.at("A_ga") == -SymbolicComplex::symbol("mu2") - QI(0, 1) * x);
    CHECK(period_pairing(s, s, false, t).is_zero());
    // (s.conj s) = 4 Im x - 4 exactly
    CHECK(period_pairing(s, s, true, t) == QI(4) * SymbolicComplex::symbol("xi") - S(4));
}

TEST_CASE("solve_y on a small period") {
    SymbolTable t;
    PeriodVector s{std::vector<SymbolicComplex>(22)};
    s.at("B_a") = SymbolicComplex(QI(0, 1));
    s.at("B_b") = S(1);
    // by hand: (s.s) = -2 (i)^2 + 2y - 2 = 2y
    CHECK(solve_y(s, t).is_zero());
    s.at("A_bg") = S(3);
    // now 2*3*i adds 6i, so y = -3i
    CHECK(solve_y(s, t) == SymbolicComplex(QI(0, -3)));
    PeriodVector bad{std::vector<SymbolicComplex>(22)};
    CHECK_THROWS_AS(solve_y(bad, t), SymbolError);
}

TEST_CASE("period identities on random parameters") {
    std::mt19937 rng(53);
    SymbolTable t;
    for (int k = 0; k < 100; ++k) {
        GluingParams p = random_params(rng);
        PeriodVector s = period_from_params(p, t);
        CHECK(period_pairing(s, s, false, t).is_zero());
        CHECK(period_pairing(s, v_pq(p.a_alpha, p.a_beta), false, t).is_zero());
        CHECK(s.at("B_b") == S(1));

        // changing x by d moves (s.conj s) by 4 Im(tau) Im(d)
        QI d = rand_qi(rng);
        GluingParams p2 = p;
        p2.x = p.x + SymbolicComplex(d);
        PeriodVector s2 = period_from_params(p2, t);
        SymbolicComplex delta = period_pairing(s2, s2, true, t) - period_pairing(s, s, true, t);
        CHECK(delta == SymbolicComplex(QI(Rat(4) * p.tau.constant().im * d.im)));
    }
    GluingParams z = random_params(rng);
    z.a_alpha = SymbolicComplex();
    z.a_beta = SymbolicComplex();
    z.gamma9 = SymbolicComplex();
    PeriodVector s = period_from_params(z, t);
    CHECK(s.at("A_ab").is_zero());
    CHECK(s.at("B_g").is_zero());

    GluingParams lower = random_params(rng);
    lower.tau = SymbolicComplex(QI(0, -1));
    CHECK_THROWS_AS(period_from_params(lower, t), SymbolError);
}

TEST_CASE("realizability of the rho = 17 family") {
    auto mu = SymbolicComplex::symbol("mu");
    for (long double im_x : {0.5L, 0.9L, 1.1L, 2.0L, 5.0L})
        for (long double Lambda : {0.0L, 1.0L, 3.0L}) {
            SymbolTable t = example_symbols(0.3L, im_x);
            Realizability r = realizability_check(example_period(t), S(0), mu, Lambda, t);
            bool expect = im_x > 1 + Lambda / 4;
            CHECK(r.verdict == (expect ? "pass" : "fail(c)"));
        }
    // the printed threshold Im x > 2 - mu^2 + Lambda/2 disagrees at Im x = 0.7, Lambda = 0
    SymbolTable t = example_symbols(0, 0.7L);
    const long double mu2 = std::pow(std::cbrt(2.0L), 2);
    CHECK(0.7L > 2 - mu2);
    CHECK(realizability_check(example_period(t), S(0), mu, 0, t).verdict == "fail(c)");

    PeriodVector s = example_period(t);
    CHECK(realizability_check(s, S(1), mu, 0, t).verdict == "precondition_violated");
    PeriodVector nob = s;
    nob.at("B_b") = SymbolicComplex();
    nob.at("B_g") = SymbolicComplex();
    CHECK(realizability_check(nob, S(0), mu, 0, t).verdict == "fail(a)");
    PeriodVector down = s;
    down.at("B_a") = SymbolicComplex(QI(0, -1));
    // orthogonality to v only sees b_gamma, a_ab-side pairings, so it still holds
    CHECK(realizability_check(down, S(0), mu, 0, t).verdict == "fail(b)");
}

TEST_CASE("type II monodromy") {
    IntMatrix m = monodromy_type_II();
    LabeledLattice K = k3_lattice();
    const IntMatrix& g = K.lattice.gram();
    CHECK(m.transpose() * g * m == g);
    IntMatrix n = m - IntMatrix::identity(22);
    CHECK(n * n == IntMatrix(22, 22));
    CHECK(m != IntMatrix::identity(22));
    std::size_t Ba = K.basis.index("B_a"), Aga = K.basis.index("A_ga"), Bb = K.basis.index("B_b"),
                Abg = K.basis.index("A_bg");
    CHECK(m(Ba, Ba) == 1);
    CHECK(m(Aga, Ba) == 1);
    CHECK(m(Abg, Bb) == -1);
    for (std::size_t j = 0; j < 22; ++j)
        if (j != Ba && j != Bb)
            for (std::size_t i = 0; i < 22; ++i) CHECK(m(i, j) == (i == j ? 1 : 0));

    // the printed B_b -> B_b + A_bg is not an isometry
    IntMatrix printed = IntMatrix::identity(22);
    printed(Aga, Ba) = 1;
    printed(Abg, Bb) = 1;
    CHECK(printed.transpose() * g * printed != g);
}

TEST_CASE("Picard lattice of the rho = 17 period") {
    SymbolTable t = example_symbols(0.1L, 2);
    PicardResult pic = picard_lattice(example_period(t), t);
    CHECK(pic.rank == 17);
    CHECK(pic.lattice.even());
    CHECK(picard_signature_check(pic.lattice));
    LabeledLattice K = k3_lattice();
    // B_g and every C class lie in the kernel: their span is saturated in it
    QMatrix kb(22, pic.rank);
    for (std::size_t a = 0; a < pic.rank; ++a)
        for (std::size_t i = 0; i < 22; ++i) kb(i, a) = pic.basis[a][i];
    auto in_kernel = [&](const std::string& label) {
        IntVec e(22, Int(0));
        e[K.basis.index(label)] = 1;
        auto sol = solve(kb, to_q(e));
        return sol && is_integral(*sol);
    };
    CHECK(in_kernel("B_g"));
    for (const char* side : {"C+", "C-"})
        for (const char* n : {"12", "23", "34", "45", "56", "67", "78", "678"}) CHECK(in_kernel(std::string(side) + n));
    CHECK_FALSE(in_kernel("A_ab"));
    CHECK(enumerate_roots(pic.lattice).size() == 482);
}

TEST_CASE("Picard lattice extremes") {
    SymbolTable t;
    PeriodVector generic{std::vector<SymbolicComplex>(22)};
    for (int i = 0; i < 22; ++i) {
        t.declare("s" + std::to_string(i), 1.0L + i);
        generic.coeffs[i] = SymbolicComplex::symbol("s" + std::to_string(i));
    }
    CHECK(picard_lattice(generic, t).rank == 0);
    PicardResult one = picard_lattice(basis_vector("A_bg"), SymbolTable{});
    CHECK(one.rank == 21);
    // A_bg is isotropic, so it lies in its own orthogonal complement
    CHECK(one.degenerate);
    PeriodVector undeclared = basis_vector("A_bg");
    undeclared.at("A_bg") = SymbolicComplex::symbol("z");
    CHECK_THROWS_AS(picard_lattice(undeclared, SymbolTable{}), SymbolError);
}

TEST_CASE("tube integral") {
    constexpr long double two_pi = 2 * std::numbers::pi_v<long double>;
    auto r0 = tube_integral_check(0, 3, 2);
    CHECK(std::abs(r0.value - std::complex<long double>(std::log(6.0L), 0)) < 1e-8L);
    auto r1 = tube_integral_check(1, std::exp(1.0L), std::exp(1.0L));
    CHECK(std::abs(r1.value - std::complex<long double>(2, -two_pi)) < 1e-8L);
    std::mt19937 rng(59);
    std::uniform_real_distribution<double> ua(-2, 2), ur(1.1, 6);
    for (int k = 0; k < 10; ++k) {
        auto r = tube_integral_check(ua(rng), ur(rng), ur(rng), ua(rng));
        CHECK(std::abs(r.value - r.closed_form) < 1e-6L);
    }
    long double d = 1e-3L;
    auto v0 = tube_integral_check(0.4L, 2, 2), v1 = tube_integral_check(0.4L + d, 2, 2);
    CHECK(std::abs((v1.value - v0.value) / d - std::complex<long double>(0, -two_pi)) < 1e-6L);
    CHECK_THROWS(tube_integral_check(0, 0.5L, 2));
    CHECK_THROWS(tube_integral_check(0, 2, 2, 0, 1e-10L, std::make_pair(0.1L, 1.0L)));
}

TEST_CASE("volume and blow-up formulas") {
    CHECK(static_cast<double>(volume_log_formula(std::exp(1.0L), 1, 1)) == doctest::Approx(4 * std::numbers::pi));
    CHECK(volume_log_formula(1, 1, 5) == 0);
    CHECK(volume_log_formula(3, 1, 1) > volume_log_formula(2, 1, 1));
    CHECK(blowup_tangent_cohomology(4) == Cohomology3{0, 0, 0});
    CHECK(blowup_tangent_cohomology(9) == Cohomology3{0, 10, 0});
    CHECK(blowup_tangent_cohomology(13) == Cohomology3{0, 18, 0});
    CHECK_THROWS(blowup_tangent_cohomology(3));
}
