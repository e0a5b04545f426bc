#include "doctest.h"
#include "k3lat/catalog.hpp"
#include "k3lat/isometry.hpp"
#include "k3lat/spectral.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <random>

using namespace k3lat;

namespace {

oracle::Mat to_oracle(const IntMatrix& m) {
    oracle::Mat r(m.rows(), std::vector<oracle::Int>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = m(i, j);
    return r;
}

std::map<Rat, int> q_multiset(const IntLattice& L) {
    std::map<Rat, int> m;
    DiscriminantGroup g = discriminant_group(L);
    for (const auto& c : disc_enumerate(g)) ++m[disc_q(L, disc_element(g, c))];
    return m;
}

}  // namespace

TEST_CASE("char_poly agrees with Faddeev-LeVerrier") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = 1 + rng() % 7;
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
        CHECK(char_poly(m).c == oracle::charpoly_leverrier(to_oracle(m)));
    }
}

TEST_CASE("char_poly examples") {
    CHECK(char_poly(IntMatrix::identity(3)) == IntPoly::from_longs({-1, 3, -3, 1}));
    for (long a : {0L, 1L, 2L, 5L}) {
        CHECK(char_poly(kummer_torus_matrix(a)) == IntPoly::from_longs({1, 1, a, 0, 1}));
        CHECK(char_poly(wedge_square(kummer_torus_matrix(a))) == kummer_salem_polynomial(a));
    }
    CHECK(IntPoly::from_longs({1, 1, 0, -1}).to_string() == "-t^3+t+1");
}

TEST_CASE("isometry checks") {
    CHECK(is_isometry(e8_minus(), IntMatrix::identity(8)));
    TorusLattice T = torus_image_lattice();
    for (long a : {0L, 3L}) CHECK(is_isometry(T.lat.lattice, wedge_square(kummer_torus_matrix(a))));
    CHECK_FALSE(is_isometry(hyperbolic_U(), IntMatrix{{1, 1}, {0, 1}}));
    CHECK_FALSE(is_isometry(hyperbolic_U(), IntMatrix::identity(3)));
}

TEST_CASE("Coxeter elements") {
    IntMatrix c2 = coxeter_element(a2());
    CHECK(is_isometry(a2(), c2));
    CHECK(char_poly(c2) == IntPoly::from_longs({1, 1, 1}));
    CHECK(order_of(c2, 120) == std::optional<std::size_t>(3));

    IntLattice a1("a1", IntMatrix{{-2}});
    CHECK(coxeter_element(a1) == IntMatrix{{-1}});
    CHECK(char_poly(coxeter_element(a1)) == IntPoly::from_longs({1, 1}));

    IntMatrix c10 = coxeter_element(e10());
    CHECK(is_isometry(e10(), c10));
    CHECK(char_poly(c10) == lehmer_polynomial());
    CHECK_FALSE(order_of(c10, 120).has_value());
    CHECK(order_of(IntMatrix::identity(4), 10) == std::optional<std::size_t>(1));

    CHECK_THROWS_AS(coxeter_element(hyperbolic_U()), LatticeError);
}

TEST_CASE("Coxeter char poly does not depend on the ordering") {
    IntLattice a4("a4", dynkin_gram(4, {{0, 1}, {1, 2}, {2, 3}}));
    std::vector<std::size_t> order{0, 1, 2, 3};
    IntPoly ref = char_poly(coxeter_element(a4, order));
    do {
        CHECK(char_poly(coxeter_element(a4, order)) == ref);
    } while (std::next_permutation(order.begin(), order.end()));

    std::mt19937 rng(37);
    std::vector<std::size_t> o8{0, 1, 2, 3, 4, 5, 6, 7};
    IntPoly e8ref = char_poly(coxeter_element(e8_minus(), o8));
    for (int t = 0; t < 12; ++t) {
        std::shuffle(o8.begin(), o8.end(), rng);
        CHECK(char_poly(coxeter_element(e8_minus(), o8)) == e8ref);
    }
    // the E8 Coxeter number is 30
    CHECK(order_of(coxeter_element(e8_minus()), 120) == std::optional<std::size_t>(30));
}

TEST_CASE("char polys of isometries are reciprocal") {
    CHECK(reciprocal_sign(char_poly(coxeter_element(e10()))) != 0);
    CHECK(reciprocal_sign(char_poly(coxeter_element(e8_minus()))) != 0);
    CHECK(reciprocal_sign(char_poly(mcmullen_f2())) != 0);
    for (long a : {0L, 1L, 4L}) CHECK(reciprocal_sign(char_poly(wedge_square(kummer_torus_matrix(a)))) != 0);
    CHECK(reciprocal_sign(IntPoly::from_longs({1, 2, 3})) == 0);
}

TEST_CASE("McMullen twist of the E10 Coxeter element") {
    IntMatrix f1 = coxeter_element(e10());
    IntLattice L = mcmullen_twist(e10(), f1);
    CHECK(L.even());
    CHECK(L.signature() == Inertia{3, 7, 0});
    CHECK(discriminant_group(L).invariant_factors == std::vector<Int>{3, 3});
    IntLattice P = mcmullen_L1();
    CHECK(L.det() == P.det());
    CHECK(q_multiset(L) == q_multiset(P));
    CHECK(is_isometry(L, f1));
    CHECK_THROWS_AS(mcmullen_twist(e10(), IntMatrix::identity(10) + IntMatrix::identity(10)), LatticeError);
}

TEST_CASE("discriminant actions") {
    IntLattice L2 = mcmullen_L2();
    DiscriminantGroup G = discriminant_group(L2);
    IntMatrix f2 = mcmullen_f2();
    CHECK(is_isometry(L2, f2));
    QMatrix fq = to_q(f2);
    CHECK(disc_coords(L2, G, fq * mcmullen_v1()) == disc_coords(L2, G, mcmullen_v2()));
    QVec two_v1 = mcmullen_v1();
    for (auto& x : two_v1) x *= 2;
    CHECK(disc_coords(L2, G, fq * mcmullen_v2()) == disc_coords(L2, G, two_v1));

    DiscAction id = discriminant_action(L2, G, IntMatrix::identity(4));
    CHECK(id.matrix == IntMatrix::identity(2));
    DiscAction act = discriminant_action(L2, G, f2);
    CHECK(act.moduli == std::vector<Int>{3, 3});
    CHECK(act.matrix != IntMatrix::identity(2));
}
