#include "doctest.h"
#include "k3lat/catalog.hpp"

#include <set>

using namespace k3lat;

namespace {

QVec add(const QVec& a, const QVec& b, const Rat& s = 1) {
    QVec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += s * b[i];
    return r;
}

}  // namespace

TEST_CASE("hyperbolic plane") {
    IntLattice U = hyperbolic_U();
    CHECK(U.det() == -1);
    CHECK(U.even());
    CHECK(U.signature() == Inertia{1, 1, 0});
}

TEST_CASE("E8(-1) from the chain diagram") {
    IntLattice e = e8_minus();
    CHECK(abs(e.det()) == 1);
    CHECK(e.signature() == Inertia{0, 8, 0});
    CHECK(e.gram()(4, 7) == 1);  // C678 meets C56
    CHECK(e.gram()(6, 7) == 0);
    CHECK(abs(e8_minus_d().det()) == 1);
}

TEST_CASE("K3 lattice") {
    LabeledLattice k = k3_lattice();
    CHECK(k.lattice.rank() == 22);
    CHECK(k.basis.labels.size() == 22);
    CHECK(k.lattice.signature() == Inertia{3, 19, 0});
    CHECK(abs(k.lattice.det()) == 1);
    CHECK(k.lattice.even());
    const IntMatrix& g = k.lattice.gram();
    for (std::size_t b = 0; b < 3; ++b) {
        CHECK(g(2 * b, 2 * b) == 0);
        CHECK(g(2 * b, 2 * b + 1) == 1);
        CHECK(g(2 * b + 1, 2 * b + 1) == -2);
    }
    for (std::size_t i = 0; i < 22; ++i)
        for (std::size_t j = 0; j < 22; ++j) {
            bool same_block = (i < 6 && j < 6 && i / 2 == j / 2) || (i >= 6 && j >= 6 && (i - 6) / 8 == (j - 6) / 8);
            if (!same_block) CHECK(g(i, j) == 0);
        }
    CHECK(k.basis.index("B_g") == 1);
    CHECK(k.basis.index("C-678") == 21);
}

TEST_CASE("Kummer lattice") {
    KummerLattice K = kummer_lattice();
    const IntLattice& L = K.lat.lattice;
    CHECK(L.even());
    CHECK(L.signature() == Inertia{0, 16, 0});
    CHECK(abs(L.det()) == 64);

    // all 64 combinations of the six E_ij: q formula and distinct classes
    DiscriminantGroup G = discriminant_group(L);
    const int pairs[6][2] = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    std::set<std::vector<Int>> classes;
    for (int mask = 0; mask < 64; ++mask) {
        int t[6];
        QVec x(16, Rat(0));
        for (int k = 0; k < 6; ++k) {
            t[k] = (mask >> k) & 1;
            if (t[k]) x = add(x, K.E_ij(pairs[k][0], pairs[k][1]));
        }
        Rat expect = frac(qq(t[0] * t[5] + t[1] * t[4] + t[2] * t[3], 2));
        CHECK(disc_q(L, x) == expect);
        classes.insert(disc_coords(L, G, x));
    }
    CHECK(classes.size() == 64);

    for (int k = 0; k < 6; ++k) {
        QVec e = K.E_ij(pairs[k][0], pairs[k][1]);
        CHECK_FALSE(is_integral(e));
        CHECK(is_integral(add(e, e)));
    }
}

TEST_CASE("node permutation of the identity is the identity") {
    KummerLattice K = kummer_lattice();
    CHECK(K.node_permutation_action(IntMatrix::identity(4)) == IntMatrix::identity(16));
}

TEST_CASE("torus image lattice") {
    TorusLattice T = torus_image_lattice();
    const IntLattice& L = T.lat.lattice;
    const IntMatrix& g = L.gram();
    CHECK(g(0, 5) == 2);   // 2V12.2V34
    CHECK(g(0, 1) == 0);   // 2V12.2V13
    CHECK(g(1, 4) == -2);  // 2V13.2V24
    CHECK(g(2, 3) == 2);   // 2V14.2V23
    CHECK(L.signature() == Inertia{3, 3, 0});
    CHECK(L.even());
    DiscriminantGroup G = discriminant_group(L);
    CHECK(G.invariant_factors == std::vector<Int>(6, Int(2)));
    CHECK(disc_q(L, add(T.V_ij(1, 2), T.V_ij(3, 4))) == qq(1, 2));
    CHECK(disc_q(L, add(T.V_ij(1, 2), T.V_ij(1, 3))) == 0);
}

TEST_CASE("McMullen lattices") {
    IntLattice L1 = mcmullen_L1();
    CHECK(L1.even());
    CHECK(L1.signature() == Inertia{3, 7, 0});
    IntLattice L2 = mcmullen_L2();
    CHECK(L2.even());
    CHECK(L2.signature() == Inertia{0, 4, 0});
    DiscriminantGroup G2 = discriminant_group(L2);
    CHECK(G2.invariant_factors == std::vector<Int>{3, 3});
    auto c1 = disc_coords(L2, G2, mcmullen_v1());
    auto c2 = disc_coords(L2, G2, mcmullen_v2());
    CHECK((c1[0] * c2[1] - c1[1] * c2[0]) % 3 != 0);
}

TEST_CASE("E10 is even hyperbolic") {
    IntLattice e = e10();
    CHECK(e.even());
    CHECK(e.signature() == Inertia{1, 9, 0});
    CHECK(abs(e.det()) == 1);
}

TEST_CASE("catalog lookup") {
    for (const auto& n : catalog_names()) {
        LabeledLattice l = catalog_lattice(n);
        CHECK(l.basis.labels.size() == l.lattice.rank());
        std::set<std::string> uniq(l.basis.labels.begin(), l.basis.labels.end());
        CHECK(uniq.size() == l.basis.labels.size());
        CHECK(l.lattice.even());
    }
    CHECK_THROWS_AS(catalog_lattice("nope"), LatticeError);
}
