#include "doctest.h"
#include "k3lat/catalog.hpp"
#include "k3lat/roots.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <set>

using namespace k3lat;

namespace {

oracle::Mat to_oracle(const IntMatrix& m) {
    oracle::Mat r(m.rows(), std::vector<oracle::Int>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = m(i, j);
    return r;
}

std::set<std::vector<long>> as_set(const std::vector<IntVec>& v) {
    std::set<std::vector<long>> s;
    for (const auto& x : v) {
        std::vector<long> y;
        for (const auto& t : x) y.push_back(t.get_si());
        s.insert(y);
    }
    return s;
}

void agrees_with_box(const IntLattice& L) {
    auto g = to_oracle(L.gram());
    auto box = oracle::box_search_bounds(g, oracle::definite_box(g, 2), -2);
    auto roots = enumerate_roots(L);
    CHECK(roots.size() == box.size());
    CHECK(as_set(roots) == std::set<std::vector<long>>(box.begin(), box.end()));
}

IntVec unit(std::size_t n, std::size_t i, long c = 1) {
    IntVec e(n, Int(0));
    e[i] = c;
    return e;
}

}  // namespace

TEST_CASE("root enumeration") {
    IntLattice a1("a1", IntMatrix{{-2}});
    auto r1 = enumerate_roots(a1);
    CHECK(r1 == std::vector<IntVec>{{Int(-1)}, {Int(1)}});
    CHECK(enumerate_roots(a2()).size() == 6);
    agrees_with_box(a2());
    CHECK(enumerate_roots(e8_minus()).size() == 240);
    agrees_with_box(e8_minus());
    agrees_with_box(e8_minus_d());
    agrees_with_box(mcmullen_L2());
    IntLattice d4("d4", dynkin_gram(4, {{0, 1}, {1, 2}, {1, 3}}));
    CHECK(enumerate_roots(d4).size() == 24);
    agrees_with_box(d4);
    CHECK_THROWS_AS(enumerate_roots(hyperbolic_U()), LatticeError);
}

TEST_CASE("root sets are closed under negation and sorted") {
    auto roots = enumerate_roots(e8_minus_d());
    CHECK(std::is_sorted(roots.begin(), roots.end()));
    auto s = as_set(roots);
    for (auto v : s) {
        for (auto& t : v) t = -t;
        CHECK(s.count(v) == 1);
    }
    IntLattice L = e8_minus_d();
    for (const auto& r : roots) CHECK(pairing(L, r, r) == -2);
}

TEST_CASE("Picard lattice of rank 17") {
    LabeledLattice P = picard_rho17();
    CHECK(P.lattice.rank() == 17);
    CHECK(picard_signature_check(P.lattice));
    CHECK(enumerate_roots(P.lattice).size() == 2 + 240 + 240);
    CHECK_FALSE(picard_signature_check(hyperbolic_U()));
    CHECK(picard_signature_check(e8_minus()));
}

TEST_CASE("short vectors") {
    // A2 has 6 vectors of norm 2 and 6 of norm 6
    CHECK(short_vectors(a2(), 2).size() == 6);
    CHECK(short_vectors(a2(), 6).size() == 12);
    auto g = to_oracle(e8_minus().gram());
    auto box4 = oracle::box_search_bounds(g, oracle::definite_box(g, 4), -4);
    // E8 has 2160 vectors of norm 4
    CHECK(box4.size() == 2160);
    CHECK(short_vectors(e8_minus(), 4).size() == 240 + 2160);
}

TEST_CASE("dominant root") {
    IntLattice L = e8_minus_d();
    IntVec a = dominant_root(L);
    CHECK(a == IntVec{-3, -2, -4, -6, -5, -4, -3, -2});
    CHECK(pairing(L, a, a) == -2);
    for (std::size_t j = 0; j < 8; ++j) {
        Rat p = pairing(L, a, unit(8, j));
        CHECK((p == 0 || p == 1));
    }
    // A2: the dominant root is -(e1 + e2)
    CHECK(dominant_root(a2()) == IntVec{-1, -1});
}

TEST_CASE("max disjoint roots") {
    LabeledLattice P = picard_rho17();
    std::vector<IntVec> gens;
    for (std::size_t i = 0; i < 17; ++i) gens.push_back(unit(17, i));
    auto best = max_disjoint_roots(P.lattice, gens);
    CHECK(best.size() == 9);
    for (std::size_t i = 0; i < best.size(); ++i)
        for (std::size_t j = i + 1; j < best.size(); ++j)
            CHECK(pairing(P.lattice, gens[best[i]], gens[best[j]]) == 0);

    // brute force over the 2^8 subsets of E8 simple roots
    IntLattice E = e8_minus_d();
    std::vector<IntVec> simple;
    for (std::size_t i = 0; i < 8; ++i) simple.push_back(unit(8, i));
    std::size_t brute = 0;
    for (unsigned m = 0; m < 256; ++m) {
        bool ok = true;
        for (unsigned i = 0; i < 8 && ok; ++i)
            for (unsigned j = i + 1; j < 8 && ok; ++j)
                if ((m >> i & 1) && (m >> j & 1) && E.gram()(i, j) != 0) ok = false;
        if (ok) brute = std::max<std::size_t>(brute, __builtin_popcount(m));
    }
    CHECK(max_disjoint_roots(E, simple).size() == brute);

    // an orthogonal family is its own answer
    IntLattice A = direct_sum(direct_sum(a2(), a2()), a2());
    std::vector<IntVec> fam{unit(6, 0), unit(6, 2), unit(6, 4)};
    CHECK(max_disjoint_roots(A, fam).size() == 3);
    // E8 roots: an orthogonal frame has 8 elements
    CHECK(max_disjoint_roots(E, enumerate_roots(E)).size() == 8);
}

TEST_CASE("Riemann-Roch") {
    CHECK(euler_characteristic(-2) == 1);
    CHECK(euler_characteristic(0) == 2);
    CHECK(euler_characteristic(2) == 3);
    CHECK_THROWS_AS(euler_characteristic(3), LatticeError);
}

TEST_CASE("effective decomposition") {
    std::vector<IntVec> gens;
    for (std::size_t i = 0; i < 17; ++i) gens.push_back(unit(17, i));
    IntVec x(17, Int(0));
    x[1] = 1;
    x[2] = 2;
    CHECK(effective_decomposition(x, gens) == std::optional<IntVec>(x));
    CHECK_FALSE(effective_decomposition(unit(17, 0, -1), gens).has_value());

    IntLattice L = e8_minus_d();
    std::vector<IntVec> simple;
    for (std::size_t i = 0; i < 8; ++i) simple.push_back(unit(8, i));
    IntVec a = dominant_root(L);
    IntVec minus_a = a;
    for (auto& t : minus_a) t = -t;
    CHECK(effective_decomposition(minus_a, simple) == std::optional<IntVec>(IntVec{3, 2, 4, 6, 5, 4, 3, 2}));
    CHECK_FALSE(effective_decomposition(a, simple).has_value());

    // non-unit generators: 2e1 does not reach e1
    std::vector<IntVec> two{{Int(2), Int(0)}, {Int(0), Int(1)}};
    CHECK_FALSE(effective_decomposition(IntVec{1, 0}, two).has_value());
    CHECK_THROWS_AS(effective_decomposition(IntVec{1, 0}, {{Int(1), Int(1)}, {Int(2), Int(2)}}), LinalgError);
}
