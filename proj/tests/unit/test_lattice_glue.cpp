#include "doctest.h"
#include "k3lat/catalog.hpp"
#include "k3lat/glue.hpp"
#include "k3lat/isometry.hpp"
#include "k3lat/spectral.hpp"

#include <algorithm>

using namespace k3lat;

namespace {

void check_valid_glue(const GlueSpec& spec, const Inertia& sig) {
    GlueReport rep = validate_glue(spec);
    REQUIRE(rep.ok);
    GluedLattice g = glue(spec);
    const IntLattice& L = g.lattice;
    CHECK(L.even());
    CHECK(abs(L.det()) == 1);
    CHECK(L.signature() == sig);
    CHECK(L.rank() == spec.L1.rank() + spec.L2.rank());
    Inertia s1 = spec.L1.signature(), s2 = spec.L2.signature();
    CHECK(sig == Inertia{s1.n_plus + s2.n_plus, s1.n_minus + s2.n_minus, 0});
    CHECK(direct_sum_index(g) == discriminant_group(spec.L1).order);
}

}  // namespace

TEST_CASE("Kummer glue") {
    GlueSpec spec = kummer_glue_spec();
    GlueReport rep = validate_glue(spec);
    CHECK(rep.ok);
    CHECK(rep.elements_checked == 64);
    CHECK(rep.table.size() == 64);
    check_valid_glue(spec, Inertia{3, 19, 0});
}

TEST_CASE("McMullen glue") {
    GlueSpec spec = mcmullen_glue_spec();
    GlueReport rep = validate_glue(spec);
    CHECK(rep.ok);
    CHECK(rep.elements_checked == 9);
    check_valid_glue(spec, Inertia{3, 11, 0});
    GluedLattice L0 = glue(spec);
    IntLattice L = extend_direct_sum(L0.lattice, e8_minus());
    CHECK(L.signature() == Inertia{3, 19, 0});
    CHECK(L.even());
    CHECK(abs(L.det()) == 1);
}

TEST_CASE("glue with trivial groups is the direct sum") {
    GlueSpec spec{e8_minus(), hyperbolic_U(), {}, {}};
    GluedLattice g = glue(spec);
    CHECK(g.lattice.gram() == block_diag(e8_minus().gram(), hyperbolic_U().gram()));
}

TEST_CASE("extend_direct_sum") {
    IntLattice U = hyperbolic_U();
    IntLattice e = e8_minus();
    IntLattice s = extend_direct_sum(extend_direct_sum(extend_direct_sum(extend_direct_sum(U, U), U), e), e);
    CHECK(s.gram() == k3_lattice().lattice.gram());
    IntLattice zero("zero", IntMatrix(0, 0));
    CHECK(extend_direct_sum(U, zero).gram() == U.gram());
}

TEST_CASE("Kummer glue with a non-isotropic image fails with a witness") {
    GlueSpec spec = kummer_glue_spec();
    TorusLattice T = torus_image_lattice();
    // q(V12 + V34) = 1/2 mod 1 while q(E12) = 0
    QVec bad = T.V_ij(1, 2);
    QVec v34 = T.V_ij(3, 4);
    for (std::size_t k = 0; k < bad.size(); ++k) bad[k] += v34[k];
    spec.images[0] = bad;
    GlueReport rep = validate_glue(spec);
    CHECK_FALSE(rep.ok);
    auto it = std::find_if(rep.violations.begin(), rep.violations.end(),
                           [](const GlueViolation& w) { return w.kind == "q_condition"; });
    REQUIRE(it != rep.violations.end());
    const GlueViolation& v = *it;
    CHECK(frac(v.q1 + v.q2) != 0);
    // recompute the q values of the witness directly
    KummerLattice K = kummer_lattice();
    QVec x(16, Rat(0)), y(6, Rat(0));
    for (std::size_t i = 0; i < v.coeffs.size(); ++i)
        for (std::size_t k = 0; k < 16; ++k) x[k] += Rat(v.coeffs[i]) * spec.sources[i][k];
    for (std::size_t i = 0; i < v.coeffs.size(); ++i)
        for (std::size_t k = 0; k < 6; ++k) y[k] += Rat(v.coeffs[i]) * spec.images[i][k];
    CHECK(frac(disc_q(K.lat.lattice, x) + disc_q(T.lat.lattice, y)) != 0);
    CHECK_THROWS_AS(glue(spec), GlueError);
}

TEST_CASE("lift of identities is the identity") {
    GlueSpec spec = mcmullen_glue_spec();
    GluedLattice g = glue(spec);
    CHECK(lift_isometry(spec, g, IntMatrix::identity(10), IntMatrix::identity(4)) == IntMatrix::identity(14));
}

TEST_CASE("Kummer automorphism lifts to the glued lattice") {
    GlueSpec spec = kummer_glue_spec();
    GluedLattice g = glue(spec);
    KummerLattice K = kummer_lattice();
    for (long a : {0L, 1L, 2L}) {
        IntMatrix F = kummer_torus_matrix(a);
        IntMatrix f1 = K.node_permutation_action(F);
        IntMatrix f2 = wedge_square(F);
        CHECK(is_isometry(K.lat.lattice, f1));
        CHECK(is_isometry(spec.L2, f2));
        IntMatrix f = lift_isometry(spec, g, f1, f2);
        CHECK(is_isometry(g.lattice, f));
        CHECK(abs(determinant(f)) == 1);
        // same characteristic polynomial factors: (t-1)^? aside, S(t) divides char poly of f
        IntPoly cp = char_poly(f);
        CHECK(reciprocal_sign(cp) != 0);
    }
}

TEST_CASE("Kummer node action matches the wedge action through phi") {
    GlueSpec spec = kummer_glue_spec();
    KummerLattice K = kummer_lattice();
    TorusLattice T = torus_image_lattice();
    GlueReport rep = validate_glue(spec);
    IntMatrix F = kummer_torus_matrix(1);
    QMatrix f1 = to_q(K.node_permutation_action(F)), f2 = to_q(wedge_square(F));
    for (std::size_t i = 0; i < 6; ++i) {
        auto lhs = rep.table.at(disc_coords(K.lat.lattice, rep.G1, f1 * spec.sources[i]));
        auto rhs = disc_coords(T.lat.lattice, rep.G2, f2 * spec.images[i]);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("incompatible isometries are rejected") {
    GlueSpec spec = mcmullen_glue_spec();
    GluedLattice g = glue(spec);
    // f2 alone, with f1 = id, does not commute with phi
    CHECK_THROWS_AS(lift_isometry(spec, g, IntMatrix::identity(10), mcmullen_f2()), GlueError);
    CHECK_THROWS_AS(lift_isometry(spec, g, Int(2) * IntMatrix::identity(10), IntMatrix::identity(4)), GlueError);
}

TEST_CASE("lifted isometry order divides the lcm of the orders") {
    GlueSpec spec = kummer_glue_spec();
    GluedLattice g = glue(spec);
    // -1 on both sides commutes with any phi
    IntMatrix f = lift_isometry(spec, g, Int(-1) * IntMatrix::identity(16), Int(-1) * IntMatrix::identity(6));
    CHECK(order_of(f, 120) == std::optional<std::size_t>(2));
}
