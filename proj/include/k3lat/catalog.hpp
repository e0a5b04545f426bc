#pragma once

#include "k3lat/lattice.hpp"

#include <string>
#include <utility>
#include <vector>

namespace k3lat {

struct NamedBasis {
    std::vector<std::string> labels;
    std::size_t index(const std::string& label) const;  // throws if absent
};

struct LabeledLattice {
    IntLattice lattice;
    NamedBasis basis;
};

// Gram of a simply-laced Dynkin diagram: -2 on the diagonal, +1 on edges.
IntMatrix dynkin_gram(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

IntLattice hyperbolic_U();
IntLattice e8_minus();    // nodes C12..C78 in a chain, C678 attached to C56
IntLattice e8_minus_d();  // nodes D0..D7: chain D1..D7, D0 attached to D3
IntLattice a2();
IntLattice e10();         // T(2,3,7): chain e1..e9 with e10 attached to e3
IntLattice mcmullen_L1();
IntLattice mcmullen_L2();

// Order: <A_ab,B_g>, <A_bg,B_a>, <A_ga,B_b>, C+ block, C- block.
LabeledLattice k3_lattice();
NamedBasis e8_labels(const std::string& prefix);

struct KummerLattice {
    LabeledLattice lat;
    NamedBasis ambient;      // E_t, t in (Z/2)^4, labels E_t1t2t3t4
    QMatrix basis_ambient;   // rows: basis vectors in E_t coordinates
    QMatrix to_coords_map;   // B^{-T}: ambient vector -> lattice coordinates

    QVec coords(const QVec& ambient_vec) const;
    QVec E_ij(int i, int j) const;  // (1/2) sum over span(e_i, e_j), lattice coordinates
    // Isometry induced by t -> F t mod 2 on the nodes, in lattice coordinates.
    IntMatrix node_permutation_action(const IntMatrix& F4) const;
};

KummerLattice kummer_lattice();
std::size_t kummer_node_index(const std::vector<int>& t);  // t = (t1,t2,t3,t4) in {0,1}

struct TorusLattice {
    LabeledLattice lat;  // basis 2V_ij, ij in (12,13,14,23,24,34)
    QVec V_ij(int i, int j) const;
    static std::size_t pair_index(int i, int j);
};
TorusLattice torus_image_lattice();

// Rational vectors of the McMullen glue generators.
QVec mcmullen_u1();
QVec mcmullen_u2();
QVec mcmullen_v1();
QVec mcmullen_v2();
IntMatrix mcmullen_f2();
IntMatrix kummer_torus_matrix(long a);  // the 4x4 matrix on H_1 of the torus

// The rank-17 configuration D_g, D0+..D7+, D0-..D7-.
LabeledLattice picard_rho17();

LabeledLattice catalog_lattice(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace k3lat
