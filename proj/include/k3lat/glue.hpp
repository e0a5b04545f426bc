#pragma once

#include "k3lat/lattice.hpp"

#include <map>
#include <string>
#include <vector>

namespace k3lat {

class GlueError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// phi is given on lifts: sources[i] in L1^vee maps to the class of images[i] in L2^vee,
// extended additively to the subgroup the sources generate.
struct GlueSpec {
    IntLattice L1, L2;
    std::vector<QVec> sources;
    std::vector<QVec> images;
};

struct GlueViolation {
    std::string kind;           // q_condition | not_well_defined | not_injective | not_surjective | not_generating | not_in_dual
    std::vector<Int> coeffs;    // element sum c_i sources[i]
    Rat q1 = 0, q2 = 0;
    std::string detail;
};

struct GlueReport {
    bool ok = false;
    std::size_t elements_checked = 0;
    std::vector<GlueViolation> violations;  // first witness of each kind, in scan order
    DiscriminantGroup G1, G2;
    // class coordinates in G1 -> class coordinates in G2
    std::map<std::vector<Int>, std::vector<Int>> table;
    IntMatrix phi;  // column j = coordinates of phi(g_j), g_j the generators of G1
};

GlueReport validate_glue(const GlueSpec& spec);

struct GluedLattice {
    IntLattice lattice;
    QMatrix basis;  // rows, in the coordinates of L1 + L2
    std::size_t r1 = 0, r2 = 0;
};

GluedLattice glue(const GlueSpec& spec);
// [glued : L1 + L2], read off the inclusion matrix.
Int direct_sum_index(const GluedLattice& g);

IntLattice extend_direct_sum(const IntLattice& L, const IntLattice& M);

// f1 in O(L1), f2 in O(L2) with phi f1 = f2 phi; result acts on the glued basis.
IntMatrix lift_isometry(const GlueSpec& spec, const GluedLattice& glued, const IntMatrix& f1, const IntMatrix& f2);

// The two gluings used by the K3 constructions.
GlueSpec kummer_glue_spec();
GlueSpec mcmullen_glue_spec();

}  // namespace k3lat
