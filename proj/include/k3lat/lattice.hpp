#pragma once

#include "k3lat/exact_linalg.hpp"

#include <string>
#include <utility>
#include <vector>

namespace k3lat {

class LatticeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Integral lattice Z^r with a non-degenerate symmetric integer Gram matrix.
class IntLattice {
public:
    IntLattice() = default;
    IntLattice(std::string name, IntMatrix gram);

    const std::string& name() const { return name_; }
    const IntMatrix& gram() const { return gram_; }
    const QMatrix& gram_q() const { return gram_q_; }
    std::size_t rank() const { return gram_.rows(); }
    const Inertia& signature() const { return sig_; }
    const Int& det() const { return det_; }
    bool even() const { return even_; }

private:
    std::string name_;
    IntMatrix gram_;
    QMatrix gram_q_;
    Inertia sig_;
    Int det_ = 1;
    bool even_ = true;
};

struct DiscriminantGroup {
    std::vector<Int> invariant_factors;  // all > 1, d1 | d2 | ...
    std::vector<QVec> generators;        // lifts in L^vee, coordinates in [0,1)
    Int order = 1;
    // c_i = (U G x)_i mod d_i for x in L^vee, where U G V = D is the Smith form of G
    IntMatrix coord_map;                 // rows of U for the nontrivial factors
};

bool is_even(const IntLattice& L);
bool is_unimodular(const IntLattice& L);
DiscriminantGroup discriminant_group(const IntLattice& L);

bool in_dual(const IntLattice& L, const QVec& x);
Rat pairing(const IntLattice& L, const QVec& x, const QVec& y);
Rat pairing(const IntLattice& L, const IntVec& x, const IntVec& y);
Rat frac(const Rat& q);  // representative in [0,1)
// (1/2)(x.x) mod 1; throws unless x in L^vee
Rat disc_q(const IntLattice& L, const QVec& x);

// Coordinates of the class of x in G(L) with respect to the group's generators.
std::vector<Int> disc_coords(const IntLattice& L, const DiscriminantGroup& G, const QVec& x);
// Lift sum c_i g_i, reduced to coordinates in [0,1).
QVec disc_element(const DiscriminantGroup& G, const std::vector<Int>& coords);
// All |G| coordinate tuples in lexicographic order.
std::vector<std::vector<Int>> disc_enumerate(const DiscriminantGroup& G);
// Componentwise fractional part; equal keys <=> equal classes in (1/d)Z^r / Z^r.
QVec reduce_mod_lattice(const QVec& x);

IntLattice direct_sum(const IntLattice& a, const IntLattice& b, std::string name = "");

}  // namespace k3lat
