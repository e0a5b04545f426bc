#pragma once

#include "k3lat/lattice.hpp"

#include <optional>
#include <vector>

namespace k3lat {

// All x != 0 with x^T (-G) x <= bound, G negative definite. Lexicographic order.
std::vector<IntVec> short_vectors(const IntLattice& L, const Int& bound);

// All x with (x.x) = -2.
std::vector<IntVec> enumerate_roots(const IntLattice& L);

// The root a, not +-D_j, with (a.D_j) >= 0 for every basis vector D_j. Throws unless unique.
IntVec dominant_root(const IntLattice& L);

// Largest pairwise orthogonal subset; returns one witness.
std::vector<std::size_t> max_disjoint_roots(const IntLattice& L, const std::vector<IntVec>& roots);

// Riemann-Roch on a K3: chi(O(D)) = D^2/2 + 2.
Int euler_characteristic(const Int& d_square);

// Nonnegative integer a with x = sum a_i gens[i], if any. Generators must be independent.
std::optional<IntVec> effective_decomposition(const IntVec& x, const std::vector<IntVec>& gens);

bool picard_signature_check(const IntLattice& pic);

}  // namespace k3lat
