#pragma once

#include "k3lat/lattice.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace k3lat {

// Integer polynomial, coefficients from the constant term upwards.
struct IntPoly {
    std::vector<Int> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    static IntPoly from_longs(std::initializer_list<long> low_to_high);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Int& lead() const { return c.back(); }
    std::complex<long double> eval(std::complex<long double> z) const;
    IntPoly derivative() const;
    bool operator==(const IntPoly& o) const { return c == o.c; }
    std::string to_string(const std::string& var = "t") const;
};

// t^n p(1/t) == sign * p(t) for sign = +1 or -1; returns 0 otherwise.
int reciprocal_sign(const IntPoly& p);

// det(t I - M) by Berkowitz's division-free recursion.
IntPoly char_poly(const IntMatrix& m);

bool is_isometry(const IntLattice& L, const IntMatrix& m);

// Reflection x -> x + (x.e_i) e_i in the basis of L (column convention).
IntMatrix simple_reflection(const IntLattice& L, std::size_t i);
// s_{order[0]} s_{order[1]} ... ; default order is 0..r-1.
IntMatrix coxeter_element(const IntLattice& L, std::vector<std::size_t> order = {});

// Gram -(2(F + F^{-1}) + 3)^T C on the same Z^r, C = -G the Cartan matrix.
IntLattice mcmullen_twist(const IntLattice& e10_lattice, const IntMatrix& f1);

struct DiscAction {
    std::vector<Int> moduli;  // invariant factors of G(L)
    IntMatrix matrix;         // column j = coordinates of f(g_j)
};
DiscAction discriminant_action(const IntLattice& L, const DiscriminantGroup& G, const IntMatrix& f);

// Smallest n <= bound with f^n = 1.
std::optional<std::size_t> order_of(const IntMatrix& f, std::size_t bound);

IntMatrix inverse_unimodular(const IntMatrix& m);

}  // namespace k3lat
