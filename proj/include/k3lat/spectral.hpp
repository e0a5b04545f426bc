#pragma once

#include "k3lat/isometry.hpp"

#include <complex>
#include <string>
#include <vector>

namespace k3lat {

using cplx = std::complex<long double>;
using CVec = std::vector<cplx>;

class SpectralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// All complex roots: companion-matrix eigenvalues polished by Newton, sorted by argument in [0, 2pi).
std::vector<cplx> polynomial_roots(const IntPoly& p, long double tol = 1e-10L);
std::vector<cplx> unit_circle_roots(const IntPoly& p, long double tol = 1e-10L);

// x^T G conj(y)
cplx hermitian_pairing(const QMatrix& g, const CVec& x, const CVec& y);
cplx bilinear_pairing(const QMatrix& g, const CVec& x, const CVec& y);
long double eigen_residual(const IntMatrix& m, const CVec& v, cplx s);

struct RootInspection {
    cplx s;
    long double positivity;  // (sigma(s).sigma(conj s)), real part
};

struct SpectralResult {
    IntPoly poly;
    cplx s;
    long double positivity = 0;
    long double a_alpha = 0, a_beta = 0;
    long double a_alpha_imag = 0, a_beta_imag = 0;  // residual imaginary parts of the quotients
    cplx r1, r2;                                      // r2 = tau
    CVec sigma;
    std::vector<RootInspection> inspected;
    std::string selection;
    // Kummer case only: closed forms of a_alpha, a_beta
    long double a_alpha_closed = 0, a_beta_closed = 0;
    long double eigen_residual = -1;
};

IntMatrix wedge_square(const IntMatrix& m4);  // basis order 12,13,14,23,24,34

IntPoly lehmer_polynomial();
IntPoly kummer_salem_polynomial(long a);  // t^6 - a t^5 - t^4 + (2a-1) t^3 - t^2 - a t + 1

CVec sigma_min_entropy(cplx s);        // coordinates on e1..e10
CVec sigma_kummer(cplx s, long a);     // coordinates on V12..V34
QMatrix torus_v_gram();                // Gram in the V_ij basis (entries +-1/2)

SpectralResult min_entropy_periods(long double tol = 1e-10L);
SpectralResult kummer_auto_periods(long a, long double tol = 1e-10L);

// a_alpha, a_beta from the quotient formulas.
void quotient_periods(cplx r1s, cplx r1c, cplx r2s, cplx r2c, SpectralResult& out);

}  // namespace k3lat
