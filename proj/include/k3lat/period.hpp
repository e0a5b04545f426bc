#pragma once

#include "k3lat/catalog.hpp"

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace k3lat {

class SymbolError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// a + b i with a, b rational
struct QI {
    Rat re = 0, im = 0;
    QI() = default;
    QI(Rat r, Rat i = 0) : re(std::move(r)), im(std::move(i)) {}
    QI(long r) : re(r) {}
    bool is_zero() const { return re == 0 && im == 0; }
    QI conj() const { return {re, -im}; }
    bool operator==(const QI& o) const { return re == o.re && im == o.im; }
};
QI operator+(const QI& a, const QI& b);
QI operator-(const QI& a, const QI& b);
QI operator*(const QI& a, const QI& b);
QI operator/(const QI& a, const QI& b);

// Finite Q(i)-linear combination of real monomials. Key "1" is the constant,
// a product of symbols is keyed by its sorted factors joined with '*'.
struct SymbolicComplex {
    std::map<std::string, QI> terms;

    SymbolicComplex() = default;
    SymbolicComplex(QI c);
    SymbolicComplex(long c) : SymbolicComplex(QI(c)) {}
    static SymbolicComplex symbol(const std::string& name, QI coeff = QI(1));

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const;
    QI constant() const;  // coefficient of "1"
    SymbolicComplex conj() const;
    SymbolicComplex real_part() const;
    SymbolicComplex imag_part() const;
    bool operator==(const SymbolicComplex& o) const;
    std::string to_string() const;
};
SymbolicComplex operator+(const SymbolicComplex& a, const SymbolicComplex& b);
SymbolicComplex operator-(const SymbolicComplex& a, const SymbolicComplex& b);
SymbolicComplex operator-(const SymbolicComplex& a);
SymbolicComplex operator*(const QI& c, const SymbolicComplex& a);

// Real symbols, their numeric values, and the reduction table for products.
struct SymbolTable {
    std::map<std::string, long double> values;
    std::map<std::pair<std::string, std::string>, SymbolicComplex> products;
    bool strict = true;  // undeclared products are errors instead of new monomials

    void declare(const std::string& name, long double value);
    void set_product(const std::string& a, const std::string& b, const SymbolicComplex& r);
    bool has(const std::string& name) const { return values.count(name) > 0; }
    void check(const SymbolicComplex& s) const;  // only declared symbols appear
};

SymbolicComplex multiply(const SymbolicComplex& a, const SymbolicComplex& b, const SymbolTable& t);
std::complex<long double> evaluate(const SymbolicComplex& s, const SymbolTable& t);

// Symbols mu, mu2 (mu = -2^{1/3}, mu^3 = -2) and xr, xi for x = xr + i xi.
SymbolTable example_symbols(long double xr, long double xi);

struct GluingParams {
    SymbolicComplex tau, a_alpha, a_beta;
    std::vector<SymbolicComplex> c_plus, c_minus;  // 8 each, order C12..C78, C678
    SymbolicComplex gamma9, x;
    long double Lambda = 0;
};

// Coefficients in the k3_lattice() basis order.
struct PeriodVector {
    std::vector<SymbolicComplex> coeffs;  // 22
    SymbolicComplex& at(const std::string& label);
    const SymbolicComplex& at(const std::string& label) const;
};

PeriodVector period_from_params(const GluingParams& p, const SymbolTable& t);
// Unique y = coefficient of A_ga making (s.s) = 0.
SymbolicComplex solve_y(const PeriodVector& partial, const SymbolTable& t);
SymbolicComplex period_pairing(const PeriodVector& s, const PeriodVector& u, bool conjugate_second,
                               const SymbolTable& t);
PeriodVector basis_vector(const std::string& label);
// A_ab + p A_bg - q A_ga
PeriodVector v_pq(const SymbolicComplex& p, const SymbolicComplex& q);

// The period of the rho = 17 example.
PeriodVector example_period(const SymbolTable& t);
GluingParams example_params();

struct Realizability {
    std::string verdict;  // pass | fail(a) | fail(b) | fail(c) | precondition_violated
    SymbolicComplex orthogonality;
    SymbolicComplex self_pairing;  // (xi.conj xi) after normalization
    long double self_pairing_value = 0;
    long double Lambda = 0;
    std::string detail;
};
Realizability realizability_check(const PeriodVector& xi, const SymbolicComplex& p, const SymbolicComplex& q,
                                  long double Lambda, const SymbolTable& t);

// B_a -> B_a + A_ga, B_b -> B_b - A_bg, identity elsewhere.
IntMatrix monodromy_type_II();

struct PicardResult {
    std::vector<IntVec> basis;  // kernel basis in k3 coordinates
    IntMatrix gram;
    IntLattice lattice;         // unset when the form is degenerate
    std::size_t rank = 0;
    bool degenerate = false;
};
PicardResult picard_lattice(const PeriodVector& sigma, const SymbolTable& t);

struct TubeIntegral {
    std::complex<long double> value, closed_form;
    long double error_estimate = 0;
};
// Cutoff rho: 1 up to r0, 0 from r1, smoothstep between. Defaults are the quarter points of [1/R-, R+].
TubeIntegral tube_integral_check(long double a, long double R_plus, long double R_minus, long double a_alpha = 0,
                                 long double quad_tol = 1e-10L, std::optional<std::pair<long double, long double>> cutoff = {});

long double volume_log_formula(long double r_plus, long double r_minus, long double eta_norm);

struct Cohomology3 {
    long h0, h1, h2;
    bool operator==(const Cohomology3& o) const { return h0 == o.h0 && h1 == o.h1 && h2 == o.h2; }
};
Cohomology3 blowup_tangent_cohomology(long N);

}  // namespace k3lat
