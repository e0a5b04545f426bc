#include "k3lat/period.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace k3lat {

QI operator+(const QI& a, const QI& b) { return {a.re + b.re, a.im + b.im}; }
QI operator-(const QI& a, const QI& b) { return {a.re - b.re, a.im - b.im}; }
QI operator*(const QI& a, const QI& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
QI operator/(const QI& a, const QI& b) {
    Rat n = b.re * b.re + b.im * b.im;
    if (n == 0) throw SymbolError("division by zero");
    QI p = a * b.conj();
    return {p.re / n, p.im / n};
}

namespace {

std::vector<std::string> split_monomial(const std::string& k) {
    std::vector<std::string> out;
    if (k == "1") return out;
    std::stringstream ss(k);
    std::string f;
    while (std::getline(ss, f, '*')) out.push_back(f);
    return out;
}

std::string join_monomial(std::vector<std::string> f) {
    if (f.empty()) return "1";
    std::sort(f.begin(), f.end());
    std::string s = f[0];
    for (std::size_t i = 1; i < f.size(); ++i) s += "*" + f[i];
    return s;
}

void add_term(SymbolicComplex& s, const std::string& key, const QI& c) {
    if (c.is_zero()) return;
    auto it = s.terms.find(key);
    if (it == s.terms.end()) {
        s.terms.emplace(key, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) s.terms.erase(it);
}

std::string qi_str(const QI& c) {
    if (c.im == 0) return to_string(c.re);
    if (c.re == 0) return to_string(c.im) + "i";
    return "(" + to_string(c.re) + (c.im > 0 ? "+" : "") + to_string(c.im) + "i)";
}

}  // namespace

SymbolicComplex::SymbolicComplex(QI c) {
    if (!c.is_zero()) terms.emplace("1", c);
}

SymbolicComplex SymbolicComplex::symbol(const std::string& name, QI coeff) {
    SymbolicComplex s;
    add_term(s, name, coeff);
    return s;
}

bool SymbolicComplex::is_constant() const { return terms.empty() || (terms.size() == 1 && terms.count("1")); }

QI SymbolicComplex::constant() const {
    auto it = terms.find("1");
    return it == terms.end() ? QI() : it->second;
}

SymbolicComplex SymbolicComplex::conj() const {
    SymbolicComplex s;
    for (const auto& [k, c] : terms) add_term(s, k, c.conj());
    return s;
}

SymbolicComplex SymbolicComplex::real_part() const {
    SymbolicComplex s;
    for (const auto& [k, c] : terms) add_term(s, k, QI(c.re));
    return s;
}

SymbolicComplex SymbolicComplex::imag_part() const {
    SymbolicComplex s;
    for (const auto& [k, c] : terms) add_term(s, k, QI(c.im));
    return s;
}

bool SymbolicComplex::operator==(const SymbolicComplex& o) const { return terms == o.terms; }

std::string SymbolicComplex::to_string() const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms) {
        if (!s.empty()) s += " + ";
        s += qi_str(c);
        if (k != "1") s += "*" + k;
    }
    return s;
}

SymbolicComplex operator+(const SymbolicComplex& a, const SymbolicComplex& b) {
    SymbolicComplex s = a;
    for (const auto& [k, c] : b.terms) add_term(s, k, c);
    return s;
}

SymbolicComplex operator-(const SymbolicComplex& a) {
    SymbolicComplex s;
    for (const auto& [k, c] : a.terms) add_term(s, k, QI(0) - c);
    return s;
}

SymbolicComplex operator-(const SymbolicComplex& a, const SymbolicComplex& b) { return a + (-b); }

SymbolicComplex operator*(const QI& c, const SymbolicComplex& a) {
    SymbolicComplex s;
    for (const auto& [k, v] : a.terms) add_term(s, k, c * v);
    return s;
}

void SymbolTable::declare(const std::string& name, long double value) {
    if (name.empty() || name == "1" || name.find('*') != std::string::npos)
        throw SymbolError("bad symbol name '" + name + "'");
    values[name] = value;
}

void SymbolTable::set_product(const std::string& a, const std::string& b, const SymbolicComplex& r) {
    if (!has(a) || !has(b)) throw SymbolError("product of undeclared symbols " + a + "*" + b);
    check(r);
    products[{std::min(a, b), std::max(a, b)}] = r;
}

void SymbolTable::check(const SymbolicComplex& s) const {
    for (const auto& [k, c] : s.terms)
        for (const auto& f : split_monomial(k))
            if (!has(f)) throw SymbolError("undeclared symbol '" + f + "'");
}

SymbolicComplex multiply(const SymbolicComplex& a, const SymbolicComplex& b, const SymbolTable& t) {
    SymbolicComplex out;
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) {
            QI c = ca * cb;
            auto fa = split_monomial(ka), fb = split_monomial(kb);
            if (fa.empty() || fb.empty()) {
                fa.insert(fa.end(), fb.begin(), fb.end());
                add_term(out, join_monomial(fa), c);
                continue;
            }
            if (fa.size() == 1 && fb.size() == 1) {
                auto it = t.products.find({std::min(fa[0], fb[0]), std::max(fa[0], fb[0])});
                if (it != t.products.end()) {
                    out = out + c * it->second;
                    continue;
                }
            }
            if (t.strict) throw SymbolError("product " + ka + "*" + kb + " is outside the declared closure");
            fa.insert(fa.end(), fb.begin(), fb.end());
            add_term(out, join_monomial(fa), c);
        }
    return out;
}

std::complex<long double> evaluate(const SymbolicComplex& s, const SymbolTable& t) {
    std::complex<long double> v = 0;
    for (const auto& [k, c] : s.terms) {
        long double m = 1;
        for (const auto& f : split_monomial(k)) {
            auto it = t.values.find(f);
            if (it == t.values.end()) throw SymbolError("undeclared symbol '" + f + "'");
            m *= it->second;
        }
        v += std::complex<long double>(c.re.get_d() * m, c.im.get_d() * m);
    }
    return v;
}

SymbolTable example_symbols(long double xr, long double xi) {
    SymbolTable t;
    const long double mu = -std::cbrt(2.0L);
    t.declare("mu", mu);
    t.declare("mu2", mu * mu);
    t.declare("xr", xr);
    t.declare("xi", xi);
    t.set_product("mu", "mu", SymbolicComplex::symbol("mu2"));
    t.set_product("mu", "mu2", SymbolicComplex(-2));  // mu^3 = -2
    t.set_product("mu2", "mu2", SymbolicComplex::symbol("mu", QI(-2)));
    return t;
}

namespace {

const NamedBasis& k3_basis() {
    static const NamedBasis b = k3_lattice().basis;
    return b;
}

const IntMatrix& k3_gram() {
    static const IntMatrix g = k3_lattice().lattice.gram();
    return g;
}

}  // namespace

SymbolicComplex& PeriodVector::at(const std::string& label) { return coeffs.at(k3_basis().index(label)); }
const SymbolicComplex& PeriodVector::at(const std::string& label) const { return coeffs.at(k3_basis().index(label)); }

PeriodVector basis_vector(const std::string& label) {
    PeriodVector v{std::vector<SymbolicComplex>(22)};
    v.at(label) = SymbolicComplex(1);
    return v;
}

PeriodVector v_pq(const SymbolicComplex& p, const SymbolicComplex& q) {
    PeriodVector v{std::vector<SymbolicComplex>(22)};
    v.at("A_ab") = SymbolicComplex(1);
    v.at("A_bg") = p;
    v.at("A_ga") = -q;
    return v;
}

SymbolicComplex period_pairing(const PeriodVector& s, const PeriodVector& u, bool conjugate_second,
                               const SymbolTable& t) {
    const IntMatrix& g = k3_gram();
    SymbolicComplex out;
    for (std::size_t i = 0; i < 22; ++i) {
        if (s.coeffs[i].is_zero()) continue;
        SymbolicComplex row;
        for (std::size_t j = 0; j < 22; ++j) {
            if (g(i, j) == 0 || u.coeffs[j].is_zero()) continue;
            const SymbolicComplex& uj = u.coeffs[j];
            row = row + QI(Rat(g(i, j))) * (conjugate_second ? uj.conj() : uj);
        }
        out = out + multiply(s.coeffs[i], row, t);
    }
    return out;
}

SymbolicComplex solve_y(const PeriodVector& partial, const SymbolTable& t) {
    // (s.s) = 2 y (A_ga.s') + (s'.s') with s' = s without its A_ga part, since (A_ga.A_ga) = 0
    PeriodVector rest = partial;
    rest.at("A_ga") = SymbolicComplex();
    SymbolicComplex lin = period_pairing(basis_vector("A_ga"), rest, false, t);
    if (!lin.is_constant() || lin.constant().is_zero())
        throw SymbolError("(s.s) is not affine in y with a nonzero constant slope");
    SymbolicComplex c = period_pairing(rest, rest, false, t);
    QI inv = QI(1) / (QI(-2) * lin.constant());
    return inv * c;
}

PeriodVector period_from_params(const GluingParams& p, const SymbolTable& t) {
    for (const auto* s : {&p.tau, &p.a_alpha, &p.a_beta, &p.gamma9, &p.x}) t.check(*s);
    if (!p.a_alpha.imag_part().is_zero() || !p.a_beta.imag_part().is_zero())
        throw SymbolError("a_alpha and a_beta must be real");
    if (evaluate(p.tau, t).imag() <= 0) throw SymbolError("tau must lie in the upper half-plane");
    if (p.c_plus.size() != 8 || p.c_minus.size() != 8) throw SymbolError("need 8 c-values per side");
    PeriodVector v{std::vector<SymbolicComplex>(22)};
    SymbolicComplex mu = p.a_beta - multiply(p.tau, p.a_alpha, t);
    v.at("B_a") = p.tau;
    v.at("B_b") = SymbolicComplex(1);
    v.at("B_g") = mu;
    v.at("A_ab") = QI(2) * mu + p.gamma9;
    v.at("A_bg") = p.x;
    static const char* names[] = {"12", "23", "34", "45", "56", "67", "78", "678"};
    for (int j = 0; j < 8; ++j) {
        v.at(std::string("C+") + names[j]) = p.c_plus[j];
        v.at(std::string("C-") + names[j]) = p.c_minus[j];
    }
    v.at("A_ga") = solve_y(v, t);
    return v;
}

GluingParams example_params() {
    GluingParams p;
    p.tau = SymbolicComplex(QI(0, 1));
    p.a_alpha = SymbolicComplex();
    p.a_beta = SymbolicComplex::symbol("mu");
    p.c_plus.assign(8, SymbolicComplex());
    p.c_minus.assign(8, SymbolicComplex());
    p.gamma9 = SymbolicComplex();
    p.x = SymbolicComplex::symbol("xr") + SymbolicComplex::symbol("xi", QI(0, 1));
    return p;
}

PeriodVector example_period(const SymbolTable& t) { return period_from_params(example_params(), t); }

Realizability realizability_check(const PeriodVector& xi0, const SymbolicComplex& p, const SymbolicComplex& q,
                                  long double Lambda, const SymbolTable& t) {
    Realizability r;
    r.Lambda = Lambda;
    r.orthogonality = period_pairing(xi0, v_pq(p, q), false, t);
    if (!r.orthogonality.is_zero()) {
        r.verdict = "precondition_violated";
        r.detail = "(xi.v) = " + r.orthogonality.to_string();
        return r;
    }
    const SymbolicComplex& bb = xi0.at("B_b");
    if (bb.is_zero()) {
        r.verdict = "fail(a)";
        r.detail = "b_beta = 0";
        return r;
    }
    if (!bb.is_constant()) throw SymbolError("b_beta must be a constant to normalize");
    QI inv = QI(1) / bb.constant();
    PeriodVector xi{std::vector<SymbolicComplex>(22)};
    for (std::size_t i = 0; i < 22; ++i) xi.coeffs[i] = inv * xi0.coeffs[i];
    if (evaluate(xi.at("B_a"), t).imag() <= 0) {
        r.verdict = "fail(b)";
        r.detail = "b_alpha is not in the upper half-plane";
        return r;
    }
    // the left side of condition (c) is (xi.conj xi); it is real
    r.self_pairing = period_pairing(xi, xi, true, t);
    r.self_pairing_value = evaluate(r.self_pairing, t).real();
    if (r.self_pairing_value > Lambda) {
        r.verdict = "pass";
    } else {
        r.verdict = "fail(c)";
        r.detail = "(xi.conj xi) <= Lambda";
    }
    return r;
}

IntMatrix monodromy_type_II() {
    const NamedBasis& b = k3_basis();
    IntMatrix m = IntMatrix::identity(22);
    m(b.index("A_ga"), b.index("B_a")) = 1;
    m(b.index("A_bg"), b.index("B_b")) = -1;
    return m;
}

PicardResult picard_lattice(const PeriodVector& sigma, const SymbolTable& t) {
    for (const auto& c : sigma.coeffs) t.check(c);
    const IntMatrix& g = k3_gram();
    // one real functional per (monomial, re|im)
    std::map<std::pair<std::string, int>, QVec> rows;
    for (std::size_t j = 0; j < 22; ++j)
        for (const auto& [k, c] : sigma.coeffs[j].terms)
            for (int part = 0; part < 2; ++part) {
                const Rat& v = part == 0 ? c.re : c.im;
                if (v == 0) continue;
                auto& row = rows.try_emplace({k, part}, QVec(22, Rat(0))).first->second;
                for (std::size_t i = 0; i < 22; ++i) row[i] += Rat(g(i, j)) * v;
            }
    PicardResult out;
    if (rows.empty()) {
        for (std::size_t i = 0; i < 22; ++i) {
            IntVec e(22, Int(0));
            e[i] = 1;
            out.basis.push_back(e);
        }
    } else {
        QMatrix f(rows.size(), 22);
        std::size_t r = 0;
        for (const auto& [key, row] : rows) {
            for (std::size_t i = 0; i < 22; ++i) f(r, i) = row[i];
            ++r;
        }
        out.basis = integer_kernel(f);
    }
    out.rank = out.basis.size();
    IntMatrix gram(out.rank, out.rank);
    for (std::size_t a = 0; a < out.rank; ++a)
        for (std::size_t b = 0; b < out.rank; ++b) {
            Int s = 0;
            for (std::size_t i = 0; i < 22; ++i)
                for (std::size_t j = 0; j < 22; ++j)
                    if (g(i, j) != 0) s += out.basis[a][i] * g(i, j) * out.basis[b][j];
            gram(a, b) = s;
        }
    out.gram = gram;
    out.degenerate = out.rank > 0 && determinant(gram) == 0;
    if (out.rank > 0 && !out.degenerate) out.lattice = IntLattice("picard", gram);
    return out;
}

TubeIntegral tube_integral_check(long double a, long double R_plus, long double R_minus, long double a_alpha,
                                 long double quad_tol, std::optional<std::pair<long double, long double>> cutoff) {
    if (!(R_plus > 1) || !(R_minus > 1)) throw std::invalid_argument("R+ and R- must exceed 1");
    const long double lo = 1 / R_minus, hi = R_plus;
    long double r0 = lo + (hi - lo) / 4, r1 = lo + 3 * (hi - lo) / 4;
    if (cutoff) std::tie(r0, r1) = *cutoff;
    if (!(lo < r0 && r0 < r1 && r1 < hi)) throw std::invalid_argument("cutoff interval must sit inside (1/R-, R+)");
    constexpr long double two_pi = 2 * std::numbers::pi_v<long double>;
    using cplx = std::complex<long double>;

    auto rho = [&](long double r) {
        if (r <= r0) return 1.0L;
        if (r >= r1) return 0.0L;
        long double u = (r - r0) / (r1 - r0);
        return 1 - u * u * (3 - 2 * u);
    };
    auto drho = [&](long double r) {
        if (r <= r0 || r >= r1) return 0.0L;
        long double u = (r - r0) / (r1 - r0);
        return -6 * u * (1 - u) / (r1 - r0);
    };
    // dw/dr / w for w = r exp(2 pi i (a rho(r) + a_alpha theta))
    auto integrand = [&](long double r, long double theta) {
        cplx ph = std::exp(cplx(0, two_pi * (a * rho(r) + a_alpha * theta)));
        cplx w = r * ph;
        cplx dw = ph + cplx(0, two_pi * a * drho(r)) * r * ph;
        return dw / w;
    };
    using GK = boost::math::quadrature::gauss_kronrod<long double, 61>;
    long double err_total = 0;
    auto radial = [&](long double theta, int part) {
        long double s = 0;
        const long double knots[] = {lo, r0, r1, hi};
        // each piece is smooth, so a shallow adaptive rule is plenty
        for (int k = 0; k < 3; ++k) {
            long double e = 0;
            s += GK::integrate(
                [&](long double r) {
                    cplx v = integrand(r, theta);
                    return part == 0 ? v.real() : v.imag();
                },
                knots[k], knots[k + 1], 6, quad_tol, &e);
            err_total += e;
        }
        return s;
    };
    TubeIntegral out;
    long double e1 = 0, e2 = 0;
    // the theta dependence cancels in dw/w, a single Kronrod panel is exact up to rounding
    long double re = GK::integrate([&](long double th) { return radial(th, 0); }, 0.0L, 1.0L, 0, quad_tol, &e1);
    long double im = GK::integrate([&](long double th) { return radial(th, 1); }, 0.0L, 1.0L, 0, quad_tol, &e2);
    out.value = cplx(re, im);
    out.closed_form = cplx(std::log(R_plus * R_minus), -two_pi * a);
    out.error_estimate = e1 + e2 + err_total;
    return out;
}

long double volume_log_formula(long double r_plus, long double r_minus, long double eta_norm) {
    if (!(r_plus > 0) || !(r_minus > 0)) throw std::invalid_argument("radii must be positive");
    if (!(eta_norm > 0)) throw std::invalid_argument("eta norm must be positive");
    return 4 * std::numbers::pi_v<long double> * eta_norm * std::log(r_plus * r_minus);
}

Cohomology3 blowup_tangent_cohomology(long N) {
    if (N < 4) throw std::invalid_argument("the formula needs N >= 4");
    return {0, 2 * N - 8, 0};
}

}  // namespace k3lat
