#include "k3lat/spectral.hpp"

#include "k3lat/catalog.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace k3lat {

namespace {

long double arg_2pi(cplx z) {
    long double a = std::arg(z);
    if (a < 0) a += 2 * std::numbers::pi_v<long double>;
    return a;
}

cplx polish(const IntPoly& p, const IntPoly& dp, cplx z, long double tol) {
    for (int it = 0; it < 100; ++it) {
        cplx f = p.eval(z), d = dp.eval(z);
        if (std::abs(f) < tol * 1e-6L || std::abs(d) == 0) break;
        cplx step = f / d;
        z -= step;
        if (std::abs(step) < 1e-30L) break;
    }
    return z;
}

}  // namespace

std::vector<cplx> polynomial_roots(const IntPoly& p, long double tol) {
    const int n = p.degree();
    if (n < 0 || (n == 0 && p.c[0] == 0)) throw SpectralError("zero polynomial has no finite root set");
    if (n == 0) return {};
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    const double lead = p.lead().get_d();
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -p.c[i].get_d() / lead;
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    if (es.info() != Eigen::Success) throw SpectralError("companion eigenvalue iteration did not converge");
    IntPoly dp = p.derivative();
    std::vector<cplx> roots;
    for (int i = 0; i < n; ++i) {
        auto ev = es.eigenvalues()[i];
        cplx z = polish(p, dp, cplx(ev.real(), ev.imag()), tol);
        long double scale = 0;
        for (std::size_t k = 0; k < p.c.size(); ++k)
            scale += std::fabs(static_cast<long double>(p.c[k].get_d())) * std::pow(std::abs(z), static_cast<long double>(k));
        if (std::abs(p.eval(z)) > tol * std::max(1.0L, scale))
            throw SpectralError("Newton refinement did not reach the residual tolerance");
        roots.push_back(z);
    }
    std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) { return arg_2pi(a) < arg_2pi(b); });
    return roots;
}

std::vector<cplx> unit_circle_roots(const IntPoly& p, long double tol) {
    std::vector<cplx> out;
    for (cplx z : polynomial_roots(p, tol))
        if (std::fabs(std::abs(z) - 1.0L) < tol) out.push_back(z);
    return out;
}

cplx hermitian_pairing(const QMatrix& g, const CVec& x, const CVec& y) {
    cplx s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (g(i, j) == 0) continue;
            s += x[i] * static_cast<long double>(g(i, j).get_d()) * std::conj(y[j]);
        }
    return s;
}

cplx bilinear_pairing(const QMatrix& g, const CVec& x, const CVec& y) {
    cplx s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (g(i, j) == 0) continue;
            s += x[i] * static_cast<long double>(g(i, j).get_d()) * y[j];
        }
    return s;
}

long double eigen_residual(const IntMatrix& m, const CVec& v, cplx s) {
    long double num = 0, den = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        cplx r = -s * v[i];
        for (std::size_t j = 0; j < m.cols(); ++j) r += static_cast<long double>(m(i, j).get_d()) * v[j];
        num += std::norm(r);
        den += std::norm(v[i]);
    }
    return std::sqrt(num / den);
}

IntMatrix wedge_square(const IntMatrix& f) {
    if (f.rows() != 4 || f.cols() != 4) throw LinalgError("wedge_square needs a 4x4 matrix");
    const int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    IntMatrix w(6, 6);
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) {
            int k = pairs[r][0], l = pairs[r][1], i = pairs[c][0], j = pairs[c][1];
            w(r, c) = f(k, i) * f(l, j) - f(l, i) * f(k, j);
        }
    return w;
}

IntPoly lehmer_polynomial() { return IntPoly::from_longs({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}); }

IntPoly kummer_salem_polynomial(long a) {
    return IntPoly::from_longs({1, -a, -1, 2 * a - 1, -1, -a, 1});
}

CVec sigma_min_entropy(cplx s) {
    std::vector<cplx> pw(11, 1);
    for (int k = 1; k <= 10; ++k) pw[k] = pw[k - 1] * s;
    CVec v(10);
    v[0] = 1.0L + s + pw[9];
    v[1] = 1.0L + pw[8];
    v[2] = pw[2] + pw[3] + pw[4] + pw[5] + pw[6] + pw[7] - pw[9];
    for (int k = 4; k <= 10; ++k) {
        cplx t = 0;
        for (int j = 0; j <= 10 - k; ++j) t += pw[j];
        v[k - 1] = t;
    }
    return v;
}

CVec sigma_kummer(cplx s, long a) {
    const cplx d = s * s - 1.0L;
    const long double al = static_cast<long double>(a);
    return {-(s / d + 1.0L / (s * s)), -(s * s / d + 1.0L / s), 1.0L / s, al - s * s * s / d, s / d, cplx(1)};
}

QMatrix torus_v_gram() {
    QMatrix g = to_q(torus_image_lattice().lat.lattice.gram());
    return qq(1, 4) * g;
}

void quotient_periods(cplx r1s, cplx r1c, cplx r2s, cplx r2c, SpectralResult& out) {
    cplx den = r2c - r2s;
    cplx aa = (r1s - r1c) / den;
    cplx ab = (r1s * r2c - r1c * r2s) / den;
    out.a_alpha = aa.real();
    out.a_beta = ab.real();
    out.a_alpha_imag = aa.imag();
    out.a_beta_imag = ab.imag();
    out.r1 = r1s;
    out.r2 = r2s;
}

namespace {

template <class SigmaFn>
std::size_t select_root(SpectralResult& res, const std::vector<cplx>& roots, const QMatrix& gram, SigmaFn sigma,
                        const cplx* printed) {
    std::size_t best = roots.size();
    for (std::size_t i = 0; i < roots.size(); ++i) {
        // the coefficient formulas are real, so sigma(conj s) = conj sigma(s)
        CVec v = sigma(roots[i]);
        long double pos = hermitian_pairing(gram, v, v).real();
        res.inspected.push_back({roots[i], pos});
    }
    // roots are sorted by argument, so the first positive candidate has the smallest argument
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (res.inspected[i].positivity <= 0) continue;
        if (printed) {
            if (best == roots.size() || std::abs(roots[i] - *printed) < std::abs(roots[best] - *printed)) best = i;
        } else if (best == roots.size()) {
            best = i;
        }
    }
    if (best == roots.size()) {
        std::string msg = "no unit-circle root with positive pairing; inspected:";
        for (const auto& r : res.inspected)
            msg += " (" + std::to_string(static_cast<double>(r.s.real())) + "," +
                   std::to_string(static_cast<double>(r.s.imag())) + ")";
        throw SpectralError(msg);
    }
    std::size_t positives = 0;
    for (const auto& r : res.inspected)
        if (r.positivity > 0) ++positives;
    res.selection = printed ? "closest positive root to the printed approximation"
                            : "positive root with the smallest argument in [0, 2pi)";
    res.selection += " (" + std::to_string(positives) + " positive candidates)";
    return best;
}

}  // namespace

SpectralResult min_entropy_periods(long double tol) {
    SpectralResult res;
    res.poly = lehmer_polynomial();
    auto roots = unit_circle_roots(res.poly, tol);
    QMatrix g = to_q(mcmullen_L1().gram());
    const cplx printed(-0.9433L, 0.3319L);
    std::size_t k = select_root(res, roots, g, sigma_min_entropy, &printed);
    res.s = roots[k];
    res.positivity = res.inspected[k].positivity;
    res.sigma = sigma_min_entropy(res.s);
    auto r1 = [](cplx s) {
        std::vector<cplx> p(10, 1);
        for (int i = 1; i < 10; ++i) p[i] = p[i - 1] * s;
        return -2.0L - 3.0L * s - p[2] - p[3] + p[6] + 3.0L * p[7] + p[8] - p[9];
    };
    auto r2 = [](cplx s) {
        cplx s3 = s * s * s;
        return s3 + s3 * s + s3 * s * s - s3 * s3 * s * s;
    };
    quotient_periods(r1(res.s), r1(std::conj(res.s)), r2(res.s), r2(std::conj(res.s)), res);
    return res;
}

SpectralResult kummer_auto_periods(long a, long double tol) {
    if (a < 0) throw SpectralError("Kummer automorphism needs a >= 0");
    SpectralResult res;
    res.poly = kummer_salem_polynomial(a);
    auto roots = unit_circle_roots(res.poly, tol);
    QMatrix g = torus_v_gram();
    auto sig = [a](cplx s) { return sigma_kummer(s, a); };
    std::size_t k = select_root(res, roots, g, sig, nullptr);
    res.s = roots[k];
    res.positivity = res.inspected[k].positivity;
    res.sigma = sigma_kummer(res.s, a);
    const long double al = static_cast<long double>(a);
    auto r1 = [al](cplx s) { return al - s * s * s / (s * s - 1.0L); };
    auto r2 = [](cplx s) { return -s / (s * s - 1.0L); };
    quotient_periods(r1(res.s), r1(std::conj(res.s)), r2(res.s), r2(std::conj(res.s)), res);
    const long double n2 = std::norm(res.s);
    res.a_alpha_closed = -1.0L + std::abs(res.s * res.s - 1.0L) / (n2 + 1.0L);
    res.a_beta_closed = al - 2.0L * n2 * res.s.real() / (n2 + 1.0L);
    res.eigen_residual = eigen_residual(wedge_square(kummer_torus_matrix(a)), res.sigma, res.s);
    return res;
}

}  // namespace k3lat
