#include "k3lat/majorant.hpp"

#include <cmath>

namespace k3lat {

namespace mp = boost::multiprecision;

UedaConstants ueda_constant(const Rat& s, long N) {
    if (!(s > 0 && s < 1)) throw std::invalid_argument("s must lie in (0, 1)");
    if (N < 1) throw std::invalid_argument("N must be at least 1");
    UedaConstants c;
    c.L1 = 2 * s / (1 - s);
    c.L2 = (1 + s) / (1 - s);
    Rat p = 1;
    for (long i = 0; i < N; ++i) p *= c.L2 + 1;
    c.K1 = c.L1 * c.L2 * p;
    c.K2 = c.L2 * p;
    c.K = std::max(Rat(1 + 2 * c.K1 + 2 * c.K2), Rat(2 * c.K2));
    return c;
}

Rat ueda_bound(const Rat& s, long N) {
    if (!(s > 0 && s < 1)) throw std::invalid_argument("s must lie in (0, 1)");
    Rat b = 2 / (1 - s), p = 1;
    for (long i = 0; i < N + 2; ++i) p *= b;
    return 1 + 2 * p;
}

std::string to_string(MajorantEquation e) {
    switch (e) {
        case MajorantEquation::ueda: return "ueda";
        case MajorantEquation::arnold_z: return "arnold-z";
        case MajorantEquation::b_hat: return "b-hat";
    }
    return "?";
}

namespace {

template <class T>
void check_d(const std::vector<T>& d, std::size_t need) {
    if (d.size() < need) throw std::invalid_argument("distance sequence too short");
    for (std::size_t i = 0; i < need; ++i)
        if (!(d[i] > 0)) throw std::invalid_argument("zero distance at n = " + std::to_string(i + 1));
}

// sum_{n>=2} d_{n-1} A_n X^n = c A^2 / (1 - mu A), A_1 = 1.
// With R = A^2 / (1 - mu A): R_n = (A^2)_n + mu sum_k A_k R_{n-k}, all from lower terms.
template <class T>
std::vector<T> quadratic_type(const std::vector<T>& d, const T& c, const T& mu, std::size_t n_terms) {
    if (n_terms == 0) return {};
    check_d(d, n_terms - 1);
    std::vector<T> a(n_terms + 1, T(0)), r(n_terms + 1, T(0));
    a[1] = 1;
    for (std::size_t n = 2; n <= n_terms; ++n) {
        T sq = 0;
        for (std::size_t k = 1; k < n; ++k) sq += a[k] * a[n - k];
        T tail = 0;
        for (std::size_t k = 1; k < n; ++k) tail += a[k] * r[n - k];
        r[n] = sq + mu * tail;
        a[n] = c * r[n] / d[n - 2];
    }
    return {a.begin() + 1, a.end()};
}

template <class T>
std::vector<T> linear_type(const std::vector<T>& d, const T& K, const T& M, const T& Q, std::size_t n_terms) {
    check_d(d, n_terms);
    std::vector<T> a(n_terms + 1, T(0));
    // S_n = M Q^{n-1} + sum_{v<n} A_v Q^{n-1-v}, so S_{n+1} = Q S_n + A_n
    T s = M;
    for (std::size_t n = 1; n <= n_terms; ++n) {
        a[n] = 2 * K * Q * s / d[n - 1];
        s = Q * s + a[n];
    }
    return {a.begin() + 1, a.end()};
}

void check_positive(const BigFloat& x, const char* name) {
    if (!(x > 0)) throw std::invalid_argument(std::string(name) + " must be positive");
}

}  // namespace

MajorantSeries majorant_ueda(const std::vector<BigFloat>& d_seq, const BigFloat& K, const BigFloat& M, std::size_t n_terms) {
    check_positive(K, "K");
    check_positive(M, "M");
    MajorantSeries s;
    s.equation = MajorantEquation::ueda;
    s.K = K;
    s.M = M;
    s.Q = 0;
    s.coeffs = quadratic_type<BigFloat>(d_seq, K * M, M, n_terms);
    s.d_seq.assign(d_seq.begin(), d_seq.begin() + std::min(d_seq.size(), n_terms));
    return s;
}

std::vector<Rat> majorant_ueda_exact(const std::vector<Rat>& d_seq, const Rat& K, const Rat& M, std::size_t n_terms) {
    if (!(K > 0 && M > 0)) throw std::invalid_argument("K and M must be positive");
    return quadratic_type<Rat>(d_seq, Rat(K * M), M, n_terms);
}

MajorantSeries majorant_arnold_z(const std::vector<BigFloat>& d_seq, const BigFloat& K, const BigFloat& M,
                                 const BigFloat& Q, std::size_t n_terms) {
    check_positive(K, "K");
    check_positive(M, "M");
    check_positive(Q, "Q");
    MajorantSeries s;
    s.equation = MajorantEquation::arnold_z;
    s.K = K;
    s.M = M;
    s.Q = Q;
    s.coeffs = linear_type<BigFloat>(d_seq, K, M, Q, n_terms);
    s.d_seq.assign(d_seq.begin(), d_seq.begin() + n_terms);
    return s;
}

std::vector<Rat> majorant_arnold_z_exact(const std::vector<Rat>& d_seq, const Rat& K, const Rat& M, const Rat& Q,
                                         std::size_t n_terms) {
    if (!(K > 0 && M > 0 && Q > 0)) throw std::invalid_argument("K, M and Q must be positive");
    return linear_type<Rat>(d_seq, K, M, Q, n_terms);
}

MajorantSeries majorant_b_hat(const std::vector<BigFloat>& d_seq, const BigFloat& K, const BigFloat& M,
                              const BigFloat& Q, std::size_t n_terms) {
    check_positive(K, "K");
    check_positive(M, "M");
    check_positive(Q, "Q");
    MajorantSeries s;
    s.equation = MajorantEquation::b_hat;
    s.K = K;
    s.M = M;
    s.Q = Q;
    s.coeffs = quadratic_type<BigFloat>(d_seq, 2 * K * Q * (M + 1), Q, n_terms);
    s.d_seq.assign(d_seq.begin(), d_seq.begin() + std::min(d_seq.size(), n_terms));
    return s;
}

RadiusEstimate radius_estimate(const MajorantSeries& ms) {
    const std::size_t n = ms.coeffs.size();
    if (n < 16) throw std::invalid_argument("radius estimate needs at least 16 coefficients");
    RadiusEstimate e;
    e.first = n / 2 + 1;
    e.last = n;
    std::vector<double> xs, ys;
    for (std::size_t k = e.first; k <= e.last; ++k) {
        const BigFloat& a = ms.coeffs[k - 1];
        if (!(a > 0)) continue;
        xs.push_back(static_cast<double>(k));
        ys.push_back(static_cast<double>(mp::log(a)));
    }
    if (xs.size() < 2) throw std::invalid_argument("not enough positive coefficients in the tail");
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= xs.size();
    my /= xs.size();
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    e.slope = sxy / sxx;
    double ss = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double r = ys[i] - (my + e.slope * (xs[i] - mx));
        ss += r * r;
    }
    e.residual = std::sqrt(ss / xs.size());
    e.log_radius = -e.slope;
    e.radius = std::exp(-e.slope);
    return e;
}

std::vector<BigFloat> to_big(const std::vector<double>& v) { return {v.begin(), v.end()}; }

}  // namespace k3lat
