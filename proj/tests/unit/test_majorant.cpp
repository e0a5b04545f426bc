#include "doctest.h"

#include "k3lat/majorant.hpp"

#include <cmath>
#include <random>

using namespace k3lat;

namespace {

using RSeries = std::vector<Rat>;  // index = power of X

RSeries rmul(const RSeries& a, const RSeries& b, std::size_t n) {
    RSeries c(n, Rat(0));
    for (std::size_t i = 0; i < n && i < a.size(); ++i)
        for (std::size_t j = 0; i + j < n && j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

// A = X + sum_{n>=2} [X^n](K sum_{j>=2} M^{j-1} A^j) / d_{n-1}, by plain fixed point iteration
RSeries ueda_oracle(const std::vector<Rat>& d, Rat K, Rat M, std::size_t terms) {
    std::size_t n = terms + 1;
    RSeries a(n, Rat(0));
    a[1] = 1;
    for (std::size_t it = 0; it < terms; ++it) {
        RSeries rhs(n, Rat(0)), pw = a;
        Rat mj = 1;
        for (std::size_t j = 2; j <= terms; ++j) {
            pw = rmul(pw, a, n);
            mj *= M;
            for (std::size_t k = 0; k < n; ++k) rhs[k] += K * mj * pw[k];
        }
        RSeries next(n, Rat(0));
        next[1] = 1;
        for (std::size_t k = 2; k < n; ++k) next[k] = rhs[k] / d[k - 2];
        a = next;
    }
    return {a.begin() + 1, a.end()};
}

// sum_n d_n A_n X^n = 2 K Q (M + A) X / (1 - Q X), iterated
RSeries arnold_oracle(const std::vector<Rat>& d, Rat K, Rat M, Rat Q, std::size_t terms) {
    std::size_t n = terms + 1;
    RSeries geo(n, Rat(0));
    Rat q = 1;
    for (std::size_t k = 0; k < n; ++k, q *= Q) geo[k] = q;
    RSeries a(n, Rat(0));
    for (std::size_t it = 0; it <= terms; ++it) {
        RSeries num(n, Rat(0));
        num[1] = M;
        for (std::size_t k = 1; k + 1 < n; ++k) num[k + 1] += a[k];
        RSeries rhs = rmul(num, geo, n);
        for (std::size_t k = 1; k < n; ++k) a[k] = 2 * K * Q * rhs[k] / d[k - 1];
    }
    return {a.begin() + 1, a.end()};
}

Rat random_rat(std::mt19937& g, long lo, long hi) {
    std::uniform_int_distribution<long> num(lo, hi), den(1, 9);
    return qq(num(g), den(g));
}

std::vector<BigFloat> to_big(const std::vector<Rat>& v) {
    std::vector<BigFloat> out;
    for (const auto& x : v) out.emplace_back(BigFloat(x.get_num().get_str()) / BigFloat(x.get_den().get_str()));
    return out;
}

}  // namespace

TEST_CASE("ueda constants") {
    auto c = ueda_constant(qq(1, 2), 3);
    CHECK(c.L1 == 2);
    CHECK(c.L2 == 3);
    CHECK(c.K1 == 384);
    CHECK(c.K2 == 192);
    CHECK(c.K == 1153);
    // s -> 0+: L1 -> 0, L2 -> 1, K -> 1 + 2^{N+1}
    auto tiny = ueda_constant(qq(1, 1000000000), 4);
    CHECK(abs(tiny.L1) < qq(1, 100000000));
    CHECK(abs(tiny.L2 - 1) < qq(1, 100000000));
    CHECK(abs(tiny.K - 33) < qq(1, 1000000));
    for (long N = 1; N <= 10; ++N)
        for (long k = 1; k <= 10; ++k) {
            Rat s = qq(k, 11);
            auto u = ueda_constant(s, N);
            CHECK(u.K == 1 + 2 * u.K1 + 2 * u.K2);
            CHECK(u.K < ueda_bound(s, N));
        }
    CHECK_THROWS(ueda_constant(Rat(0), 3));
    CHECK_THROWS(ueda_constant(Rat(1), 3));
    CHECK_THROWS(ueda_constant(qq(1, 2), 0));
}

TEST_CASE("ueda type series: first terms exact") {
    std::mt19937 g(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rat> d;
        for (int i = 0; i < 6; ++i) d.push_back(random_rat(g, 1, 9));
        Rat K = random_rat(g, 1, 20), M = random_rat(g, 1, 20);
        auto a = majorant_ueda_exact(d, K, M, 6);
        CHECK(a[0] == 1);
        CHECK(a[1] == K * M / d[0]);
        CHECK(a[2] == K / d[1] * (2 * M * a[1] + M * M));
    }
}

TEST_CASE("ueda type series matches the fixed point oracle") {
    std::vector<Rat> ones(12, Rat(1));
    auto a = majorant_ueda_exact(ones, 1, 1, 12);
    auto o = ueda_oracle(ones, 1, 1, 12);
    CHECK(a == o);
    // A - X = A^2/(1 - A): 1, 1, 3, 11, 45 (little Schroeder numbers)
    CHECK(a[1] == 1);
    CHECK(a[2] == 3);
    CHECK(a[3] == 11);
    CHECK(a[4] == 45);

    std::mt19937 g(11);
    std::vector<Rat> d;
    for (int i = 0; i < 10; ++i) d.push_back(random_rat(g, 1, 9));
    CHECK(majorant_ueda_exact(d, qq(3, 2), qq(2, 3), 10) == ueda_oracle(d, qq(3, 2), qq(2, 3), 10));

    auto f = majorant_ueda(to_big(ones), 1, 1, 12);
    for (std::size_t k = 0; k < 12; ++k) CHECK(abs(f.coeffs[k] - to_big(std::vector<Rat>{a[k]})[0]) < BigFloat("1e-50"));
}

TEST_CASE("arnold z series") {
    std::mt19937 g(3);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rat> d;
        for (int i = 0; i < 12; ++i) d.push_back(random_rat(g, 1, 9));
        Rat K = random_rat(g, 1, 9), M = random_rat(g, 1, 9), Q = random_rat(g, 1, 9);
        auto a = majorant_arnold_z_exact(d, K, M, Q, 12);
        CHECK(a[0] == 2 * K * Q * M / d[0]);
        CHECK(a[1] == 2 * K * Q / d[1] * (M * Q + a[0]));
        CHECK(a == arnold_oracle(d, K, M, Q, 12));
    }
}

TEST_CASE("b hat dominates B = X + X A") {
    std::mt19937 g(5);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<BigFloat> d;
        std::uniform_real_distribution<double> u(0.05, 1.0);
        for (int i = 0; i < 30; ++i) d.emplace_back(u(g));
        BigFloat K = 1 + 4 * u(g), M = 1 + 4 * u(g), Q = u(g);
        auto a = majorant_arnold_z(d, K, M, Q, 29);
        auto b = majorant_b_hat(d, K, M, Q, 30);
        CHECK(b.coeffs[0] == 1);
        for (std::size_t nu = 2; nu <= 30; ++nu) CHECK(b.coeffs[nu - 1] >= a.coeffs[nu - 2] * (1 - BigFloat("1e-40")));
    }
}

TEST_CASE("monotonicity and prefix stability") {
    std::mt19937 g(9);
    std::uniform_real_distribution<double> u(0.1, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<BigFloat> d, dsmall;
        for (int i = 0; i < 20; ++i) {
            d.emplace_back(u(g));
            dsmall.push_back(d.back() * u(g));
        }
        BigFloat K = 1 + u(g), M = 1 + u(g), Q = u(g);
        auto base = majorant_ueda(d, K, M, 20);
        auto bigger = majorant_ueda(d, K * 2, M + 1, 20);
        auto smaller_d = majorant_ueda(dsmall, K, M, 20);
        auto prefix = majorant_ueda(d, K, M, 12);
        auto az = majorant_arnold_z(d, K, M, Q, 20), az2 = majorant_arnold_z(d, K, M, Q * 2, 20);
        for (std::size_t k = 0; k < 20; ++k) {
            CHECK(base.coeffs[k] >= 0);
            CHECK(bigger.coeffs[k] >= base.coeffs[k]);
            CHECK(smaller_d.coeffs[k] >= base.coeffs[k]);
            CHECK(az2.coeffs[k] >= az.coeffs[k]);
            if (k < 12) CHECK(prefix.coeffs[k] == base.coeffs[k]);
        }
    }
    std::vector<BigFloat> bad{1, 0, 1};
    CHECK_THROWS(majorant_ueda(bad, 1, 1, 4));
    CHECK_THROWS(majorant_arnold_z(bad, 1, 1, 1, 3));
    CHECK_THROWS(majorant_ueda(bad, -1, 1, 2));
}

TEST_CASE("radius estimates") {
    // oracle: A - X = A^2/(1 - A) gives 2A^2 - (1 + X) A + X = 0, branch point at the smallest
    // positive zero of (1 + X)^2 - 8X, found by bisection
    double lo = 0, hi = 0.5;
    for (int i = 0; i < 200; ++i) {
        double mid = (lo + hi) / 2;
        ((1 + mid) * (1 + mid) - 8 * mid > 0 ? lo : hi) = mid;
    }
    CHECK(lo == doctest::Approx(3 - 2 * std::sqrt(2.0)));
    std::vector<BigFloat> ones(200, BigFloat(1));
    auto r = radius_estimate(majorant_ueda(ones, 1, 1, 64));
    CHECK(std::fabs(r.radius - lo) / lo < 0.2);
    CHECK(r.residual < 0.5);

    auto z = parse_real("0"), g = parse_real("(1 + sqrt(5)) / 2");
    auto dg = to_big(bundle_distance_seq(z, g, 200));
    auto rg = radius_estimate(majorant_ueda(dg, 10, 2, 64));
    CHECK(rg.radius > 1e-4);
    auto rg2 = radius_estimate(majorant_ueda(dg, 10, 2, 128));
    CHECK(rg2.radius > 1e-4);

    // d_n = 2^{-n^2}: the estimate keeps shrinking with the number of terms
    std::vector<BigFloat> super;
    for (long n = 1; n <= 200; ++n) super.push_back(boost::multiprecision::ldexp(BigFloat(1), static_cast<int>(-n * n)));
    double prev = 1e300;
    for (std::size_t terms : {16, 32, 64, 128}) {
        auto rs = radius_estimate(majorant_ueda(super, 10, 2, terms));
        CHECK(rs.log_radius < prev - std::log(1e3));
        prev = rs.log_radius;
    }
    CHECK(prev < std::log(1e-30));
    CHECK_THROWS(radius_estimate(majorant_ueda(ones, 1, 1, 8)));
}
