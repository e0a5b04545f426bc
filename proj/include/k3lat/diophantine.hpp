#pragma once

#include "k3lat/isometry.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <optional>
#include <string>
#include <vector>

namespace k3lat {

using BigFloat = boost::multiprecision::mpfr_float;

class ExprError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Sets the default mpfr precision for the lifetime of the guard.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned bits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned old_digits10_;
};

// A real number with an absolute error bound. exact is set when the value is rational.
struct RealValue {
    BigFloat value;
    BigFloat err;
    std::optional<Rat> exact;
    std::string expr;
};

// Grammar: numbers (decimal literals are exact), + - * / ^, parentheses, pi,
// sqrt(x), cbrt(x), liouville(K) = sum_{k<=K} 10^{-k!}, liouville(K, b) for base b.
RealValue parse_real(const std::string& expr, unsigned bits = 200);

// dist(np, Z) + dist(nq, Z); the Def 1.3 minimum with its second index read as n.
struct Distance {
    BigFloat value, err;
    bool exact_zero = false;
    bool straddles_zero() const { return !exact_zero && value <= err; }
};
Distance pair_distance(const RealValue& p, const RealValue& q, long n);

struct LiouvilleCertificate {
    double A = 0;
    BigFloat A_exact;  // same value at working precision
    int alpha = 0;
    std::string source;
    std::string coordinate;  // "p" or "q"
};

// For the real root of minpoly in [lo, hi]: dist(n beta, Z) >= A n^{-(d-1)} for all n >= 1.
LiouvilleCertificate liouville_certificate(const IntPoly& minpoly, const Rat& lo, const Rat& hi);

// Number of distinct real roots in (lo, hi], by Sturm's theorem.
std::size_t sturm_count(const IntPoly& p, const Rat& lo, const Rat& hi);

struct DeltaRecord {
    long n;
    BigFloat delta, err;
    double exponent;  // -log delta / log n
};

struct DiophantineReport {
    long n_max = 0;
    std::vector<DeltaRecord> per_n;  // record minima
    double fitted_alpha = 0, fitted_A = 0;
    std::string verdict;  // pass | fail | inconclusive
    std::string reason;
    std::optional<long> witness;
    std::optional<LiouvilleCertificate> certificate;
    std::optional<bool> certificate_holds;
    std::optional<long> certificate_violation;
    unsigned precision_bits = 200;
};

struct CheckOptions {
    double superpoly_exponent = 1.75;  // max record exponent above this fails
    double drift = 0.25;               // late minus early exponent above this is inconclusive
    long min_n = 16;
};

DiophantineReport check_pair(const RealValue& p, const RealValue& q, long n_max,
                             std::optional<LiouvilleCertificate> cert = {}, const CheckOptions& opt = {});

// min(|a|, |1-a|) + min(|b|, |1-b|) for a, b in [0, 1)
double elliptic_distance(double a, double b);
std::vector<double> bundle_distance_seq(const RealValue& p, const RealValue& q, long n_max);

}  // namespace k3lat
