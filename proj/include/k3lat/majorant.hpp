#pragma once

#include "k3lat/diophantine.hpp"

#include <optional>
#include <string>
#include <vector>

namespace k3lat {

struct UedaConstants {
    Rat L1, L2, K1, K2, K;
};
// 0 < s < 1, N >= 1
UedaConstants ueda_constant(const Rat& s, long N);
// 1 + 2 (2/(1-s))^{N+2}
Rat ueda_bound(const Rat& s, long N);

enum class MajorantEquation { ueda, arnold_z, b_hat };
std::string to_string(MajorantEquation e);

struct MajorantSeries {
    std::vector<BigFloat> coeffs;  // coeffs[k] = A_{k+1}
    std::optional<std::vector<Rat>> exact;
    MajorantEquation equation = MajorantEquation::ueda;
    BigFloat K, M, Q;
    std::vector<BigFloat> d_seq;  // d_seq[k] = d_{k+1}
};

// sum_{n>=2} d_{n-1} A_n X^n = K M A^2 / (1 - M A), A_1 = 1
MajorantSeries majorant_ueda(const std::vector<BigFloat>& d_seq, const BigFloat& K, const BigFloat& M, std::size_t n_terms);
std::vector<Rat> majorant_ueda_exact(const std::vector<Rat>& d_seq, const Rat& K, const Rat& M, std::size_t n_terms);

// sum_{n>=1} d_n A_n X^n = 2K Q (M + A) X / (1 - Q X)
MajorantSeries majorant_arnold_z(const std::vector<BigFloat>& d_seq, const BigFloat& K, const BigFloat& M,
                                 const BigFloat& Q, std::size_t n_terms);
std::vector<Rat> majorant_arnold_z_exact(const std::vector<Rat>& d_seq, const Rat& K, const Rat& M, const Rat& Q,
                                         std::size_t n_terms);

// sum_{n>=2} d_{n-1} B_n X^n = 2K Q (M + 1) B^2 / (1 - Q B), B_1 = 1
MajorantSeries majorant_b_hat(const std::vector<BigFloat>& d_seq, const BigFloat& K, const BigFloat& M,
                              const BigFloat& Q, std::size_t n_terms);

struct RadiusEstimate {
    double radius = 0;
    double log_radius = 0;  // radius underflows for super-Liouville sequences
    double slope = 0;     // of log A_n against n over the tail
    double residual = 0;  // rms of the fit
    std::size_t first = 0, last = 0;  // 1-based fit window
};
// least squares fit of log A_n over the second half of the coefficients
RadiusEstimate radius_estimate(const MajorantSeries& ms);

std::vector<BigFloat> to_big(const std::vector<double>& v);

}  // namespace k3lat
