#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3lat {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using QVec = std::vector<Rat>;

// Canonicalized n/d; mpq_class(n, d) alone leaves the fraction unreduced.
inline Rat qq(const Int& n, const Int& d) {
    Rat q(n, d);
    q.canonicalize();
    return q;
}
inline Rat qq(long n, long d) { return qq(Int(n), Int(d)); }

// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c, T(0)) {}
    Matrix(std::initializer_list<std::initializer_list<long>> init);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const;
    std::vector<T> col(std::size_t j) const;
    void set_row(std::size_t i, const std::vector<T>& v);
    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);

    Matrix transpose() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> a_;
};

using IntMatrix = Matrix<Int>;
using QMatrix = Matrix<Rat>;

class LinalgError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b);
template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b);
template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b);
template <class T>
Matrix<T> operator*(const T& s, const Matrix<T>& a);
template <class T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& x);

Matrix<Rat> to_q(const IntMatrix& m);
QVec to_q(const IntVec& v);
// Throws LinalgError if some entry is not an integer.
IntMatrix to_int(const QMatrix& m);
IntVec to_int(const QVec& v);
bool is_integral(const QMatrix& m);
bool is_integral(const QVec& v);

Matrix<Int> block_diag(const IntMatrix& a, const IntMatrix& b);

Rat dot(const QVec& x, const QVec& y);
// x^T G y
Rat bilinear(const QMatrix& g, const QVec& x, const QVec& y);

Int determinant(const IntMatrix& m);  // Bareiss
Rat determinant(const QMatrix& m);
std::size_t rank(const QMatrix& m);
QMatrix inverse(const QMatrix& m);  // throws on singular input
// Some x with A x = b (free variables set to 0), or nothing if inconsistent.
std::optional<QVec> solve(const QMatrix& a, const QVec& b);
bool is_symmetric(const QMatrix& m);
bool is_symmetric(const IntMatrix& m);

struct SmithForm {
    IntMatrix U, D, V;  // U * M * V = D
    std::vector<Int> diagonal() const;
};
SmithForm smith_normal_form(const IntMatrix& m);

struct HermiteForm {
    IntMatrix H, U;  // U * M = H
    std::size_t rank = 0;
};
HermiteForm hermite_normal_form(const IntMatrix& m);

// Basis of {x in Z^n : M x = 0}, HNF-reduced.
std::vector<IntVec> integer_kernel(const QMatrix& m);

// LLL (delta = 3/4) for a positive definite Gram matrix Q. Returns T, rows = new basis
// in old coordinates, so T Q T^T is reduced.
IntMatrix lll_reduce(const IntMatrix& q);

struct Inertia {
    std::size_t n_plus = 0, n_minus = 0, n_zero = 0;
    bool operator==(const Inertia& o) const {
        return n_plus == o.n_plus && n_minus == o.n_minus && n_zero == o.n_zero;
    }
};
Inertia inertia(const QMatrix& g);

std::string to_string(const Rat& q);  // "p/q" or "p"
Rat parse_rational(const std::string& s);

}  // namespace k3lat
