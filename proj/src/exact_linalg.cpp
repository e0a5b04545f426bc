#include "k3lat/exact_linalg.hpp"

#include <algorithm>
#include <utility>

namespace k3lat {

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : init) {
        if (r.size() != cols_) throw LinalgError("ragged matrix literal");
        for (long v : r) a_.emplace_back(v);
    }
}

template <class T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

template <class T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

template <class T>
std::vector<T> Matrix<T>::row(std::size_t i) const {
    return std::vector<T>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

template <class T>
std::vector<T> Matrix<T>::col(std::size_t j) const {
    std::vector<T> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

template <class T>
void Matrix<T>::set_row(std::size_t i, const std::vector<T>& v) {
    if (v.size() != cols_) throw LinalgError("row length mismatch");
    std::copy(v.begin(), v.end(), a_.begin() + i * cols_);
}

template <class T>
void Matrix<T>::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

template <class T>
void Matrix<T>::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

template <class T>
Matrix<T> Matrix<T>::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

template <class T>
bool Matrix<T>::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw LinalgError("matrix product dimension mismatch");
    Matrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw LinalgError("matrix sum dimension mismatch");
    Matrix<T> c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw LinalgError("matrix difference dimension mismatch");
    Matrix<T> c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

template <class T>
Matrix<T> operator*(const T& s, const Matrix<T>& a) {
    Matrix<T> c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
    return c;
}

template <class T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& x) {
    if (a.cols() != x.size()) throw LinalgError("matrix-vector dimension mismatch");
    std::vector<T> y(a.rows(), T(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

template class Matrix<Int>;
template class Matrix<Rat>;
template Matrix<Int> operator*(const Matrix<Int>&, const Matrix<Int>&);
template Matrix<Rat> operator*(const Matrix<Rat>&, const Matrix<Rat>&);
template Matrix<Int> operator+(const Matrix<Int>&, const Matrix<Int>&);
template Matrix<Rat> operator+(const Matrix<Rat>&, const Matrix<Rat>&);
template Matrix<Int> operator-(const Matrix<Int>&, const Matrix<Int>&);
template Matrix<Rat> operator-(const Matrix<Rat>&, const Matrix<Rat>&);
template Matrix<Int> operator*(const Int&, const Matrix<Int>&);
template Matrix<Rat> operator*(const Rat&, const Matrix<Rat>&);
template std::vector<Int> operator*(const Matrix<Int>&, const std::vector<Int>&);
template std::vector<Rat> operator*(const Matrix<Rat>&, const std::vector<Rat>&);

QMatrix to_q(const IntMatrix& m) {
    QMatrix q(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rat(m(i, j));
    return q;
}

QVec to_q(const IntVec& v) {
    QVec q;
    q.reserve(v.size());
    for (const auto& x : v) q.emplace_back(x);
    return q;
}

IntMatrix to_int(const QMatrix& m) {
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).get_den() != 1) throw LinalgError("matrix entry is not an integer");
            r(i, j) = m(i, j).get_num();
        }
    return r;
}

IntVec to_int(const QVec& v) {
    IntVec r;
    r.reserve(v.size());
    for (const auto& x : v) {
        if (x.get_den() != 1) throw LinalgError("vector entry is not an integer");
        r.push_back(x.get_num());
    }
    return r;
}

bool is_integral(const QMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j).get_den() != 1) return false;
    return true;
}

bool is_integral(const QVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.get_den() == 1; });
}

IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

Rat dot(const QVec& x, const QVec& y) {
    if (x.size() != y.size()) throw LinalgError("dot: dimension mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

Rat bilinear(const QMatrix& g, const QVec& x, const QVec& y) {
    if (g.rows() != x.size() || g.cols() != y.size()) throw LinalgError("pairing: dimension mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        Rat r = 0;
        for (std::size_t j = 0; j < y.size(); ++j) r += g(i, j) * y[j];
        s += x[i] * r;
    }
    return s;
}

Int determinant(const IntMatrix& m0) {
    if (!m0.square()) throw LinalgError("determinant of non-square matrix");
    std::size_t n = m0.rows();
    if (n == 0) return 1;
    IntMatrix m = m0;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = t;
            }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

namespace {

// Row echelon form by Gaussian elimination; returns rank and the sign/product for det.
std::size_t eliminate(QMatrix& m, Rat* det) {
    std::size_t r = 0;
    Rat d = 1;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) {
            d = 0;
            continue;
        }
        if (p != r) {
            m.swap_rows(p, r);
            d = -d;
        }
        d *= m(r, c);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, c) == 0) continue;
            Rat f = m(i, c) / m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    if (det) *det = (r == m.rows()) ? d : Rat(0);
    return r;
}

}  // namespace

Rat determinant(const QMatrix& m0) {
    if (!m0.square()) throw LinalgError("determinant of non-square matrix");
    QMatrix m = m0;
    Rat d;
    eliminate(m, &d);
    return d;
}

std::size_t rank(const QMatrix& m0) {
    QMatrix m = m0;
    return eliminate(m, nullptr);
}

namespace {

Int round_q(const Rat& x) {
    // nearest integer, halves rounded down
    Rat h = x - qq(1, 2);
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
    return r;
}

void gram_schmidt(const QMatrix& g, QMatrix& mu, std::vector<Rat>& b) {
    const std::size_t n = g.rows();
    mu = QMatrix(n, n);
    b.assign(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            Rat s = g(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= mu(j, k) * mu(i, k) * b[k];
            mu(i, j) = s / b[j];
        }
        Rat s = g(i, i);
        for (std::size_t k = 0; k < i; ++k) s -= mu(i, k) * mu(i, k) * b[k];
        if (s <= 0) throw LinalgError("LLL needs a positive definite form");
        b[i] = s;
    }
}

}  // namespace

IntMatrix lll_reduce(const IntMatrix& q) {
    if (!q.square() || !is_symmetric(q)) throw LinalgError("LLL needs a symmetric matrix");
    const std::size_t n = q.rows();
    IntMatrix t = IntMatrix::identity(n);
    QMatrix g = to_q(q), mu;
    std::vector<Rat> b;
    gram_schmidt(g, mu, b);
    auto row_op = [&](std::size_t k, std::size_t j, const Int& c) {
        // b_k -= c b_j
        for (std::size_t i = 0; i < n; ++i) t(k, i) -= c * t(j, i);
        Rat cq(c);
        for (std::size_t i = 0; i < n; ++i) g(k, i) -= cq * g(j, i);
        for (std::size_t i = 0; i < n; ++i) g(i, k) = (i == k) ? g(k, k) - cq * g(k, j) : g(k, i);
    };
    std::size_t k = 1;
    while (k < n) {
        for (std::size_t j = k; j-- > 0;) {
            Int c = round_q(mu(k, j));
            if (c == 0) continue;
            row_op(k, j, c);
            for (std::size_t i = 0; i < j; ++i) mu(k, i) -= Rat(c) * mu(j, i);
            mu(k, j) -= Rat(c);
        }
        if (b[k] < (qq(3, 4) - mu(k, k - 1) * mu(k, k - 1)) * b[k - 1]) {
            t.swap_rows(k, k - 1);
            g.swap_rows(k, k - 1);
            g.swap_cols(k, k - 1);
            gram_schmidt(g, mu, b);
            k = std::max<std::size_t>(k - 1, 1);
        } else {
            ++k;
        }
    }
    return t;
}

std::optional<QVec> solve(const QMatrix& a, const QVec& b) {
    if (b.size() != a.rows()) throw LinalgError("solve: dimension mismatch");
    const std::size_t n = a.rows(), k = a.cols();
    QMatrix m(n, k + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) m(i, j) = a(i, j);
        m(i, k) = b[i];
    }
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < k && r < n; ++c) {
        std::size_t p = r;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) continue;
        m.swap_rows(p, r);
        Rat piv = m(r, c);
        for (std::size_t j = c; j <= k; ++j) m(r, j) /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rat f = m(i, c);
            for (std::size_t j = c; j <= k; ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < n; ++i)
        if (m(i, k) != 0) return std::nullopt;
    QVec x(k, Rat(0));
    for (std::size_t i = 0; i < r; ++i) x[pivots[i]] = m(i, k);
    return x;
}

QMatrix inverse(const QMatrix& m0) {
    if (!m0.square()) throw LinalgError("inverse of non-square matrix");
    std::size_t n = m0.rows();
    QMatrix a = m0;
    QMatrix inv = QMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) throw LinalgError("matrix is singular");
        a.swap_rows(p, c);
        inv.swap_rows(p, c);
        Rat piv = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c) == 0) continue;
            Rat f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

bool is_symmetric(const QMatrix& m) {
    if (!m.square()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != m(j, i)) return false;
    return true;
}

bool is_symmetric(const IntMatrix& m) {
    if (!m.square()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != m(j, i)) return false;
    return true;
}

namespace {

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
    if (f == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}

void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
    if (f == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}

void negate_row(IntMatrix& m, std::size_t i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

std::vector<Int> SmithForm::diagonal() const {
    std::vector<Int> d;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
    return d;
}

SmithForm smith_normal_form(const IntMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    IntMatrix A = m;
    IntMatrix U = IntMatrix::identity(r);
    IntMatrix V = IntMatrix::identity(c);

    for (std::size_t k = 0; k < std::min(r, c); ++k) {
        for (;;) {
            // smallest nonzero entry of the trailing block becomes the pivot
            std::size_t pi = r, pj = c;
            for (std::size_t i = k; i < r; ++i)
                for (std::size_t j = k; j < c; ++j)
                    if (A(i, j) != 0 && (pi == r || abs(A(i, j)) < abs(A(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == r) break;
            A.swap_rows(k, pi);
            U.swap_rows(k, pi);
            A.swap_cols(k, pj);
            V.swap_cols(k, pj);

            bool clean = true;
            for (std::size_t i = k + 1; i < r; ++i) {
                if (A(i, k) == 0) continue;
                Int q = floor_div(A(i, k), A(k, k));
                add_row_multiple(A, i, k, -q);
                add_row_multiple(U, i, k, -q);
                if (A(i, k) != 0) clean = false;
            }
            for (std::size_t j = k + 1; j < c; ++j) {
                if (A(k, j) == 0) continue;
                Int q = floor_div(A(k, j), A(k, k));
                add_col_multiple(A, j, k, -q);
                add_col_multiple(V, j, k, -q);
                if (A(k, j) != 0) clean = false;
            }
            if (!clean) continue;

            // pivot must divide the rest of the block
            bool divides = true;
            for (std::size_t i = k + 1; i < r && divides; ++i)
                for (std::size_t j = k + 1; j < c; ++j)
                    if (A(i, j) % A(k, k) != 0) {
                        add_row_multiple(A, k, i, 1);
                        add_row_multiple(U, k, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (A(k, k) < 0) {
            negate_row(A, k);
            negate_row(U, k);
        }
    }
    return {U, A, V};
}

HermiteForm hermite_normal_form(const IntMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    IntMatrix H = m;
    IntMatrix U = IntMatrix::identity(r);
    std::size_t row = 0;
    for (std::size_t j = 0; j < c && row < r; ++j) {
        for (;;) {
            std::size_t p = r;
            for (std::size_t i = row; i < r; ++i)
                if (H(i, j) != 0 && (p == r || abs(H(i, j)) < abs(H(p, j)))) p = i;
            if (p == r) break;
            H.swap_rows(row, p);
            U.swap_rows(row, p);
            bool done = true;
            for (std::size_t i = row + 1; i < r; ++i) {
                if (H(i, j) == 0) continue;
                Int q = floor_div(H(i, j), H(row, j));
                add_row_multiple(H, i, row, -q);
                add_row_multiple(U, i, row, -q);
                if (H(i, j) != 0) done = false;
            }
            if (done) break;
        }
        if (H(row, j) == 0) continue;
        if (H(row, j) < 0) {
            negate_row(H, row);
            negate_row(U, row);
        }
        for (std::size_t i = 0; i < row; ++i) {
            Int q = floor_div(H(i, j), H(row, j));
            add_row_multiple(H, i, row, -q);
            add_row_multiple(U, i, row, -q);
        }
        ++row;
    }
    return {H, U, row};
}

std::vector<IntVec> integer_kernel(const QMatrix& m) {
    const std::size_t n = m.cols();
    // clear denominators row by row, then U * A^T = H; rows of U on zero rows of H span ker A
    IntMatrix At(n, m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) {
            Rat v = m(i, j) * l;
            At(j, i) = v.get_num();
        }
    }
    HermiteForm hf = hermite_normal_form(At);
    std::vector<IntVec> basis;
    if (hf.rank == n) return basis;
    IntMatrix K(n - hf.rank, n);
    for (std::size_t i = hf.rank; i < n; ++i) K.set_row(i - hf.rank, hf.U.row(i));
    HermiteForm red = hermite_normal_form(K);
    for (std::size_t i = 0; i < red.rank; ++i) basis.push_back(red.H.row(i));
    return basis;
}

Inertia inertia(const QMatrix& g0) {
    if (!is_symmetric(g0)) throw LinalgError("inertia: matrix is not symmetric");
    QMatrix g = g0;
    const std::size_t n = g.rows();
    Inertia res;
    for (std::size_t k = 0; k < n; ++k) {
        if (g(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && g(p, p) == 0) ++p;
            if (p < n) {
                g.swap_rows(k, p);
                g.swap_cols(k, p);
            } else {
                std::size_t q = k + 1;
                while (q < n && g(k, q) == 0) ++q;
                if (q == n) {
                    ++res.n_zero;
                    continue;
                }
                // e_k <- e_k + e_q makes the diagonal entry 2 g(k,q) != 0
                for (std::size_t j = 0; j < n; ++j) g(k, j) += g(q, j);
                for (std::size_t i = 0; i < n; ++i) g(i, k) += g(i, q);
            }
        }
        const Rat piv = g(k, k);
        if (piv > 0)
            ++res.n_plus;
        else
            ++res.n_minus;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (g(i, k) == 0) continue;
            Rat f = g(i, k) / piv;
            for (std::size_t j = k + 1; j < n; ++j) g(i, j) -= f * g(k, j);
        }
        for (std::size_t i = k + 1; i < n; ++i) g(i, k) = g(k, i) = 0;
    }
    return res;
}

std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat parse_rational(const std::string& s) {
    Rat q;
    try {
        std::size_t slash = s.find('/');
        if (slash == std::string::npos) {
            q = Rat(Int(s));
        } else {
            Int num(s.substr(0, slash)), den(s.substr(slash + 1));
            if (den == 0) throw LinalgError("zero denominator in '" + s + "'");
            q = qq(num, den);
            q.canonicalize();
        }
    } catch (const std::invalid_argument&) {
        throw LinalgError("not a rational number: '" + s + "'");
    }
    return q;
}

}  // namespace k3lat
