#include "k3lat/isometry.hpp"

#include <numeric>

namespace k3lat {

IntPoly::IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) {
    while (c.size() > 1 && c.back() == 0) c.pop_back();
}

IntPoly IntPoly::from_longs(std::initializer_list<long> low_to_high) {
    std::vector<Int> v;
    for (long x : low_to_high) v.emplace_back(x);
    return IntPoly(std::move(v));
}

std::complex<long double> IntPoly::eval(std::complex<long double> z) const {
    std::complex<long double> v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * z + static_cast<long double>(c[i].get_d());
    return v;
}

IntPoly IntPoly::derivative() const {
    if (c.size() <= 1) return IntPoly({Int(0)});
    std::vector<Int> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(d));
}

std::string IntPoly::to_string(const std::string& var) const {
    std::string s;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        Int a = abs(c[i]);
        bool neg = c[i] < 0;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? "-" : "+";
        if (a != 1 || i == 0) s += a.get_str();
        if (i >= 1) s += var;
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

int reciprocal_sign(const IntPoly& p) {
    const std::size_t n = p.c.size();
    bool plus = true, minus = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (p.c[i] != p.c[n - 1 - i]) plus = false;
        if (p.c[i] != -p.c[n - 1 - i]) minus = false;
    }
    return plus ? 1 : (minus ? -1 : 0);
}

IntPoly char_poly(const IntMatrix& a) {
    if (!a.square()) throw LinalgError("char_poly of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return IntPoly({Int(1)});
    // p holds det(tI - M) high -> low for the trailing block M
    std::vector<Int> p{Int(1), Int(-a(n - 1, n - 1))};
    for (std::size_t k = n - 1; k-- > 0;) {
        const std::size_t m = n - 1 - k;
        std::vector<Int> col(m + 2);
        col[0] = 1;
        col[1] = -a(k, k);
        std::vector<Int> v(m);
        for (std::size_t i = 0; i < m; ++i) v[i] = a(k + 1 + i, k);
        for (std::size_t j = 2; j <= m + 1; ++j) {
            Int s = 0;
            for (std::size_t i = 0; i < m; ++i) s += a(k, k + 1 + i) * v[i];
            col[j] = -s;
            std::vector<Int> w(m, Int(0));
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t l = 0; l < m; ++l) w[i] += a(k + 1 + i, k + 1 + l) * v[l];
            v = std::move(w);
        }
        std::vector<Int> q(m + 2, Int(0));
        for (std::size_t i = 0; i < m + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, m); ++j) q[i] += col[i - j] * p[j];
        p = std::move(q);
    }
    std::reverse(p.begin(), p.end());
    return IntPoly(std::move(p));
}

bool is_isometry(const IntLattice& L, const IntMatrix& m) {
    if (!m.square() || m.rows() != L.rank()) return false;
    return m.transpose() * L.gram() * m == L.gram();
}

IntMatrix simple_reflection(const IntLattice& L, std::size_t i) {
    if (i >= L.rank()) throw LatticeError("reflection index out of range");
    if (L.gram()(i, i) != -2) throw LatticeError("basis vector " + std::to_string(i) + " is not a (-2)-root");
    IntMatrix s = IntMatrix::identity(L.rank());
    for (std::size_t j = 0; j < L.rank(); ++j) s(i, j) += L.gram()(i, j);
    return s;
}

IntMatrix coxeter_element(const IntLattice& L, std::vector<std::size_t> order) {
    if (order.empty()) {
        order.resize(L.rank());
        std::iota(order.begin(), order.end(), 0);
    }
    IntMatrix c = IntMatrix::identity(L.rank());
    for (std::size_t i : order) c = c * simple_reflection(L, i);
    return c;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
    QMatrix inv = inverse(to_q(m));
    return to_int(inv);
}

IntLattice mcmullen_twist(const IntLattice& e10_lattice, const IntMatrix& f1) {
    if (!is_isometry(e10_lattice, f1)) throw LatticeError("twist needs an isometry of the input lattice");
    const std::size_t n = e10_lattice.rank();
    IntMatrix a = Int(2) * (f1 + inverse_unimodular(f1)) + Int(3) * IntMatrix::identity(n);
    // the form -(a x.y) is taken against the Cartan form, which is minus our Gram
    IntMatrix g = a.transpose() * e10_lattice.gram();
    if (!is_symmetric(g)) throw LatticeError("twisted form is not symmetric");
    return IntLattice("mcmullen-twist", g);
}

DiscAction discriminant_action(const IntLattice& L, const DiscriminantGroup& G, const IntMatrix& f) {
    if (!is_isometry(L, f)) throw LatticeError("discriminant action needs an isometry");
    const std::size_t k = G.generators.size();
    DiscAction act{G.invariant_factors, IntMatrix(k, k)};
    QMatrix fq = to_q(f);
    for (std::size_t j = 0; j < k; ++j) {
        auto c = disc_coords(L, G, fq * G.generators[j]);
        for (std::size_t i = 0; i < k; ++i) act.matrix(i, j) = c[i];
    }
    return act;
}

std::optional<std::size_t> order_of(const IntMatrix& f, std::size_t bound) {
    if (!f.square()) throw LinalgError("order of a non-square matrix");
    const IntMatrix id = IntMatrix::identity(f.rows());
    IntMatrix p = f;
    for (std::size_t n = 1; n <= bound; ++n) {
        if (p == id) return n;
        p = p * f;
    }
    return std::nullopt;
}

}  // namespace k3lat
