#include "k3lat/lattice.hpp"

namespace k3lat {

IntLattice::IntLattice(std::string name, IntMatrix gram) : name_(std::move(name)), gram_(std::move(gram)) {
    if (!is_symmetric(gram_)) throw LatticeError("Gram matrix of '" + name_ + "' is not symmetric");
    det_ = determinant(gram_);
    if (det_ == 0) throw LatticeError("Gram matrix of '" + name_ + "' is degenerate");
    gram_q_ = to_q(gram_);
    sig_ = inertia(gram_q_);
    for (std::size_t i = 0; i < rank(); ++i)
        if (gram_(i, i) % 2 != 0) even_ = false;
}

bool is_even(const IntLattice& L) { return L.even(); }

bool is_unimodular(const IntLattice& L) { return abs(L.det()) == 1; }

Rat frac(const Rat& q) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return q - Rat(f);
}

QVec reduce_mod_lattice(const QVec& x) {
    QVec r;
    r.reserve(x.size());
    for (const auto& v : x) r.push_back(frac(v));
    return r;
}

DiscriminantGroup discriminant_group(const IntLattice& L) {
    SmithForm s = smith_normal_form(L.gram());
    DiscriminantGroup G;
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < L.rank(); ++i) {
        const Int& d = s.D(i, i);
        if (d == 0) throw LatticeError("discriminant group of a degenerate lattice");
        if (d == 1) continue;
        G.invariant_factors.push_back(d);
        G.order *= d;
        QVec g(L.rank());
        for (std::size_t k = 0; k < L.rank(); ++k) g[k] = qq(s.V(k, i), d);
        G.generators.push_back(reduce_mod_lattice(g));
        rows.push_back(i);
    }
    G.coord_map = IntMatrix(rows.size(), L.rank());
    IntMatrix UG = s.U * L.gram();
    for (std::size_t k = 0; k < rows.size(); ++k) G.coord_map.set_row(k, UG.row(rows[k]));
    return G;
}

bool in_dual(const IntLattice& L, const QVec& x) {
    if (x.size() != L.rank()) return false;
    return is_integral(L.gram_q() * x);
}

Rat pairing(const IntLattice& L, const QVec& x, const QVec& y) { return bilinear(L.gram_q(), x, y); }

Rat pairing(const IntLattice& L, const IntVec& x, const IntVec& y) {
    return bilinear(L.gram_q(), to_q(x), to_q(y));
}

Rat disc_q(const IntLattice& L, const QVec& x) {
    if (!in_dual(L, x)) throw LatticeError("vector is not in the dual lattice of '" + L.name() + "'");
    return frac(pairing(L, x, x) / 2);
}

std::vector<Int> disc_coords(const IntLattice& L, const DiscriminantGroup& G, const QVec& x) {
    if (!in_dual(L, x)) throw LatticeError("vector is not in the dual lattice of '" + L.name() + "'");
    QVec y = to_q(G.coord_map) * x;
    std::vector<Int> c(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        mpz_fdiv_r(c[i].get_mpz_t(), y[i].get_num_mpz_t(), G.invariant_factors[i].get_mpz_t());
    }
    return c;
}

QVec disc_element(const DiscriminantGroup& G, const std::vector<Int>& coords) {
    if (coords.size() != G.generators.size()) throw LatticeError("discriminant coordinate length mismatch");
    if (G.generators.empty()) return {};
    QVec x(G.generators[0].size(), Rat(0));
    for (std::size_t i = 0; i < coords.size(); ++i)
        for (std::size_t k = 0; k < x.size(); ++k) x[k] += Rat(coords[i]) * G.generators[i][k];
    return reduce_mod_lattice(x);
}

std::vector<std::vector<Int>> disc_enumerate(const DiscriminantGroup& G) {
    std::vector<std::vector<Int>> out;
    std::vector<Int> c(G.invariant_factors.size(), Int(0));
    for (;;) {
        out.push_back(c);
        std::size_t i = c.size();
        while (i > 0) {
            --i;
            c[i] += 1;
            if (c[i] < G.invariant_factors[i]) break;
            c[i] = 0;
            if (i == 0) return out;
        }
        if (c.empty()) return out;
    }
}

IntLattice direct_sum(const IntLattice& a, const IntLattice& b, std::string name) {
    if (name.empty()) name = a.name() + "+" + b.name();
    return IntLattice(std::move(name), block_diag(a.gram(), b.gram()));
}

}  // namespace k3lat
