#include "k3lat/roots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace k3lat {

namespace {

// Q = sum_i d_i (x_i + sum_{j>i} mu(i,j) x_j)^2, exact.
struct Ldl {
    std::vector<Rat> d;
    QMatrix mu;
};

Ldl ldl(const QMatrix& q) {
    const std::size_t n = q.rows();
    Ldl out{std::vector<Rat>(n), QMatrix(n, n)};
    QMatrix a = q;
    for (std::size_t i = 0; i < n; ++i) {
        if (a(i, i) <= 0) throw LatticeError("form is not definite");
        out.d[i] = a(i, i);
        for (std::size_t j = i + 1; j < n; ++j) out.mu(i, j) = a(i, j) / a(i, i);
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = i + 1; k < n; ++k) a(j, k) -= out.mu(i, j) * a(i, k);
    }
    return out;
}

// smallest integer m with m >= x
Int ceil_q(const Rat& x) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

Int floor_q(const Rat& x) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

// integer bounds of {t : (t + c)^2 <= s}, exact
std::pair<Int, Int> window(const Rat& c, const Rat& s) {
    // sqrt(s) <= isqrt(floor s) + 1; then tighten the ends
    Int r = floor_q(s);
    r = sqrt(r) + 1;
    Int lo = ceil_q(-c - Rat(r)), hi = floor_q(-c + Rat(r));
    auto ok = [&](const Int& t) {
        Rat u = Rat(t) + c;
        return u * u <= s;
    };
    while (lo <= hi && !ok(lo)) ++lo;
    while (hi >= lo && !ok(hi)) --hi;
    return {lo, hi};
}

void search(const Ldl& f, std::size_t i, const Rat& rem, IntVec& x, std::vector<IntVec>& out) {
    Rat c = 0;
    for (std::size_t j = i + 1; j < x.size(); ++j) c += f.mu(i, j) * x[j];
    auto [lo, hi] = window(c, rem / f.d[i]);
    for (Int t = lo; t <= hi; ++t) {
        x[i] = t;
        Rat u = Rat(t) + c;
        Rat left = rem - f.d[i] * u * u;
        if (i == 0)
            out.push_back(x);
        else
            search(f, i - 1, left, x, out);
    }
    x[i] = 0;
}

}  // namespace

std::vector<IntVec> short_vectors(const IntLattice& L, const Int& bound) {
    if (L.signature() != Inertia{0, L.rank(), 0}) throw LatticeError("root enumeration needs a negative definite lattice");
    const std::size_t n = L.rank();
    std::vector<IntVec> out;
    if (n == 0) return out;
    // search in an LLL basis, then map back: x = T^T y
    IntMatrix q = Int(-1) * L.gram();
    IntMatrix t = lll_reduce(q);
    Ldl f = ldl(to_q(t * q * t.transpose()));
    IntVec y(n, Int(0));
    std::vector<IntVec> found;
    search(f, n - 1, Rat(bound), y, found);
    IntMatrix tt = t.transpose();
    for (const auto& v : found) {
        if (std::all_of(v.begin(), v.end(), [](const Int& c) { return c == 0; })) continue;
        out.push_back(tt * v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IntVec> enumerate_roots(const IntLattice& L) {
    std::vector<IntVec> out;
    for (auto& v : short_vectors(L, 2))
        if (pairing(L, v, v) == -2) out.push_back(std::move(v));
    return out;
}

IntVec dominant_root(const IntLattice& L) {
    const std::size_t n = L.rank();
    std::vector<IntVec> hits;
    for (const auto& r : enumerate_roots(L)) {
        bool basis = false;
        for (std::size_t j = 0; j < n && !basis; ++j) {
            IntVec e(n, Int(0));
            e[j] = 1;
            IntVec me(n, Int(0));
            me[j] = -1;
            basis = (r == e || r == me);
        }
        if (basis) continue;
        bool dom = true;
        for (std::size_t j = 0; j < n && dom; ++j) {
            Int s = 0;
            for (std::size_t k = 0; k < n; ++k) s += r[k] * L.gram()(k, j);
            dom = s >= 0;
        }
        if (dom) hits.push_back(r);
    }
    if (hits.size() != 1)
        throw LatticeError("expected exactly one dominant root, found " + std::to_string(hits.size()));
    return hits.front();
}

namespace {

using Bits = std::vector<std::uint64_t>;

struct CliqueSearch {
    std::vector<Bits> adj;  // adjacency of the orthogonality graph
    std::vector<std::size_t> best, cur;

    static bool test(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1u; }

    // greedy colouring bound, Tomita style
    void expand(std::vector<std::size_t> cand) {
        std::vector<std::size_t> order, colour;
        std::vector<std::vector<std::size_t>> classes;
        for (std::size_t v : cand) {
            std::size_t k = 0;
            for (; k < classes.size(); ++k) {
                bool clash = false;
                for (std::size_t u : classes[k])
                    if (test(adj[v], u)) {
                        clash = true;
                        break;
                    }
                if (!clash) break;
            }
            if (k == classes.size()) classes.emplace_back();
            classes[k].push_back(v);
        }
        for (std::size_t k = 0; k < classes.size(); ++k)
            for (std::size_t v : classes[k]) {
                order.push_back(v);
                colour.push_back(k + 1);
            }
        for (std::size_t idx = order.size(); idx-- > 0;) {
            if (cur.size() + colour[idx] <= best.size()) return;
            std::size_t v = order[idx];
            cur.push_back(v);
            std::vector<std::size_t> next;
            for (std::size_t j = 0; j < idx; ++j)
                if (test(adj[v], order[j])) next.push_back(order[j]);
            if (next.empty()) {
                if (cur.size() > best.size()) best = cur;
            } else {
                expand(std::move(next));
            }
            cur.pop_back();
        }
    }
};

}  // namespace

std::vector<std::size_t> max_disjoint_roots(const IntLattice& L, const std::vector<IntVec>& roots) {
    const std::size_t n = roots.size();
    if (n == 0) return {};
    const std::size_t words = (n + 63) / 64;
    CliqueSearch cs;
    cs.adj.assign(n, Bits(words, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (pairing(L, roots[i], roots[j]) == 0) {
                cs.adj[i][j / 64] |= std::uint64_t(1) << (j % 64);
                cs.adj[j][i / 64] |= std::uint64_t(1) << (i % 64);
            }
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    cs.expand(all);
    std::sort(cs.best.begin(), cs.best.end());
    return cs.best;
}

Int euler_characteristic(const Int& d_square) {
    if (d_square % 2 != 0) throw LatticeError("D^2 must be even on a K3 surface");
    return d_square / 2 + 2;
}

std::optional<IntVec> effective_decomposition(const IntVec& x, const std::vector<IntVec>& gens) {
    const std::size_t n = x.size(), k = gens.size();
    QMatrix a(n, k);
    for (std::size_t j = 0; j < k; ++j) {
        if (gens[j].size() != n) throw LinalgError("generator has the wrong length");
        for (std::size_t i = 0; i < n; ++i) a(i, j) = gens[j][i];
    }
    if (rank(a) != k) throw LinalgError("generators are not linearly independent");
    auto sol = solve(a, to_q(x));
    if (!sol || !is_integral(*sol)) return std::nullopt;
    IntVec c = to_int(*sol);
    for (const auto& t : c)
        if (t < 0) return std::nullopt;
    return c;
}

bool picard_signature_check(const IntLattice& pic) { return pic.signature() == Inertia{0, pic.rank(), 0}; }

}  // namespace k3lat
