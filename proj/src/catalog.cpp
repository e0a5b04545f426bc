#include "k3lat/catalog.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>

namespace k3lat {

std::size_t NamedBasis::index(const std::string& label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw LatticeError("unknown basis label '" + label + "'");
    return static_cast<std::size_t>(it - labels.begin());
}

IntMatrix dynkin_gram(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    IntMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) g(i, i) = -2;
    for (auto [a, b] : edges) {
        if (a >= n || b >= n || a == b) throw LatticeError("bad Dynkin edge");
        g(a, b) = 1;
        g(b, a) = 1;
    }
    return g;
}

IntLattice hyperbolic_U() { return IntLattice("U", IntMatrix{{0, 1}, {1, -2}}); }

IntLattice e8_minus() {
    // C12 C23 C34 C45 C56 C67 C78 C678
    return IntLattice("e8-minus", dynkin_gram(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 7}}));
}

IntLattice e8_minus_d() {
    return IntLattice("e8-minus-d", dynkin_gram(8, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {0, 3}}));
}

IntLattice a2() { return IntLattice("a2", dynkin_gram(2, {{0, 1}})); }

IntLattice e10() {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i + 1 < 9; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(2, 9);
    return IntLattice("e10", dynkin_gram(10, edges));
}

IntLattice mcmullen_L1() {
    return IntLattice("mcmullen-l1", IntMatrix{
                                         {-2, -2, -2, 1, 2, 0, 0, 0, 0, 2},
                                         {-2, -2, -1, 2, 0, 0, 0, 0, 0, 2},
                                         {-2, -1, -2, 1, 2, 0, 0, 0, 0, 0},
                                         {1, 2, 1, -2, -1, 2, 0, 0, 0, -2},
                                         {2, 0, 2, -1, -2, -1, 2, 0, 0, 0},
                                         {0, 0, 0, 2, -1, -2, -1, 2, 0, 0},
                                         {0, 0, 0, 0, 2, -1, -2, -1, 2, 0},
                                         {0, 0, 0, 0, 0, 2, -1, -2, -1, 2},
                                         {0, 0, 0, 0, 0, 0, 2, -1, -2, -1},
                                         {2, 2, 0, -2, 0, 0, 0, 2, -1, -2},
                                     });
}

IntLattice mcmullen_L2() { return direct_sum(a2(), a2(), "mcmullen-l2"); }

NamedBasis e8_labels(const std::string& prefix) {
    NamedBasis b;
    for (const char* s : {"12", "23", "34", "45", "56", "67", "78", "678"}) b.labels.push_back(prefix + s);
    return b;
}

LabeledLattice k3_lattice() {
    IntMatrix U = hyperbolic_U().gram();
    IntMatrix E = e8_minus().gram();
    IntMatrix g = block_diag(block_diag(block_diag(U, U), block_diag(U, E)), E);
    NamedBasis b{{"A_ab", "B_g", "A_bg", "B_a", "A_ga", "B_b"}};
    for (auto& l : e8_labels("C+").labels) b.labels.push_back(l);
    for (auto& l : e8_labels("C-").labels) b.labels.push_back(l);
    return {IntLattice("k3", g), b};
}

std::size_t kummer_node_index(const std::vector<int>& t) {
    if (t.size() != 4) throw LatticeError("node index needs 4 bits");
    std::size_t idx = 0;
    for (int v : t) idx = idx * 2 + static_cast<std::size_t>(v & 1);
    return idx;
}

namespace {

std::array<int, 4> node_bits(std::size_t idx) {
    return {int((idx >> 3) & 1), int((idx >> 2) & 1), int((idx >> 1) & 1), int(idx & 1)};
}

}  // namespace

KummerLattice kummer_lattice() {
    // generators scaled by 2: 2E_t and sum_{t in W} E_t over the 30 affine hyperplanes
    std::vector<IntVec> gens;
    for (std::size_t t = 0; t < 16; ++t) {
        IntVec v(16, Int(0));
        v[t] = 2;
        gens.push_back(v);
    }
    for (int a = 1; a < 16; ++a)
        for (int c = 0; c < 2; ++c) {
            IntVec v(16, Int(0));
            for (std::size_t t = 0; t < 16; ++t) {
                int s = __builtin_popcount(static_cast<unsigned>(a) & static_cast<unsigned>(t)) & 1;
                if (s == c) v[t] = 1;
            }
            gens.push_back(v);
        }
    HermiteForm hf = hermite_normal_form(IntMatrix::from_rows(gens, 16));
    if (hf.rank != 16) throw LatticeError("Kummer generators do not have full rank");

    KummerLattice K;
    K.basis_ambient = QMatrix(16, 16);
    for (std::size_t i = 0; i < 16; ++i)
        for (std::size_t j = 0; j < 16; ++j) K.basis_ambient(i, j) = qq(hf.H(i, j), 2);
    QMatrix gram = Rat(-2) * (K.basis_ambient * K.basis_ambient.transpose());
    K.to_coords_map = inverse(K.basis_ambient.transpose());
    NamedBasis basis;
    for (std::size_t i = 0; i < 16; ++i) basis.labels.push_back("k" + std::to_string(i + 1));
    K.lat = {IntLattice("kummer", to_int(gram)), basis};
    for (std::size_t t = 0; t < 16; ++t) {
        auto b = node_bits(t);
        K.ambient.labels.push_back("E_" + std::to_string(b[0]) + std::to_string(b[1]) + std::to_string(b[2]) +
                                   std::to_string(b[3]));
    }
    return K;
}

QVec KummerLattice::coords(const QVec& ambient_vec) const { return to_coords_map * ambient_vec; }

QVec KummerLattice::E_ij(int i, int j) const {
    if (i < 1 || j > 4 || i >= j) throw LatticeError("E_ij needs 1 <= i < j <= 4");
    QVec x(16, Rat(0));
    for (int ci = 0; ci < 2; ++ci)
        for (int cj = 0; cj < 2; ++cj) {
            std::vector<int> t(4, 0);
            t[i - 1] = ci;
            t[j - 1] = cj;
            x[kummer_node_index(t)] = qq(1, 2);
        }
    return coords(x);
}

IntMatrix KummerLattice::node_permutation_action(const IntMatrix& F4) const {
    if (F4.rows() != 4 || F4.cols() != 4) throw LatticeError("node action needs a 4x4 matrix");
    QMatrix P(16, 16);
    for (std::size_t t = 0; t < 16; ++t) {
        auto b = node_bits(t);
        std::vector<int> img(4);
        for (int r = 0; r < 4; ++r) {
            Int s = 0;
            for (int c = 0; c < 4; ++c) s += F4(r, c) * b[c];
            img[r] = static_cast<int>(mpz_fdiv_ui(s.get_mpz_t(), 2));
        }
        P(kummer_node_index(img), t) = 1;
    }
    if (abs(determinant(P)) != 1) throw LatticeError("matrix is not invertible mod 2");
    return to_int(to_coords_map * P * basis_ambient.transpose());
}

std::size_t TorusLattice::pair_index(int i, int j) {
    static const std::map<std::pair<int, int>, std::size_t> idx{
        {{1, 2}, 0}, {{1, 3}, 1}, {{1, 4}, 2}, {{2, 3}, 3}, {{2, 4}, 4}, {{3, 4}, 5}};
    auto it = idx.find({i, j});
    if (it == idx.end()) throw LatticeError("V_ij needs 1 <= i < j <= 4");
    return it->second;
}

QVec TorusLattice::V_ij(int i, int j) const {
    QVec v(6, Rat(0));
    v[pair_index(i, j)] = qq(1, 2);
    return v;
}

namespace {

int perm_sign(const std::array<int, 4>& p) {
    int inv = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            if (p[a] > p[b]) ++inv;
    return inv % 2 ? -1 : 1;
}

}  // namespace

TorusLattice torus_image_lattice() {
    const std::array<std::pair<int, int>, 6> pairs{{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
    IntMatrix g(6, 6);
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            auto [i, j] = pairs[a];
            auto [k, l] = pairs[b];
            if (i == k || i == l || j == k || j == l) continue;
            // (V_ij.V_kl) = sgn(ijkl)/2, so (2V_ij.2V_kl) = 2 sgn(ijkl)
            g(a, b) = 2 * perm_sign({i, j, k, l});
        }
    NamedBasis basis{{"2V12", "2V13", "2V14", "2V23", "2V24", "2V34"}};
    return {{IntLattice("torus", g), basis}};
}

QVec mcmullen_u1() {
    QVec u(10, Rat(0));
    for (int k : {1, 3, 4, 5, 8, 9}) u[k - 1] = qq(1, 3);
    u[0] = qq(2, 3);
    return u;
}

QVec mcmullen_u2() {
    QVec u(10, Rat(0));
    for (int k : {1, 5, 6, 9, 10}) u[k - 1] = qq(1, 3);
    u[1] = qq(2, 3);
    u[2] = qq(2, 3);
    return u;
}

QVec mcmullen_v1() { return {qq(1, 3), qq(2, 3), Rat(0), Rat(0)}; }

// f2(v1); the printed (1/3)(e21 + e22) is not in the dual of A2.
QVec mcmullen_v2() { return {Rat(0), Rat(0), qq(1, 3), qq(2, 3)}; }

IntMatrix mcmullen_f2() { return IntMatrix{{0, 0, 0, 1}, {0, 0, 1, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}}; }

IntMatrix kummer_torus_matrix(long a) {
    return IntMatrix{{0, 0, -1, 0}, {1, 0, 0, 0}, {0, 1, 1, a + 1}, {0, 0, -1, -1}};
}

LabeledLattice picard_rho17() {
    IntLattice d(IntLattice("a1", IntMatrix{{-2}}));
    IntLattice e = e8_minus_d();
    NamedBasis b{{"D_g"}};
    for (const char* s : {"+", "-"})
        for (int j = 0; j < 8; ++j) b.labels.push_back("D" + std::to_string(j) + s);
    return {direct_sum(direct_sum(d, e), e, "picard-rho17"), b};
}

namespace {

NamedBasis numbered(const std::string& prefix, std::size_t n) {
    NamedBasis b;
    for (std::size_t i = 1; i <= n; ++i) b.labels.push_back(prefix + std::to_string(i));
    return b;
}

NamedBasis d_labels() {
    NamedBasis b;
    for (int j = 0; j < 8; ++j) b.labels.push_back("D" + std::to_string(j));
    return b;
}

}  // namespace

std::vector<std::string> catalog_names() {
    return {"U",     "a2",          "e10",         "e8-minus", "e8-minus-d",   "k3",
            "kummer", "mcmullen-l1", "mcmullen-l2", "torus",    "picard-rho17"};
}

LabeledLattice catalog_lattice(const std::string& name) {
    static const std::map<std::string, std::function<LabeledLattice()>> table{
        {"U", [] { return LabeledLattice{hyperbolic_U(), NamedBasis{{"A", "B"}}}; }},
        {"a2", [] { return LabeledLattice{a2(), numbered("e", 2)}; }},
        {"e10", [] { return LabeledLattice{e10(), numbered("e", 10)}; }},
        {"e8-minus", [] { return LabeledLattice{e8_minus(), e8_labels("C")}; }},
        {"e8-minus-d", [] { return LabeledLattice{e8_minus_d(), d_labels()}; }},
        {"k3", [] { return k3_lattice(); }},
        {"kummer", [] { return kummer_lattice().lat; }},
        {"mcmullen-l1", [] { return LabeledLattice{mcmullen_L1(), numbered("e", 10)}; }},
        {"mcmullen-l2", [] { return LabeledLattice{mcmullen_L2(), NamedBasis{{"e11", "e12", "e21", "e22"}}}; }},
        {"torus", [] { return torus_image_lattice().lat; }},
        {"picard-rho17", [] { return picard_rho17(); }},
    };
    auto it = table.find(name);
    if (it == table.end()) throw LatticeError("unknown catalog lattice '" + name + "'");
    return it->second();
}

}  // namespace k3lat
