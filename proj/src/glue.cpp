#include "k3lat/glue.hpp"

#include "k3lat/catalog.hpp"

namespace k3lat {

namespace {

Int class_order(const QVec& x) {
    Int l = 1;
    for (const auto& v : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    return l;
}

QVec combine(const std::vector<QVec>& vs, const std::vector<Int>& c, std::size_t n) {
    QVec x(n, Rat(0));
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (c[i] == 0) continue;
        for (std::size_t k = 0; k < n; ++k) x[k] += Rat(c[i]) * vs[i][k];
    }
    return x;
}

std::string coords_str(const std::vector<Int>& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + c[i].get_str();
    return s + ")";
}

}  // namespace

GlueReport validate_glue(const GlueSpec& spec) {
    GlueReport rep;
    rep.G1 = discriminant_group(spec.L1);
    rep.G2 = discriminant_group(spec.L2);
    const std::size_t n1 = spec.L1.rank(), n2 = spec.L2.rank();
    if (spec.sources.size() != spec.images.size()) throw GlueError("glue spec needs one image per source");

    auto add = [&](GlueViolation v) {
        for (const auto& o : rep.violations)
            if (o.kind == v.kind) return;
        rep.violations.push_back(std::move(v));
    };

    std::vector<Int> orders;
    for (std::size_t i = 0; i < spec.sources.size(); ++i) {
        if (spec.sources[i].size() != n1 || !in_dual(spec.L1, spec.sources[i]))
            add({"not_in_dual", {}, 0, 0, "source " + std::to_string(i) + " is not in the dual of L1"});
        if (spec.images[i].size() != n2 || !in_dual(spec.L2, spec.images[i]))
            add({"not_in_dual", {}, 0, 0, "image " + std::to_string(i) + " is not in the dual of L2"});
        orders.push_back(class_order(spec.sources[i]));
    }
    if (!rep.violations.empty()) return rep;

    std::map<std::vector<Int>, std::vector<Int>> inverse;
    std::vector<Int> c(spec.sources.size(), Int(0));
    bool done = false;
    while (!done) {
        QVec x = combine(spec.sources, c, n1);
        QVec y = combine(spec.images, c, n2);
        auto k1 = disc_coords(spec.L1, rep.G1, x);
        auto k2 = disc_coords(spec.L2, rep.G2, y);
        Rat q1 = disc_q(spec.L1, x), q2 = disc_q(spec.L2, y);
        ++rep.elements_checked;
        if (frac(q1 + q2) != 0) add({"q_condition", c, q1, q2, "q1 + q2 = " + to_string(frac(q1 + q2)) + " mod 1"});
        auto it = rep.table.find(k1);
        if (it == rep.table.end()) {
            rep.table.emplace(k1, k2);
            auto [jt, fresh] = inverse.emplace(k2, k1);
            if (!fresh && jt->second != k1)
                add({"not_injective", c, q1, q2,
                     "classes " + coords_str(jt->second) + " and " + coords_str(k1) + " have the same image"});
        } else if (it->second != k2) {
            add({"not_well_defined", c, q1, q2, "class " + coords_str(k1) + " has two images"});
        }
        std::size_t i = c.size();
        done = true;
        while (i > 0) {
            --i;
            c[i] += 1;
            if (c[i] < orders[i]) {
                done = false;
                break;
            }
            c[i] = 0;
        }
    }
    if (rep.table.size() != rep.G1.order)
        add({"not_generating", {}, 0, 0,
             "sources generate " + std::to_string(rep.table.size()) + " of " + rep.G1.order.get_str() + " classes"});
    if (inverse.size() != rep.G2.order)
        add({"not_surjective", {}, 0, 0,
             "image has " + std::to_string(inverse.size()) + " of " + rep.G2.order.get_str() + " classes"});

    rep.ok = rep.violations.empty();
    if (rep.ok) {
        const std::size_t k1 = rep.G1.generators.size(), k2 = rep.G2.generators.size();
        rep.phi = IntMatrix(k2, k1);
        for (std::size_t j = 0; j < k1; ++j) {
            std::vector<Int> e(k1, Int(0));
            e[j] = 1;
            const auto& img = rep.table.at(e);
            for (std::size_t i = 0; i < k2; ++i) rep.phi(i, j) = img[i];
        }
    }
    return rep;
}

GluedLattice glue(const GlueSpec& spec) {
    GlueReport rep = validate_glue(spec);
    if (!rep.ok) throw GlueError("invalid glue: " + rep.violations.front().kind + " " + rep.violations.front().detail);
    const std::size_t n1 = spec.L1.rank(), n2 = spec.L2.rank(), n = n1 + n2;

    std::vector<QVec> gens;
    for (std::size_t i = 0; i < n; ++i) {
        QVec e(n, Rat(0));
        e[i] = 1;
        gens.push_back(e);
    }
    for (std::size_t i = 0; i < spec.sources.size(); ++i) {
        QVec g(spec.sources[i]);
        g.insert(g.end(), spec.images[i].begin(), spec.images[i].end());
        gens.push_back(g);
    }
    Int d = 1;
    for (const auto& g : gens)
        for (const auto& v : g) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.get_den_mpz_t());
    IntMatrix scaled(gens.size(), n);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t k = 0; k < n; ++k) scaled(i, k) = Rat(gens[i][k] * d).get_num();
    HermiteForm hf = hermite_normal_form(scaled);

    GluedLattice out;
    out.r1 = n1;
    out.r2 = n2;
    out.basis = QMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) out.basis(i, k) = qq(hf.H(i, k), d);
    QMatrix amb = to_q(block_diag(spec.L1.gram(), spec.L2.gram()));
    QMatrix g = out.basis * amb * out.basis.transpose();
    if (!is_integral(g)) throw GlueError("glued form is not integral");
    out.lattice = IntLattice(spec.L1.name() + "#" + spec.L2.name(), to_int(g));
    return out;
}

Int direct_sum_index(const GluedLattice& g) {
    // columns: the unit vectors of L1 + L2 in glued coordinates
    IntMatrix inc = to_int(inverse(g.basis.transpose()));
    Int d = 1;
    for (const auto& f : smith_normal_form(inc).diagonal()) d *= f;
    return d;
}

IntLattice extend_direct_sum(const IntLattice& L, const IntLattice& M) { return direct_sum(L, M); }

IntMatrix lift_isometry(const GlueSpec& spec, const GluedLattice& glued, const IntMatrix& f1, const IntMatrix& f2) {
    auto isom = [](const IntLattice& L, const IntMatrix& f) {
        return f.square() && f.rows() == L.rank() && f.transpose() * L.gram() * f == L.gram();
    };
    if (!isom(spec.L1, f1)) throw GlueError("f1 is not an isometry of L1");
    if (!isom(spec.L2, f2)) throw GlueError("f2 is not an isometry of L2");
    GlueReport rep = validate_glue(spec);
    if (!rep.ok) throw GlueError("invalid glue spec");
    QMatrix f1q = to_q(f1), f2q = to_q(f2);
    for (const auto& [k1, k2] : rep.table) {
        QVec x = disc_element(rep.G1, k1);
        QVec y = disc_element(rep.G2, k2);
        auto lhs = rep.table.at(disc_coords(spec.L1, rep.G1, f1q * x));
        auto rhs = disc_coords(spec.L2, rep.G2, f2q * y);
        if (lhs != rhs)
            throw GlueError("f1 and f2 are incompatible with phi at class " + coords_str(k1) + ": phi(f1 x) = " +
                            coords_str(lhs) + ", f2(phi x) = " + coords_str(rhs));
    }
    QMatrix bt = glued.basis.transpose();
    QMatrix m = inverse(bt) * to_q(block_diag(f1, f2)) * bt;
    if (!is_integral(m)) throw GlueError("lifted map is not integral on the glued lattice");
    return to_int(m);
}

GlueSpec kummer_glue_spec() {
    KummerLattice K = kummer_lattice();
    TorusLattice T = torus_image_lattice();
    GlueSpec s{K.lat.lattice, T.lat.lattice, {}, {}};
    for (auto [i, j] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}) {
        s.sources.push_back(K.E_ij(i, j));
        s.images.push_back(T.V_ij(i, j));
    }
    return s;
}

GlueSpec mcmullen_glue_spec() {
    return {mcmullen_L1(), mcmullen_L2(), {mcmullen_u1(), mcmullen_u2()}, {mcmullen_v1(), mcmullen_v2()}};
}

}  // namespace k3lat
