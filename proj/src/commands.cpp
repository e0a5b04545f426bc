#include "k3lat/commands.hpp"

#include "k3lat/catalog.hpp"
#include "k3lat/glue.hpp"
#include "k3lat/majorant.hpp"
#include "k3lat/roots.hpp"
#include "k3lat/spectral.hpp"

#include <cmath>

namespace k3lat {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

IntMatrix gram_from_json(const std::string& text) {
    Json j = Json::parse(text);
    if (!j.is_array() || j.empty()) throw std::invalid_argument("gram must be a nonempty array of rows");
    IntMatrix g(j.size(), j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].size() != j.size()) throw std::invalid_argument("gram must be square");
        for (std::size_t k = 0; k < j.size(); ++k) {
            Rat q = rat_from_json(j[i][k]);
            if (q.get_den() != 1) throw std::invalid_argument("gram entries must be integers");
            g(i, k) = q.get_num();
        }
    }
    return g;
}

LabeledLattice lattice_arg(const std::string& name, const std::string& gram) {
    if (!gram.empty()) {
        IntMatrix g = gram_from_json(gram);
        NamedBasis b;
        for (std::size_t i = 0; i < g.rows(); ++i) b.labels.push_back("e" + std::to_string(i + 1));
        return {IntLattice("custom", g), b};
    }
    if (name.empty()) throw std::invalid_argument("give a lattice name or --gram");
    return catalog_lattice(name);
}

Json labels_json(const NamedBasis& b) {
    Json j = Json::array();
    for (const auto& l : b.labels) j.push_back(l);
    return j;
}

}  // namespace

RunReport cmd_lattice_info(const std::string& name, const std::string& gram) {
    LabeledLattice L = lattice_arg(name, gram);
    const IntLattice& lat = L.lattice;
    DiscriminantGroup G = discriminant_group(lat);
    RunReport r;
    r.command = "lattice info";
    r.inputs = Json{{"name", name.empty() ? "custom" : name}};
    if (!gram.empty()) r.inputs["gram"] = to_json(lat.gram());
    Json inv = Json::array();
    for (const auto& d : G.invariant_factors) inv.push_back(to_json(d));
    r.outputs = Json{{"rank", lat.rank()},
                     {"det", to_json(lat.det())},
                     {"signature", to_json(lat.signature())},
                     {"even", lat.even()},
                     {"unimodular", is_unimodular(lat)},
                     {"discriminant", Json{{"invariant_factors", inv}, {"order", to_json(G.order)}}},
                     {"labels", labels_json(L.basis)},
                     {"gram", to_json(lat.gram())}};
    return r;
}

RunReport cmd_lattice_glue(const std::string& which) {
    GlueSpec spec;
    if (which == "kummer")
        spec = kummer_glue_spec();
    else if (which == "mcmullen")
        spec = mcmullen_glue_spec();
    else
        throw std::invalid_argument("unknown gluing '" + which + "' (kummer, mcmullen)");
    RunReport r;
    r.command = "lattice glue";
    r.inputs = Json{{"gluing", which}};
    GlueReport rep = validate_glue(spec);
    Json viol = Json::array();
    for (const auto& v : rep.violations) {
        Json c = Json::array();
        for (const auto& x : v.coeffs) c.push_back(to_json(x));
        viol.push_back(Json{{"kind", v.kind}, {"element", c}, {"q1", to_json(v.q1)}, {"q2", to_json(v.q2)}, {"detail", v.detail}});
    }
    r.outputs = Json{{"elements_checked", rep.elements_checked}, {"valid", rep.ok}, {"violations", viol}};
    r.checks.push_back({"glue_map_valid", rep.ok, rep.ok ? "q-anti-isometry on every element" : "see violations"});
    if (rep.ok) {
        GluedLattice g = glue(spec);
        const IntLattice& L = g.lattice;
        r.outputs["glued"] = Json{{"rank", L.rank()},          {"det", to_json(L.det())},
                                  {"signature", to_json(L.signature())}, {"even", L.even()},
                                  {"index", to_json(direct_sum_index(g))}, {"gram", to_json(L.gram())}};
        bool uni = L.even() && is_unimodular(L);
        r.checks.push_back({"glued_even_unimodular", uni, ""});
        if (which == "mcmullen") {
            IntLattice full = extend_direct_sum(L, e8_minus());
            r.outputs["with_e8"] = Json{{"signature", to_json(full.signature())}, {"det", to_json(full.det())}};
        }
    }
    return r;
}

static std::vector<std::size_t> parse_order(const std::string& s, std::size_t rank) {
    std::vector<std::size_t> order;
    if (s.empty()) return order;
    for (const auto& tok : split(s, ',')) {
        long v = std::stol(tok);
        if (v < 1 || static_cast<std::size_t>(v) > rank) throw std::invalid_argument("order entries are 1-based node numbers");
        order.push_back(static_cast<std::size_t>(v - 1));
    }
    return order;
}

RunReport cmd_coxeter(const std::string& name, const std::string& gram, const std::string& order_s) {
    LabeledLattice L = lattice_arg(name, gram);
    auto order = parse_order(order_s, L.lattice.rank());
    IntMatrix c = coxeter_element(L.lattice, order);
    IntPoly p = char_poly(c);
    RunReport r;
    r.command = "coxeter";
    r.inputs = Json{{"name", name.empty() ? "custom" : name}, {"order", order_s.empty() ? "1..n" : order_s}};
    auto roots = polynomial_roots(p);
    long double radius = 0;
    for (const auto& z : roots) radius = std::max(radius, std::abs(z));
    auto ord = order_of(c, 1000);
    r.outputs = Json{{"char_poly", to_json(p)},
                     {"char_poly_text", p.to_string()},
                     {"reciprocal_sign", reciprocal_sign(p)},
                     {"unit_circle_roots", unit_circle_roots(p).size()},
                     {"spectral_radius", static_cast<double>(radius)},
                     {"order", ord ? Json(*ord) : Json("infinite or > 1000")},
                     {"matrix", to_json(c)}};
    r.checks.push_back({"isometry", is_isometry(L.lattice, c), ""});
    return r;
}

RunReport cmd_roots(const std::string& name, const std::string& gram, bool list, bool disjoint) {
    LabeledLattice L = lattice_arg(name, gram);
    RunReport r;
    r.command = "roots";
    r.inputs = Json{{"name", name.empty() ? "custom" : name}, {"list", list}, {"max_disjoint", disjoint}};
    auto roots = enumerate_roots(L.lattice);
    r.outputs["count"] = roots.size();
    if (list) {
        Json j = Json::array();
        for (const auto& v : roots) j.push_back(to_json(v));
        r.outputs["roots"] = j;
    }
    try {
        r.outputs["dominant_root"] = to_json(dominant_root(L.lattice));
    } catch (const std::exception& e) {
        r.outputs["dominant_root"] = nullptr;
        r.outputs["dominant_root_note"] = e.what();
    }
    if (disjoint) {
        std::vector<IntVec> gens;
        for (std::size_t i = 0; i < L.lattice.rank(); ++i) {
            IntVec e(L.lattice.rank(), Int(0));
            e[i] = 1;
            if (L.lattice.gram()(i, i) == -2) gens.push_back(e);
        }
        auto best = max_disjoint_roots(L.lattice, gens);
        Json w = Json::array();
        for (auto i : best) w.push_back(L.basis.labels.at(i));
        r.outputs["max_disjoint_generators"] = Json{{"size", best.size()}, {"witness", w}};
    }
    return r;
}

static SymbolicComplex symbolic_arg(const std::string& s) {
    if (s == "mu" || s == "mu2") return SymbolicComplex::symbol(s);
    return SymbolicComplex(QI(parse_rational(s)));
}

RunReport cmd_period(double xr, double xi, double lambda, const std::string& p, const std::string& q, bool picard) {
    SymbolTable t = example_symbols(xr, xi);
    PeriodVector s = example_period(t);
    LabeledLattice K = k3_lattice();
    RunReport r;
    r.command = "period";
    r.inputs = Json{{"xr", xr}, {"xi", xi}, {"Lambda", lambda}, {"p", p}, {"q", q}};
    Json coeffs = Json::object();
    for (std::size_t i = 0; i < 22; ++i) coeffs[K.basis.labels[i]] = to_json(s.coeffs[i]);
    r.outputs["period"] = coeffs;
    r.outputs["self_pairing"] = to_json(period_pairing(s, s, false, t));
    SymbolicComplex herm = period_pairing(s, s, true, t);
    r.outputs["hermitian_pairing"] = to_json(herm);
    r.outputs["hermitian_pairing_value"] = static_cast<double>(evaluate(herm, t).real());
    Realizability re = realizability_check(s, symbolic_arg(p), symbolic_arg(q), lambda, t);
    r.outputs["realizability"] = Json{{"verdict", re.verdict}, {"detail", re.detail},
                                      {"self_pairing", static_cast<double>(re.self_pairing_value)}};
    r.checks.push_back({"realizability", re.verdict == "pass", re.verdict + ": " + re.detail});
    if (picard) {
        PicardResult pic = picard_lattice(s, t);
        r.outputs["picard"] = Json{{"rank", pic.rank}, {"degenerate", pic.degenerate}, {"gram", to_json(pic.gram)}};
        if (!pic.degenerate) r.outputs["picard"]["signature"] = to_json(pic.lattice.signature());
    }
    return r;
}

static Json record_json(const DeltaRecord& d) {
    return Json{{"n", d.n}, {"delta", to_json(d.delta)}, {"err", to_json(d.err, 6)},
                {"exponent", std::isfinite(d.exponent) ? Json(d.exponent) : Json("inf")}};
}

RunReport cmd_dioph(const CommandOptions& g, const std::string& p, const std::string& q, long nmax, const std::string& minpoly,
                    const std::string& interval) {
    auto pv = parse_real(p, g.precision_bits), qv = parse_real(q, g.precision_bits);
    std::optional<LiouvilleCertificate> cert;
    if (!minpoly.empty()) {
        std::vector<Int> c;
        for (const auto& tok : split(minpoly, ',')) c.emplace_back(tok, 10);
        auto iv = split(interval, ',');
        if (iv.size() != 2) throw std::invalid_argument("--interval needs lo,hi");
        cert = liouville_certificate(IntPoly(c), parse_rational(iv[0]), parse_rational(iv[1]));
    }
    DiophantineReport rep = check_pair(pv, qv, nmax, cert);
    RunReport r;
    r.command = "dioph check";
    r.inputs = Json{{"p", p}, {"q", q}, {"nmax", nmax}};
    if (!minpoly.empty()) r.inputs["minpoly"] = minpoly, r.inputs["interval"] = interval;
    Json recs = Json::array();
    for (const auto& d : rep.per_n) recs.push_back(record_json(d));
    r.outputs = Json{{"n_max", rep.n_max},           {"per_n", recs},
                     {"fitted_alpha", rep.fitted_alpha}, {"fitted_A", rep.fitted_A},
                     {"verdict", rep.verdict},       {"reason", rep.reason},
                     {"witness", rep.witness ? Json(*rep.witness) : Json(nullptr)},
                     {"precision_bits", g.precision_bits}};
    if (cert) {
        r.outputs["certificate"] = Json{{"A", cert->A}, {"alpha", cert->alpha}, {"source", cert->source}};
        r.checks.push_back({"certificate_bound", *rep.certificate_holds,
                            rep.certificate_violation ? "violated at n=" + std::to_string(*rep.certificate_violation) : "holds for all n"});
    }
    r.checks.push_back({"diophantine", rep.verdict == "pass", rep.verdict + ": " + rep.reason});
    return r;
}

RunReport cmd_salem(const std::string& which, long a) {
    SpectralResult s;
    RunReport r;
    r.command = "salem";
    r.inputs = Json{{"case", which}};
    if (which == "min-entropy") {
        s = min_entropy_periods();
    } else if (which == "kummer") {
        s = kummer_auto_periods(a);
        r.inputs["a"] = a;
    } else {
        throw std::invalid_argument("unknown case '" + which + "' (min-entropy, kummer)");
    }
    Json sigma = Json::array();
    for (const auto& z : s.sigma) sigma.push_back(to_json(z));
    r.outputs = Json{{"poly", to_json(s.poly)},
                     {"poly_text", s.poly.to_string()},
                     {"s", to_json(s.s)},
                     {"selection", s.selection},
                     {"positivity", static_cast<double>(s.positivity)},
                     {"a_alpha", static_cast<double>(s.a_alpha)},
                     {"a_beta", static_cast<double>(s.a_beta)},
                     {"tau", to_json(s.r2)},
                     {"sigma", sigma}};
    if (which == "kummer") {
        r.outputs["a_alpha_closed_form"] = static_cast<double>(s.a_alpha_closed);
        r.outputs["a_beta_closed_form"] = static_cast<double>(s.a_beta_closed);
        r.outputs["wedge_square"] = to_json(wedge_square(kummer_torus_matrix(a)));
    }
    r.checks.push_back({"positivity", s.positivity > 0, ""});
    return r;
}

RunReport cmd_majorant(const CommandOptions& g, const MajorantArgs& a) {
    auto pv = parse_real(a.p, g.precision_bits), qv = parse_real(a.q, g.precision_bits);
    BigFloat K = parse_real(a.K, g.precision_bits).value, M = parse_real(a.M, g.precision_bits).value,
             Q = parse_real(a.Q, g.precision_bits).value;
    auto dd = bundle_distance_seq(pv, qv, static_cast<long>(a.terms) + 1);
    RunReport r;
    r.command = "majorant";
    r.inputs = Json{{"equation", a.equation}, {"p", a.p}, {"q", a.q}, {"K", a.K}, {"M", a.M}, {"terms", a.terms}};
    if (a.equation != "ueda") r.inputs["Q"] = a.Q;
    for (std::size_t n = 0; n < dd.size(); ++n)
        if (dd[n] == 0) {
            r.checks.push_back({"positive_distances", false, "d_" + std::to_string(n + 1) + " = 0: the pair is not Diophantine"});
            return r;
        }
    MajorantSeries ms;
    if (a.equation == "ueda")
        ms = majorant_ueda(to_big(dd), K, M, a.terms);
    else if (a.equation == "arnold-z")
        ms = majorant_arnold_z(to_big(dd), K, M, Q, a.terms);
    else if (a.equation == "b-hat")
        ms = majorant_b_hat(to_big(dd), K, M, Q, a.terms);
    else
        throw std::invalid_argument("unknown equation '" + a.equation + "' (ueda, arnold-z, b-hat)");
    Json coeffs = Json::array(), dj = Json::array();
    for (const auto& c : ms.coeffs) coeffs.push_back(to_json(c));
    for (std::size_t n = 0; n < a.terms; ++n) dj.push_back(dd[n]);
    r.outputs = Json{{"coeffs", coeffs}, {"d_seq", dj}, {"precision_bits", g.precision_bits}, {"equation", to_string(ms.equation)}};
    if (a.terms >= 16) {
        auto e = radius_estimate(ms);
        r.outputs["radius"] = Json{{"estimate", e.radius}, {"log_estimate", e.log_radius}, {"residual", e.residual},
                                   {"window", {e.first, e.last}}};
    }
    r.checks.push_back({"positive_distances", true, ""});
    return r;
}

}  // namespace k3lat
