// k3lat: command line front end. Every command emits a RunReport as JSON.
#include "k3lat/commands.hpp"
#include "k3lat/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace k3lat;

namespace {

constexpr int exit_ok = 0, exit_check = 1, exit_usage = 2;

struct Globals : CommandOptions {
    std::string out;
};

// flag beats environment beats default
unsigned precision_from_env(unsigned fallback) {
    const char* env = std::getenv("K3LAT_PRECISION_BITS");
    if (!env || !*env) return fallback;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 32 || v > 65536) throw CLI::ValidationError("K3LAT_PRECISION_BITS", "expected an integer in [32, 65536]");
    return static_cast<unsigned>(v);
}

void print_table(const RunReport& r, std::ostream& os) {
    std::size_t passed = 0;
    for (const auto& c : r.checks) {
        os << (c.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(26) << c.name << std::right << std::fixed
           << std::setprecision(2) << std::setw(7) << c.seconds << "s  " << c.detail << "\n";
        passed += c.pass ? 1 : 0;
    }
    os << passed << "/" << r.checks.size() << " criteria passed\n";
}

int emit(const Globals& g, const RunReport& r) {
    std::string text = dump(r.to_json());
    if (g.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(g.out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + g.out);
        f << text;
    }
    return r.ok() ? exit_ok : exit_check;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k3lat: lattices, periods and Diophantine checks for K3 constructions", "k3lat"};
    app.set_version_flag("--version", tool_version);
    Globals g;
    unsigned flag_bits = 0;
    app.add_option("--out", g.out, "write the JSON report to this file");
    app.add_option("--precision-bits", flag_bits, "working precision (overrides K3LAT_PRECISION_BITS)")->check(CLI::Range(32u, 65536u));
    app.add_option("--tol", g.tol, "numeric tolerance")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "seed for randomized checks");
    app.require_subcommand(1);

    auto* lattice = app.add_subcommand("lattice", "lattice catalog and gluing");
    lattice->require_subcommand(1);
    std::string lname, lgram, gluing;
    auto* info = lattice->add_subcommand("info", "invariants of a catalog lattice");
    info->add_option("name", lname, "catalog name")->check(CLI::IsMember(catalog_names()));
    info->add_option("--gram", lgram, "JSON Gram matrix instead of a catalog name");
    auto* gl = lattice->add_subcommand("glue", "validate and perform a gluing");
    gl->add_option("gluing", gluing, "kummer or mcmullen")->required()->check(CLI::IsMember({"kummer", "mcmullen"}));

    auto* cox = app.add_subcommand("coxeter", "Coxeter element and its characteristic polynomial");
    std::string cname, cgram, corder;
    cox->add_option("name", cname, "catalog name")->check(CLI::IsMember(catalog_names()));
    cox->add_option("--gram", cgram, "JSON Gram matrix");
    cox->add_option("--order", corder, "comma separated 1-based node order");

    auto* roots = app.add_subcommand("roots", "(-2)-vectors of a negative definite lattice");
    std::string rname, rgram;
    bool rlist = false, rdisjoint = false;
    roots->add_option("name", rname, "catalog name")->check(CLI::IsMember(catalog_names()));
    roots->add_option("--gram", rgram, "JSON Gram matrix");
    roots->add_flag("--list", rlist, "include every root");
    roots->add_flag("--max-disjoint", rdisjoint, "largest orthogonal set of basis roots");

    auto* period = app.add_subcommand("period", "the rho = 17 period and its checks");
    double xr = 0, xi = 2, lambda = 0;
    std::string pp = "0", pq = "mu";
    bool pic = false;
    period->add_option("--xr", xr, "Re x");
    period->add_option("--xi", xi, "Im x");
    period->add_option("--lambda", lambda, "Lambda");
    period->add_option("--p", pp, "p (rational, mu or mu2)");
    period->add_option("--q", pq, "q (rational, mu or mu2)");
    period->add_flag("--picard", pic, "compute the Picard lattice");

    auto* dioph = app.add_subcommand("dioph", "Diophantine pairs");
    dioph->require_subcommand(1);
    auto* check = dioph->add_subcommand("check", "check a pair (p, q)");
    std::string dp, dq, minpoly, interval;
    long nmax = 10000;
    check->add_option("--p", dp, "expression")->required();
    check->add_option("--q", dq, "expression")->required();
    check->add_option("--nmax", nmax, "largest n")->check(CLI::Range(16L, 100000000L));
    auto* mp_opt = check->add_option("--minpoly", minpoly, "integer coefficients low to high, e.g. 2,0,0,1");
    check->add_option("--interval", interval, "isolating interval lo,hi")->needs(mp_opt);
    mp_opt->needs(check->get_option("--interval"));

    auto* salem = app.add_subcommand("salem", "Salem roots and period quotients");
    std::string scase;
    long sa = 0;
    salem->add_option("case", scase, "min-entropy or kummer")->required()->check(CLI::IsMember({"min-entropy", "kummer"}));
    salem->add_option("--a", sa, "parameter of the Kummer automorphism")->check(CLI::NonNegativeNumber);

    auto* maj = app.add_subcommand("majorant", "majorant series and radius estimate");
    MajorantArgs ma;
    maj->add_option("--equation", ma.equation)->check(CLI::IsMember({"ueda", "arnold-z", "b-hat"}));
    maj->add_option("--p", ma.p, "expression");
    maj->add_option("--q", ma.q, "expression")->required();
    maj->add_option("--K", ma.K);
    maj->add_option("--M", ma.M);
    maj->add_option("--Q", ma.Q);
    maj->add_option("--terms", ma.terms)->check(CLI::Range(1, 2000));
    maj->add_option("--format", ma.format)->check(CLI::IsMember({"json", "csv"}));

    auto* verify = app.add_subcommand("verify-paper", "run every acceptance criterion");
    std::vector<std::string> faults;
    bool vjson = false;
    verify->add_option("--fault", faults, "inject a fault")->check(CLI::IsMember(known_faults()));
    verify->add_flag("--json", vjson, "print the JSON report instead of the table");

    if (argc <= 1) {
        std::cerr << app.help();
        return exit_usage;
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        g.precision_bits = flag_bits ? flag_bits : precision_from_env(200);
        PrecisionGuard guard(g.precision_bits);
        if (*info) {
            if (lname.empty() == lgram.empty()) throw std::invalid_argument("give exactly one of a name or --gram");
            return emit(g, cmd_lattice_info(lname, lgram));
        }
        if (*gl) return emit(g, cmd_lattice_glue(gluing));
        if (*cox) return emit(g, cmd_coxeter(cname, cgram, corder));
        if (*roots) return emit(g, cmd_roots(rname, rgram, rlist, rdisjoint));
        if (*period) return emit(g, cmd_period(xr, xi, lambda, pp, pq, pic));
        if (*check) return emit(g, cmd_dioph(g, dp, dq, nmax, minpoly, interval));
        if (*salem) return emit(g, cmd_salem(scase, sa));
        if (*maj) {
            RunReport r = cmd_majorant(g, ma);
            if (ma.format == "csv") {
                std::ostringstream os;
                os << "n,A_n,d_n\n";
                const Json& c = r.outputs.value("coeffs", Json::array());
                for (std::size_t n = 0; n < c.size(); ++n)
                    os << n + 1 << "," << c[n].get<std::string>() << "," << r.outputs["d_seq"][n].get<double>() << "\n";
                if (g.out.empty())
                    std::cout << os.str();
                else
                    std::ofstream(g.out, std::ios::binary) << os.str();
                return r.ok() ? exit_ok : exit_check;
            }
            return emit(g, r);
        }
        if (*verify) {
            VerifyOptions opt;
            opt.precision_bits = g.precision_bits;
            opt.seed = g.seed;
            opt.tol = g.tol;
            opt.faults.insert(faults.begin(), faults.end());
            RunReport r = verify_paper(opt);
            if (vjson) return emit(g, r);
            print_table(r, std::cout);
            if (!g.out.empty()) std::ofstream(g.out, std::ios::binary) << dump(r.to_json());
            return r.ok() ? exit_ok : exit_check;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "k3lat: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "k3lat: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "k3lat: " << e.what() << "\n";
        return exit_check;
    }
    std::cerr << app.help();
    return exit_usage;
}
