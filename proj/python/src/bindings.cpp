// Python module _k3lat. Report-producing calls return the exact JSON text the CLI
// prints; the k3lat package parses it.
#include "k3lat/commands.hpp"
#include "k3lat/diophantine.hpp"
#include "k3lat/isometry.hpp"
#include "k3lat/majorant.hpp"
#include "k3lat/verify.hpp"
#include "k3lat/catalog.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace k3lat;

namespace {

CommandOptions options(unsigned bits) {
    CommandOptions o;
    o.precision_bits = bits;
    return o;
}

std::string text(const RunReport& r) { return dump(r.to_json()); }

IntMatrix matrix_arg(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix must be square");
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

}  // namespace

PYBIND11_MODULE(_k3lat, m) {
    m.doc() = "lattice, period and Diophantine computations for K3 constructions";
    m.attr("tool_version") = tool_version;
    py::register_exception<std::invalid_argument>(m, "K3latValueError", PyExc_ValueError);

    m.def("catalog_names", &catalog_names);
    m.def("known_faults", &known_faults);

    m.def("lattice_info", [](const std::string& name, const std::string& gram) { return text(cmd_lattice_info(name, gram)); },
          py::arg("name") = "", py::arg("gram") = "");
    m.def("lattice_glue", [](const std::string& which) { return text(cmd_lattice_glue(which)); }, py::arg("which"));
    m.def("coxeter",
          [](const std::string& name, const std::string& gram, const std::string& order) {
              return text(cmd_coxeter(name, gram, order));
          },
          py::arg("name") = "", py::arg("gram") = "", py::arg("order") = "");
    m.def("roots",
          [](const std::string& name, const std::string& gram, bool list, bool disjoint) {
              return text(cmd_roots(name, gram, list, disjoint));
          },
          py::arg("name") = "", py::arg("gram") = "", py::arg("list") = false, py::arg("max_disjoint") = false);
    m.def("period",
          [](double xr, double xi, double lambda, const std::string& p, const std::string& q, bool picard) {
              return text(cmd_period(xr, xi, lambda, p, q, picard));
          },
          py::arg("xr") = 0.0, py::arg("xi") = 2.0, py::arg("lambda_") = 0.0, py::arg("p") = "0", py::arg("q") = "mu",
          py::arg("picard") = false);
    m.def("dioph_check",
          [](const std::string& p, const std::string& q, long nmax, const std::string& minpoly, const std::string& interval,
             unsigned bits) {
              PrecisionGuard guard(bits);
              return text(cmd_dioph(options(bits), p, q, nmax, minpoly, interval));
          },
          py::arg("p"), py::arg("q"), py::arg("nmax") = 10000, py::arg("minpoly") = "", py::arg("interval") = "",
          py::arg("precision_bits") = 200);
    m.def("salem", [](const std::string& which, long a) { return text(cmd_salem(which, a)); }, py::arg("case"),
          py::arg("a") = 0);
    m.def("majorant",
          [](const std::string& q, const std::string& p, const std::string& equation, const std::string& K,
             const std::string& M, const std::string& Q, std::size_t terms, unsigned bits) {
              PrecisionGuard guard(bits);
              MajorantArgs a;
              a.q = q, a.p = p, a.equation = equation, a.K = K, a.M = M, a.Q = Q, a.terms = terms;
              return text(cmd_majorant(options(bits), a));
          },
          py::arg("q"), py::arg("p") = "0", py::arg("equation") = "ueda", py::arg("K") = "1", py::arg("M") = "1",
          py::arg("Q") = "1", py::arg("terms") = 32, py::arg("precision_bits") = 200);
    m.def("verify_paper",
          [](const std::vector<std::string>& faults, unsigned bits, unsigned seed, double tol) {
              VerifyOptions opt;
              opt.precision_bits = bits, opt.seed = seed, opt.tol = tol;
              opt.faults.insert(faults.begin(), faults.end());
              PrecisionGuard guard(bits);
              py::gil_scoped_release nogil;
              return text(verify_paper(opt));
          },
          py::arg("faults") = std::vector<std::string>{}, py::arg("precision_bits") = 200, py::arg("seed") = 20240601u,
          py::arg("tol") = 1e-6);

    // small exact helpers; big integers come back as decimal strings
    m.def("char_poly",
          [](const std::vector<std::vector<long>>& rows) {
              std::vector<std::string> out;
              for (const auto& c : char_poly(matrix_arg(rows)).c) out.push_back(c.get_str());
              return out;
          },
          py::arg("matrix"), "characteristic polynomial coefficients, low to high");
    m.def("ueda_constant",
          [](const std::string& s, long N) {
              UedaConstants c = ueda_constant(parse_rational(s), N);
              return std::map<std::string, std::string>{{"L1", to_string(c.L1)}, {"L2", to_string(c.L2)},
                                                        {"K1", to_string(c.K1)}, {"K2", to_string(c.K2)},
                                                        {"K", to_string(c.K)}};
          },
          py::arg("s"), py::arg("N"));
}
