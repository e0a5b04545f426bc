#pragma once
// The k3lat subcommands as plain functions, shared by the CLI and the Python module.

#include "k3lat/report.hpp"

#include <string>

namespace k3lat {

struct CommandOptions {
    unsigned precision_bits = 200;
    double tol = 1e-6;
    unsigned seed = 20240601;
};

struct MajorantArgs {
    std::string equation = "ueda", p = "0", q, format = "json";
    std::string K = "1", M = "1", Q = "1";
    std::size_t terms = 32;
};

// name is a catalog name; a nonempty gram (JSON rows) takes precedence
RunReport cmd_lattice_info(const std::string& name, const std::string& gram = "");
RunReport cmd_lattice_glue(const std::string& which);  // kummer | mcmullen
RunReport cmd_coxeter(const std::string& name, const std::string& gram = "", const std::string& order = "");
RunReport cmd_roots(const std::string& name, const std::string& gram = "", bool list = false, bool disjoint = false);
RunReport cmd_period(double xr, double xi, double lambda, const std::string& p, const std::string& q, bool picard);
RunReport cmd_dioph(const CommandOptions& g, const std::string& p, const std::string& q, long nmax,
                    const std::string& minpoly = "", const std::string& interval = "");
RunReport cmd_salem(const std::string& which, long a = 0);
RunReport cmd_majorant(const CommandOptions& g, const MajorantArgs& a);

}  // namespace k3lat
