#pragma once

#include "k3lat/diophantine.hpp"
#include "k3lat/period.hpp"

#include <json.hpp>

#include <complex>
#include <string>
#include <vector>

namespace k3lat {

using Json = nlohmann::json;  // std::map objects, so keys come out sorted

inline constexpr const char* tool_version = "0.1.0";

// Integers that fit in 53 bits are numbers, larger ones strings.
Json to_json(const Int& x);
Json to_json(const Rat& q);  // "p/q"
Json to_json(const QI& z);   // "p/q" when real, else {"im","re"}
Json to_json(std::complex<long double> z);
Json to_json(const SymbolicComplex& s);  // {"monomial": coeff}
Json to_json(const IntVec& v);
Json to_json(const IntMatrix& m);
Json to_json(const IntPoly& p);  // coefficients low -> high
Json to_json(const Inertia& s);  // [n_plus, n_minus], plus n_zero when nonzero
// decimal string with the given number of significant digits
Json to_json(const BigFloat& x, int digits = 20);

Rat rat_from_json(const Json& j);

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct RunReport {
    std::string command;
    Json inputs = Json::object();
    Json outputs = Json::object();
    std::vector<Check> checks;

    bool ok() const;
    Json to_json() const;
    static RunReport from_json(const Json& j);
};

std::string dump(const Json& j);  // two-space indent, trailing newline

}  // namespace k3lat
