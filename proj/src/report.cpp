#include "k3lat/report.hpp"

#include <cmath>
#include <sstream>

namespace k3lat {

Json to_json(const Int& x) {
    if (mpz_sizeinbase(x.get_mpz_t(), 2) <= 53) return x.get_si();
    return x.get_str();
}

Json to_json(const Rat& q) { return to_string(q); }

Json to_json(const QI& z) {
    if (z.im == 0) return to_string(z.re);
    return Json{{"re", to_string(z.re)}, {"im", to_string(z.im)}};
}

Json to_json(std::complex<long double> z) {
    return Json{{"re", static_cast<double>(z.real())}, {"im", static_cast<double>(z.imag())}};
}

Json to_json(const SymbolicComplex& s) {
    Json j = Json::object();
    for (const auto& [k, c] : s.terms) j[k] = to_json(c);
    return j;
}

Json to_json(const IntVec& v) {
    Json j = Json::array();
    for (const auto& x : v) j.push_back(to_json(x));
    return j;
}

Json to_json(const IntMatrix& m) {
    Json j = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
        j.push_back(row);
    }
    return j;
}

Json to_json(const IntPoly& p) { return to_json(IntVec(p.c.begin(), p.c.end())); }

Json to_json(const Inertia& s) {
    Json j = Json::array({s.n_plus, s.n_minus});
    if (s.n_zero) j.push_back(s.n_zero);
    return j;
}

Json to_json(const BigFloat& x, int digits) {
    std::ostringstream os;
    os.precision(digits);
    os << x;
    return os.str();
}

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw std::invalid_argument("expected a rational, got " + j.dump());
}

bool RunReport::ok() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

Json RunReport::to_json() const {
    Json cs = Json::array();
    for (const auto& c : checks) cs.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return Json{{"command", command},   {"inputs", inputs},         {"outputs", outputs},
                {"checks", cs},          {"ok", ok()},               {"tool_version", tool_version}};
}

RunReport RunReport::from_json(const Json& j) {
    RunReport r;
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs");
    r.outputs = j.at("outputs");
    for (const auto& c : j.at("checks"))
        r.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(), c.at("detail").get<std::string>()});
    if (j.at("tool_version").get<std::string>() != tool_version) throw std::invalid_argument("report from another tool version");
    return r;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace k3lat
