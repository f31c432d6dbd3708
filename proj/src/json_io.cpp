#include "uclass/json_io.hpp"

#include <cmath>
#include <cstdio>

#include "uclass/errors.hpp"

namespace uclass {

nlohmann::json complex_to_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

Complex complex_from_json(const nlohmann::json &j)
{
    if (j.is_number())
        return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2)
        return {j[0].get<double>(), j[1].get<double>()};
    throw Error(ErrorKind::InvalidConfig, "complex value must be [re, im] or a number");
}

void to_json(nlohmann::json &j, const ComplexSeries &s)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (auto c : s.coeffs())
        coeffs.push_back(complex_to_json(c));
    j = nlohmann::json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

void from_json(const nlohmann::json &j, ComplexSeries &s)
{
    const auto &arr = j.at("coeffs");
    std::vector<Complex> c;
    c.reserve(arr.size());
    for (const auto &x : arr)
        c.push_back(complex_from_json(x));
    const std::size_t order = j.contains("order") ? j.at("order").get<std::size_t>() : (c.empty() ? 0 : c.size() - 1);
    c.resize(order + 1);
    s = ComplexSeries(std::move(c));
}

nlohmann::json generator_to_json(const SchwarzGenerator &g)
{
    nlohmann::json j{{"kind", std::string(to_string(g.kind()))}, {"order", g.order()}};
    switch (g.kind()) {
    case SchwarzKind::ScaledUnimodular:
        j["rho"] = g.rho();
        j["theta"] = g.theta();
        break;
    case SchwarzKind::BlaschkeProduct: {
        j["rho"] = g.rho();
        j["theta"] = g.theta();
        auto zeros = nlohmann::json::array();
        for (auto a : g.zeros())
            zeros.push_back(complex_to_json(a));
        j["zeros"] = std::move(zeros);
        break;
    }
    case SchwarzKind::RandomPolynomial: {
        auto coeffs = nlohmann::json::array();
        for (auto c : g.poly_coeffs())
            coeffs.push_back(complex_to_json(c));
        j["coeffs"] = std::move(coeffs);
        break;
    }
    case SchwarzKind::Series:
        j["psi"] = g.psi_series();
        break;
    }
    return j;
}

SchwarzGenerator generator_from_json(const nlohmann::json &j)
{
    const auto kind = schwarz_kind_from_string(j.at("kind").get<std::string>());
    const std::size_t order = j.value("order", kDefaultOrder);
    switch (kind) {
    case SchwarzKind::ScaledUnimodular:
        return SchwarzGenerator::scaled_unimodular(j.at("rho").get<double>(), j.at("theta").get<double>(), order);
    case SchwarzKind::BlaschkeProduct: {
        std::vector<Complex> zeros;
        for (const auto &a : j.at("zeros"))
            zeros.push_back(complex_from_json(a));
        return SchwarzGenerator::blaschke_product(j.at("rho").get<double>(), j.at("theta").get<double>(),
                                                  std::move(zeros), order);
    }
    case SchwarzKind::RandomPolynomial: {
        std::vector<Complex> c;
        for (const auto &x : j.at("coeffs"))
            c.push_back(complex_from_json(x));
        return SchwarzGenerator::polynomial(std::move(c), order);
    }
    case SchwarzKind::Series:
        return SchwarzGenerator::from_psi_series(j.at("psi").get<ComplexSeries>());
    }
    throw Error(ErrorKind::InvalidConfig, "unreachable generator kind");
}

namespace {

void dump_number(std::string &out, double x)
{
    if (!std::isfinite(x)) {
        out += "null";
        return;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    out += buf;
}

void newline(std::string &out, int indent, int depth)
{
    if (indent < 0)
        return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * depth), ' ');
}

void dump(std::string &out, const nlohmann::json &j, int indent, int depth)
{
    using value_t = nlohmann::json::value_t;
    switch (j.type()) {
    case value_t::object: {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += '{';
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) { // std::map keeps keys sorted
            if (!first)
                out += ',';
            first = false;
            newline(out, indent, depth + 1);
            out += nlohmann::json(it.key()).dump();
            out += indent < 0 ? ":" : ": ";
            dump(out, it.value(), indent, depth + 1);
        }
        newline(out, indent, depth);
        out += '}';
        return;
    }
    case value_t::array: {
        if (j.empty()) {
            out += "[]";
            return;
        }
        out += '[';
        bool first = true;
        for (const auto &x : j) {
            if (!first)
                out += ',';
            first = false;
            newline(out, indent, depth + 1);
            dump(out, x, indent, depth + 1);
        }
        newline(out, indent, depth);
        out += ']';
        return;
    }
    case value_t::number_float:
        dump_number(out, j.get<double>());
        return;
    default:
        out += j.dump();
        return;
    }
}

} // namespace

std::string canonical_dump(const nlohmann::json &j, int indent)
{
    std::string out;
    dump(out, j, indent, 0);
    return out;
}

} // namespace uclass
