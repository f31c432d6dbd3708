#include "uclass/catalog.hpp"

#include <array>
#include <cmath>
#include <string>

#include "uclass/errors.hpp"
#include "uclass/json_io.hpp"
#include "uclass/operators.hpp"
#include "uclass/winding.hpp"

namespace uclass {

namespace {

constexpr double kNearZeroDenominator = 1e-12;
// below this radius the reciprocal jet is taken from the series
constexpr double kSeriesJetRadius = 0.25;

Jet series_jet(const ComplexSeries &s, Complex z)
{
    const ComplexSeries d1 = derivative(s);
    return {eval(s, z), eval(d1, z), eval(derivative(d1), z)};
}

// f = z/h  =>  f' = (h - z h')/h^2,  f'' = (N' h - 2 N h')/h^3 with N = h - z h', N' = -z h''
Jet quotient_jet(Complex z, const Jet &h)
{
    if (!(std::abs(h.value) > kNearZeroDenominator))
        throw Error(ErrorKind::EvalNearZeroDenominator, "z/f vanishes", z);
    const Complex n = h.value - z * h.d1;
    const Complex dn = -z * h.d2;
    const Complex inv = 1.0 / h.value;
    return {z * inv, n * inv * inv, (dn * h.value - 2.0 * n * h.d1) * inv * inv * inv};
}

Jet polynomial_jet(std::span<const Complex> p, Complex z)
{
    Complex v{}, d1{}, d2{};
    for (std::size_t k = p.size(); k-- > 0;) {
        d2 = d2 * z + 2.0 * d1;
        d1 = d1 * z + v;
        v = v * z + p[k];
    }
    return {v, d1, d2};
}

} // namespace

struct DiskFunction::State {
    nlohmann::json spec;
    std::string id;
    std::vector<double> params;
    ComplexSeries series;
    ComplexSeries reciprocal;
    JetFn f_jet;
    JetFn h_jet;
    std::optional<SchwarzGenerator> generator;
};

DiskFunction::DiskFunction(nlohmann::json spec, ComplexSeries series, JetFn f_jet, JetFn h_jet,
                           std::optional<SchwarzGenerator> generator)
{
    State st;
    st.id = spec.value("id", std::string("unnamed"));
    if (spec.contains("params"))
        st.params = spec.at("params").get<std::vector<double>>();
    st.spec = std::move(spec);
    st.reciprocal = reciprocal(shift_down(series));
    st.series = std::move(series);
    st.f_jet = std::move(f_jet);
    st.h_jet = std::move(h_jet);
    st.generator = std::move(generator);
    s_ = std::make_shared<const State>(std::move(st));
}

const std::string &DiskFunction::id() const noexcept { return s_->id; }
std::span<const double> DiskFunction::params() const noexcept { return s_->params; }
const nlohmann::json &DiskFunction::spec() const noexcept { return s_->spec; }
const ComplexSeries &DiskFunction::series() const noexcept { return s_->series; }
const ComplexSeries &DiskFunction::reciprocal_series() const noexcept { return s_->reciprocal; }
bool DiskFunction::has_native_reciprocal() const noexcept { return static_cast<bool>(s_->h_jet); }
const std::optional<SchwarzGenerator> &DiskFunction::generator() const noexcept { return s_->generator; }

Jet DiskFunction::jet(Complex z) const { return s_->f_jet(z); }

Jet DiskFunction::reciprocal_jet(Complex z) const
{
    if (s_->h_jet)
        return s_->h_jet(z);
    if (std::abs(z) <= kSeriesJetRadius)
        return series_jet(s_->reciprocal, z);
    const Jet f = jet(z);
    if (!(std::abs(f.value) > kNearZeroDenominator * std::abs(z)))
        throw Error(ErrorKind::EvalNearZeroDenominator, "f vanishes away from the origin", z);
    // z/f has the same quotient structure with the roles of f and h exchanged
    return quotient_jet(z, f);
}

namespace {

constexpr std::array<std::string_view, 8> kIds{"koebe",    "f1",         "f2",       "fb",
                                               "log_map", "half_plane", "identity", "example_sec1"};

nlohmann::json catalog_spec(std::string_view id, std::span<const double> params)
{
    nlohmann::json j{{"id", std::string(id)}};
    if (!params.empty())
        j["params"] = std::vector<double>(params.begin(), params.end());
    return j;
}

} // namespace

std::span<const std::string_view> catalog_ids() { return kIds; }

DiskFunction from_reciprocal_polynomial(nlohmann::json spec, std::vector<Complex> h, std::size_t order)
{
    std::vector<Complex> hs(h.begin(), h.begin() + std::min(h.size(), order + 1));
    hs.resize(order + 1);
    const ComplexSeries series = shift_up(reciprocal(ComplexSeries(std::move(hs))));
    auto poly = std::make_shared<const std::vector<Complex>>(std::move(h));
    auto h_jet = [poly](Complex z) { return polynomial_jet(*poly, z); };
    auto f_jet = [poly](Complex z) { return quotient_jet(z, polynomial_jet(*poly, z)); };
    return DiskFunction(std::move(spec), series, f_jet, h_jet);
}

DiskFunction make_catalog(std::string_view id, std::span<const double> params, std::size_t order)
{
    if (order < 2)
        throw Error(ErrorKind::InsufficientOrder, "catalog functions need order >= 2");
    auto expect_params = [&](std::size_t n) {
        if (params.size() != n)
            throw Error(ErrorKind::ParamOutOfRange,
                        std::string(id) + " expects " + std::to_string(n) + " parameter(s)");
    };
    auto spec = catalog_spec(id, params);
    if (id == "koebe") {
        expect_params(0);
        return from_reciprocal_polynomial(spec, {1.0, -2.0, 1.0}, order);
    }
    if (id == "f1") {
        expect_params(0);
        return from_reciprocal_polynomial(spec, {1.0, 0.0, -1.0}, order);
    }
    if (id == "f2") {
        expect_params(0);
        return from_reciprocal_polynomial(spec, {1.0, 0.0, 0.0, -0.5}, order);
    }
    if (id == "fb") {
        expect_params(1);
        const double b = params[0];
        if (!(b > 0.0 && b <= 2.0))
            throw Error(ErrorKind::ParamOutOfRange, "fb requires 0 < b <= 2");
        return from_reciprocal_polynomial(spec, {1.0, b, 1.0}, order);
    }
    if (id == "half_plane") {
        expect_params(0);
        return from_reciprocal_polynomial(spec, {1.0, -1.0}, order);
    }
    if (id == "identity") {
        expect_params(0);
        return from_reciprocal_polynomial(spec, {1.0}, order);
    }
    if (id == "example_sec1") {
        expect_params(0);
        // (1 - z)^2 (1 + z/2) = 1 - 3z/2 + z^3/2
        return from_reciprocal_polynomial(spec, {1.0, -1.5, 0.0, 0.5}, order);
    }
    if (id == "log_map") {
        expect_params(0);
        std::vector<Complex> c(order + 1);
        for (std::size_t k = 1; k <= order; ++k)
            c[k] = 1.0 / static_cast<double>(k);
        auto f_jet = [](Complex z) -> Jet {
            const Complex w = 1.0 - z;
            return {-std::log(w), 1.0 / w, 1.0 / (w * w)};
        };
        return DiskFunction(spec, ComplexSeries(std::move(c)), f_jet);
    }
    throw Error(ErrorKind::UnknownId, "unknown catalog id '" + std::string(id) + "'");
}

DiskFunction from_series(const ComplexSeries &series)
{
    nlohmann::json spec{{"id", "series"}, {"series", series}};
    auto d1 = derivative(series);
    auto d2 = derivative(d1);
    auto f_jet = [series, d1, d2](Complex z) -> Jet { return {eval(series, z), eval(d1, z), eval(d2, z)}; };
    return DiskFunction(std::move(spec), series, f_jet);
}

DiskFunction build_from_eq2(Complex a2, const SchwarzGenerator &g, std::size_t order)
{
    if (!(std::abs(a2) <= kMaxSampledA2 + 1e-12))
        throw Error(ErrorKind::ParamOutOfRange, "sampling policy requires |a2| <= 2");
    if (order < 2)
        throw Error(ErrorKind::InsufficientOrder, "order must be at least 2");

    // h(z) = 1 - a2 z - z omega1(z)
    const auto omega = g.omega1_long();
    std::vector<Complex> h_long(omega.size() + 1);
    h_long[0] = 1.0;
    h_long[1] = -a2;
    for (std::size_t k = 0; k < omega.size(); ++k)
        h_long[k + 1] -= omega[k];

    auto h_jet = [a2, g](Complex z) -> Jet {
        const Complex w = g.omega1(z);
        const Complex p = g.psi(z);
        return {1.0 - a2 * z - z * w, -a2 - w - z * p, -2.0 * p - z * g.dpsi(z)};
    };
    const ComplexFn h_value = [a2, g](Complex z) { return 1.0 - a2 * z - z * g.omega1(z); };

    int zeros = 0;
    try {
        const auto values = circle_values(h_long, kCertifyRadius, kCertifySamples);
        zeros = count_zeros_from_circle(values, kCertifyRadius, h_value);
    } catch (const Error &e) {
        if (e.kind() != ErrorKind::BoundaryTooClose)
            throw;
        throw Error(ErrorKind::DenominatorVanishes, std::string("z/f nearly vanishes on the certificate circle (") +
                                                        e.what() + ")");
    }
    if (zeros != 0)
        throw Error(ErrorKind::DenominatorVanishes,
                    "z/f has " + std::to_string(zeros) + " zero(s) inside |z| < 1 - 2^-10");

    std::vector<Complex> hs(h_long.begin(), h_long.begin() + std::min(h_long.size(), order + 1));
    hs.resize(order + 1);
    const ComplexSeries series = shift_up(reciprocal(ComplexSeries(std::move(hs))));

    nlohmann::json spec{{"id", "sampled"}, {"a2", complex_to_json(a2)}, {"generator", generator_to_json(g)}};
    auto f_jet = [h_jet](Complex z) { return quotient_jet(z, h_jet(z)); };
    return DiskFunction(std::move(spec), series, f_jet, h_jet, g);
}

DiskFunction function_from_spec(const nlohmann::json &spec, std::size_t order)
{
    const std::string id = spec.at("id").get<std::string>();
    if (id == "sampled")
        return build_from_eq2(complex_from_json(spec.at("a2")), generator_from_json(spec.at("generator")), order);
    if (id == "series")
        return from_series(spec.at("series").get<ComplexSeries>());
    if (id == "g_transform")
        return g_transform(function_from_spec(spec.at("of"), order));
    std::vector<double> params;
    if (spec.contains("params"))
        params = spec.at("params").get<std::vector<double>>();
    return make_catalog(id, params, order);
}

} // namespace uclass
