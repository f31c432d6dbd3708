#include "uclass/schwarz.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "uclass/errors.hpp"
#include "uclass/rng.hpp"

namespace uclass {

namespace {

constexpr std::size_t kLongOrder = 4096;
constexpr std::size_t kCutoffBins = 64;
constexpr double kTailTarget = 1e-18;

} // namespace

struct SchwarzGenerator::State {
    SchwarzKind kind = SchwarzKind::ScaledUnimodular;
    double rho = 0.0;
    double theta = 0.0;
    std::vector<Complex> zeros;
    std::vector<Complex> poly;
    ComplexSeries psi{kDefaultOrder};
    std::vector<Complex> omega_long;
    // cutoff[j] = number of omega_long terms needed on |z| <= j / kCutoffBins
    std::array<std::size_t, kCutoffBins + 1> cutoff{};
};

std::string_view to_string(SchwarzKind kind)
{
    switch (kind) {
    case SchwarzKind::ScaledUnimodular: return "scaled_unimodular";
    case SchwarzKind::BlaschkeProduct: return "blaschke_product";
    case SchwarzKind::RandomPolynomial: return "random_polynomial";
    case SchwarzKind::Series: return "series";
    }
    return "?";
}

SchwarzKind schwarz_kind_from_string(std::string_view name)
{
    for (auto k : {SchwarzKind::ScaledUnimodular, SchwarzKind::BlaschkeProduct, SchwarzKind::RandomPolynomial,
                   SchwarzKind::Series})
        if (to_string(k) == name)
            return k;
    throw Error(ErrorKind::UnknownId, "unknown Schwarz generator kind '" + std::string(name) + "'");
}

namespace {

// psi coefficients 0..len-1 for the closed-form kinds.
std::vector<Complex> psi_coefficients(const SchwarzGenerator::State &st, std::size_t len);

} // namespace

SchwarzGenerator SchwarzGenerator::finish(State st)
{
    std::vector<Complex> psi_long;
    const std::size_t nominal = st.psi.order();
    switch (st.kind) {
    case SchwarzKind::Series:
        psi_long.assign(st.psi.coeffs().begin(), st.psi.coeffs().end());
        break;
    case SchwarzKind::BlaschkeProduct:
        psi_long = psi_coefficients(st, kLongOrder + 1);
        break;
    default:
        psi_long = psi_coefficients(st, std::max<std::size_t>(st.poly.size(), 1));
        break;
    }
    if (st.kind != SchwarzKind::Series) {
        std::vector<Complex> p(nominal + 1);
        for (std::size_t k = 0; k <= nominal && k < psi_long.size(); ++k)
            p[k] = psi_long[k];
        st.psi = ComplexSeries(std::move(p));
    }

    st.omega_long.assign(psi_long.size() + 1, Complex{});
    for (std::size_t k = 0; k < psi_long.size(); ++k)
        st.omega_long[k + 1] = psi_long[k] / static_cast<double>(k + 1);

    while (st.omega_long.size() > 2 && st.omega_long.back() == Complex{})
        st.omega_long.pop_back();

    const std::size_t len = st.omega_long.size();
    std::vector<double> modulus(len), term(len);
    for (std::size_t k = 0; k < len; ++k)
        modulus[k] = std::abs(st.omega_long[k]);
    for (std::size_t j = 0; j <= kCutoffBins; ++j) {
        const double s = static_cast<double>(j) / kCutoffBins;
        double sk = 1.0;
        for (std::size_t k = 0; k < len; ++k, sk *= s)
            term[k] = modulus[k] * sk;
        std::size_t n = len;
        double tail = 0.0;
        while (n > 0 && tail + term[n - 1] < kTailTarget)
            tail += term[--n];
        st.cutoff[j] = n;
    }
    return SchwarzGenerator(std::make_shared<const State>(std::move(st)));
}

namespace {

std::vector<Complex> psi_coefficients(const SchwarzGenerator::State &st, std::size_t len)
{
    std::vector<Complex> t(len);
    switch (st.kind) {
    case SchwarzKind::ScaledUnimodular:
        t[0] = std::polar(st.rho, st.theta);
        break;
    case SchwarzKind::RandomPolynomial:
        for (std::size_t k = 0; k < st.poly.size() && k < len; ++k)
            t[k] = st.poly[k];
        break;
    case SchwarzKind::BlaschkeProduct: {
        t[0] = std::polar(st.rho, st.theta);
        // s (1 - conj(a) z) = t (z - a)  =>  s_k = conj(a) s_{k-1} + t_{k-1} - a t_k
        std::vector<Complex> s(len);
        for (auto a : st.zeros) {
            const Complex ab = std::conj(a);
            for (std::size_t k = 0; k < len; ++k) {
                Complex v = -a * t[k];
                if (k > 0)
                    v += ab * s[k - 1] + t[k - 1];
                s[k] = v;
            }
            std::swap(s, t);
        }
        break;
    }
    case SchwarzKind::Series:
        break;
    }
    return t;
}

} // namespace

SchwarzGenerator SchwarzGenerator::scaled_unimodular(double rho, double theta, std::size_t order)
{
    if (!(rho >= 0.0 && rho <= 1.0))
        throw Error(ErrorKind::ParamOutOfRange, "scale rho must lie in [0, 1]");
    State st;
    st.kind = SchwarzKind::ScaledUnimodular;
    st.rho = rho;
    st.theta = theta;
    st.psi = ComplexSeries(order);
    return finish(std::move(st));
}

SchwarzGenerator SchwarzGenerator::blaschke_product(double rho, double theta, std::vector<Complex> zeros,
                                                    std::size_t order)
{
    if (!(rho >= 0.0 && rho <= 1.0))
        throw Error(ErrorKind::ParamOutOfRange, "scale rho must lie in [0, 1]");
    if (zeros.size() > static_cast<std::size_t>(kMaxSchwarzDegree))
        throw Error(ErrorKind::ParamOutOfRange, "at most 16 Blaschke factors");
    for (auto a : zeros)
        if (!(std::abs(a) < kMaxBlaschkeZero + 1e-15))
            throw Error(ErrorKind::ParamOutOfRange, "Blaschke zeros must satisfy |a| < 0.95");
    State st;
    st.kind = SchwarzKind::BlaschkeProduct;
    st.rho = rho;
    st.theta = theta;
    st.zeros = std::move(zeros);
    st.psi = ComplexSeries(order);
    return finish(std::move(st));
}

SchwarzGenerator SchwarzGenerator::polynomial(std::vector<Complex> coeffs, std::size_t order)
{
    if (coeffs.empty())
        coeffs.push_back(0.0);
    if (coeffs.size() > static_cast<std::size_t>(kMaxSchwarzDegree) + 1)
        throw Error(ErrorKind::ParamOutOfRange, "polynomial degree at most 16");
    double l1 = 0.0;
    for (auto c : coeffs)
        l1 += std::abs(c);
    if (l1 > 1.0 + 1e-12)
        throw Error(ErrorKind::ParamOutOfRange, "polynomial coefficients must have l1 norm <= 1");
    State st;
    st.kind = SchwarzKind::RandomPolynomial;
    st.rho = l1;
    st.poly = std::move(coeffs);
    st.psi = ComplexSeries(order);
    return finish(std::move(st));
}

SchwarzGenerator SchwarzGenerator::from_psi_series(ComplexSeries psi)
{
    State st;
    st.kind = SchwarzKind::Series;
    st.psi = std::move(psi);
    return finish(std::move(st));
}

SchwarzKind SchwarzGenerator::kind() const noexcept { return s_->kind; }
double SchwarzGenerator::rho() const noexcept { return s_->rho; }
double SchwarzGenerator::theta() const noexcept { return s_->theta; }
std::span<const Complex> SchwarzGenerator::zeros() const noexcept { return s_->zeros; }
std::span<const Complex> SchwarzGenerator::poly_coeffs() const noexcept { return s_->poly; }
std::size_t SchwarzGenerator::order() const noexcept { return s_->psi.order(); }
const ComplexSeries &SchwarzGenerator::psi_series() const noexcept { return s_->psi; }
std::span<const Complex> SchwarzGenerator::omega1_long() const noexcept { return s_->omega_long; }

Complex SchwarzGenerator::psi(Complex z) const
{
    const State &st = *s_;
    switch (st.kind) {
    case SchwarzKind::ScaledUnimodular: return std::polar(st.rho, st.theta);
    case SchwarzKind::RandomPolynomial: return eval(st.poly, z);
    case SchwarzKind::Series: return eval(st.psi, z);
    case SchwarzKind::BlaschkeProduct: {
        Complex v = std::polar(st.rho, st.theta);
        for (auto a : st.zeros)
            v *= (z - a) / (1.0 - std::conj(a) * z);
        return v;
    }
    }
    return {};
}

Complex SchwarzGenerator::dpsi(Complex z) const
{
    const State &st = *s_;
    switch (st.kind) {
    case SchwarzKind::ScaledUnimodular: return 0.0;
    case SchwarzKind::RandomPolynomial: {
        Complex acc{};
        for (std::size_t k = st.poly.size(); k-- > 1;)
            acc = acc * z + static_cast<double>(k) * st.poly[k];
        return acc;
    }
    case SchwarzKind::Series: return eval(derivative(st.psi), z);
    case SchwarzKind::BlaschkeProduct: {
        const std::size_t m = st.zeros.size();
        if (m == 0)
            return 0.0;
        std::vector<Complex> factor(m), dfactor(m);
        for (std::size_t k = 0; k < m; ++k) {
            const Complex a = st.zeros[k];
            const Complex den = 1.0 - std::conj(a) * z;
            factor[k] = (z - a) / den;
            dfactor[k] = (1.0 - std::norm(a)) / (den * den);
        }
        // product rule with prefix/suffix products
        std::vector<Complex> suffix(m + 1, 1.0);
        for (std::size_t k = m; k-- > 0;)
            suffix[k] = suffix[k + 1] * factor[k];
        Complex prefix = 1.0, acc{};
        for (std::size_t k = 0; k < m; ++k) {
            acc += prefix * dfactor[k] * suffix[k + 1];
            prefix *= factor[k];
        }
        return std::polar(st.rho, st.theta) * acc;
    }
    }
    return {};
}

Complex SchwarzGenerator::omega1(Complex z) const
{
    const State &st = *s_;
    const double r = std::abs(z);
    std::size_t n = st.omega_long.size();
    if (r <= 1.0) {
        const auto j = static_cast<std::size_t>(std::ceil(r * kCutoffBins));
        n = st.cutoff[std::min(j, kCutoffBins)];
    }
    return eval(std::span<const Complex>(st.omega_long.data(), n), z);
}

SchwarzGenerator SchwarzGenerator::with_order(std::size_t order) const
{
    State st = *s_;
    if (st.kind == SchwarzKind::Series)
        st.psi = st.psi.with_order(order);
    else
        st.psi = ComplexSeries(order);
    return finish(std::move(st));
}

bool SchwarzGenerator::same_parameters(const SchwarzGenerator &other, double tol) const
{
    const State &a = *s_;
    const State &b = *other.s_;
    if (a.kind != b.kind || a.zeros.size() != b.zeros.size() || a.poly.size() != b.poly.size())
        return false;
    if (std::abs(a.rho - b.rho) > tol || std::abs(a.theta - b.theta) > tol)
        return false;
    for (std::size_t k = 0; k < a.zeros.size(); ++k)
        if (std::abs(a.zeros[k] - b.zeros[k]) > tol)
            return false;
    for (std::size_t k = 0; k < a.poly.size(); ++k)
        if (std::abs(a.poly[k] - b.poly[k]) > tol)
            return false;
    if (a.kind == SchwarzKind::Series)
        return a.psi.order() == b.psi.order() && max_coeff_diff(a.psi, b.psi) <= tol;
    return true;
}

SchwarzGenerator sample_schwarz(std::uint64_t seed, SchwarzKind kind, int degree, std::size_t order,
                                std::optional<Complex> align_to)
{
    if (degree < 0 || degree > kMaxSchwarzDegree)
        throw Error(ErrorKind::ParamOutOfRange, "degree must lie in [0, 16]");
    if (align_to && !(std::abs(*align_to) <= 2.0))
        throw Error(ErrorKind::ParamOutOfRange, "alignment target must satisfy |a2| <= 2");
    SampleRng rng(seed);
    constexpr double two_pi = 2.0 * std::numbers::pi;

    // Aligned draws put psi(0) along -(a2/|a2|)^2 with |psi(0)| >= |a2|^2/4,
    // the region where 1 - a2 z - z omega1 tends to stay zero-free.
    const double floor = align_to ? std::norm(*align_to) / 4.0 : 0.0;
    const Complex target =
        (align_to && std::abs(*align_to) > 0.0) ? -std::pow(*align_to / std::abs(*align_to), 2) : Complex{-1.0, 0.0};
    // a quarter of the draws sit exactly on |psi| = 1 to reach extremal behaviour
    auto draw_above = [&rng](double lo) { return rng.uniform() < 0.25 ? 1.0 : lo + (1.0 - lo) * rng.uniform(); };

    switch (kind) {
    case SchwarzKind::ScaledUnimodular: {
        const double rho = draw_above(floor);
        const double theta = align_to ? std::arg(target) : two_pi * rng.uniform();
        return SchwarzGenerator::scaled_unimodular(rho, theta, order);
    }
    case SchwarzKind::BlaschkeProduct: {
        const double share = std::pow(floor, 1.0 / (degree + 1));
        const double rho = draw_above(share);
        const double zmin = std::min(kMaxBlaschkeZero, share);
        std::vector<Complex> zeros;
        Complex at_zero = 1.0;
        for (int k = 0; k < degree; ++k) {
            const double radius = align_to ? zmin + (kMaxBlaschkeZero - zmin) * rng.uniform()
                                           : kMaxBlaschkeZero * std::sqrt(rng.uniform());
            zeros.push_back(std::polar(radius, two_pi * rng.uniform()));
            at_zero *= -zeros.back();
        }
        double theta = two_pi * rng.uniform();
        if (align_to)
            theta = std::arg(target) - std::arg(at_zero);
        return SchwarzGenerator::blaschke_product(rho, theta, std::move(zeros), order);
    }
    case SchwarzKind::RandomPolynomial: {
        const double share = std::sqrt(floor);
        const double rho = draw_above(share);
        std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
        double l1 = 0.0;
        for (auto &x : c) {
            x = std::polar(rng.uniform(), two_pi * rng.uniform());
            l1 += std::abs(x);
        }
        if (align_to) {
            const double w0 = share + (1.0 - share) * rng.uniform();
            const double rest = l1 - std::abs(c[0]);
            for (std::size_t k = 1; k < c.size(); ++k)
                c[k] *= (rest > 0.0) ? (1.0 - w0) / rest : 0.0;
            c[0] = w0 * target;
            for (auto &x : c)
                x *= rho;
            return SchwarzGenerator::polynomial(std::move(c), order);
        }
        for (auto &x : c)
            x *= (l1 > 0.0) ? rho / l1 : 0.0;
        return SchwarzGenerator::polynomial(std::move(c), order);
    }
    case SchwarzKind::Series:
        break;
    }
    throw Error(ErrorKind::ParamOutOfRange, "cannot sample a series-kind generator");
}

} // namespace uclass
