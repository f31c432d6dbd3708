#include "uclass/series.hpp"

#include <algorithm>
#include <cmath>

#include "uclass/errors.hpp"

namespace uclass {

ComplexSeries::ComplexSeries(std::size_t order) : coeffs_(order + 1) {}

ComplexSeries::ComplexSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        coeffs_.resize(1);
}

ComplexSeries::ComplexSeries(std::initializer_list<Complex> leading, std::size_t order) : coeffs_(order + 1)
{
    std::size_t n = 0;
    for (auto c : leading) {
        if (n > order)
            break;
        coeffs_[n++] = c;
    }
}

ComplexSeries ComplexSeries::constant(Complex c, std::size_t order)
{
    ComplexSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

ComplexSeries ComplexSeries::variable(std::size_t order)
{
    ComplexSeries s(order);
    if (order >= 1)
        s.coeffs_[1] = 1.0;
    return s;
}

ComplexSeries ComplexSeries::with_order(std::size_t order) const
{
    std::vector<Complex> c(coeffs_.begin(), coeffs_.begin() + std::min(coeffs_.size(), order + 1));
    c.resize(order + 1);
    return ComplexSeries(std::move(c));
}

ComplexSeries add(const ComplexSeries &a, const ComplexSeries &b)
{
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Complex> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        c[k] = a[k] + b[k];
    return ComplexSeries(std::move(c));
}

ComplexSeries sub(const ComplexSeries &a, const ComplexSeries &b)
{
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Complex> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        c[k] = a[k] - b[k];
    return ComplexSeries(std::move(c));
}

ComplexSeries scale(const ComplexSeries &a, Complex s)
{
    std::vector<Complex> c(a.coeffs().begin(), a.coeffs().end());
    for (auto &x : c)
        x *= s;
    return ComplexSeries(std::move(c));
}

ComplexSeries mul(const ComplexSeries &a, const ComplexSeries &b)
{
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Complex> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i] == Complex{})
            continue;
        for (std::size_t j = 0; i + j <= n; ++j)
            c[i + j] += a[i] * b[j];
    }
    return ComplexSeries(std::move(c));
}

ComplexSeries reciprocal(const ComplexSeries &a, double eps_div)
{
    if (std::abs(a[0]) <= eps_div)
        throw Error(ErrorKind::NearZeroConstantTerm, "constant term below reciprocal guard");
    const std::size_t n = a.order();
    std::vector<Complex> r(n + 1);
    const Complex inv0 = 1.0 / a[0];
    r[0] = inv0;
    for (std::size_t k = 1; k <= n; ++k) {
        Complex acc{};
        for (std::size_t j = 1; j <= k; ++j)
            acc += a[j] * r[k - j];
        r[k] = -acc * inv0;
    }
    return ComplexSeries(std::move(r));
}

ComplexSeries derivative(const ComplexSeries &a)
{
    const std::size_t n = a.order();
    std::vector<Complex> c(n + 1);
    for (std::size_t k = 1; k <= n; ++k)
        c[k - 1] = static_cast<double>(k) * a[k];
    return ComplexSeries(std::move(c));
}

ComplexSeries integrate(const ComplexSeries &a)
{
    const std::size_t n = a.order();
    std::vector<Complex> c(n + 1);
    for (std::size_t k = 1; k <= n; ++k)
        c[k] = a[k - 1] / static_cast<double>(k);
    return ComplexSeries(std::move(c));
}

ComplexSeries compose(const ComplexSeries &outer, const ComplexSeries &inner)
{
    if (std::abs(inner[0]) > kComposeInnerTol)
        throw Error(ErrorKind::NonzeroInnerConstant, "inner series must vanish at the origin");
    const std::size_t n = std::min(outer.order(), inner.order());
    // Horner in the series ring; inner_0 is treated as exactly zero.
    std::vector<Complex> in(inner.coeffs().begin(), inner.coeffs().begin() + n + 1);
    in[0] = 0.0;
    const ComplexSeries z(std::move(in));
    ComplexSeries acc = ComplexSeries::constant(outer[n], n);
    for (std::size_t k = n; k-- > 0;) {
        acc = mul(acc, z);
        std::vector<Complex> c(acc.coeffs().begin(), acc.coeffs().end());
        c[0] += outer[k];
        acc = ComplexSeries(std::move(c));
    }
    return acc;
}

ComplexSeries rotate(const ComplexSeries &a, double theta)
{
    std::vector<Complex> c(a.coeffs().begin(), a.coeffs().end());
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] *= std::polar(1.0, (static_cast<double>(k) - 1.0) * theta);
    return ComplexSeries(std::move(c));
}

ComplexSeries shift_up(const ComplexSeries &a)
{
    const std::size_t n = a.order();
    std::vector<Complex> c(n + 1);
    for (std::size_t k = 1; k <= n; ++k)
        c[k] = a[k - 1];
    return ComplexSeries(std::move(c));
}

ComplexSeries shift_down(const ComplexSeries &a)
{
    const std::size_t n = a.order();
    if (n == 0)
        return ComplexSeries(std::size_t{0});
    return ComplexSeries(std::vector<Complex>(a.coeffs().begin() + 1, a.coeffs().end()));
}

Complex eval(std::span<const Complex> coeffs, Complex z)
{
    Complex acc{};
    for (std::size_t k = coeffs.size(); k-- > 0;)
        acc = acc * z + coeffs[k];
    return acc;
}

Complex eval(const ComplexSeries &a, Complex z) { return eval(a.coeffs(), z); }

double max_coeff_diff(const ComplexSeries &a, const ComplexSeries &b)
{
    const std::size_t n = std::min(a.order(), b.order());
    double m = 0.0;
    for (std::size_t k = 0; k <= n; ++k)
        m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

} // namespace uclass
