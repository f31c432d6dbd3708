#include "uclass/hankel.hpp"

#include <cmath>
#include <cstdio>

#include "uclass/errors.hpp"
#include "uclass/json_io.hpp"
#include "uclass/operators.hpp"

namespace uclass {

Complex small_determinant(std::span<const Complex> m, int size)
{
    if (size < 1 || size > kMaxHankelOrder || m.size() != static_cast<std::size_t>(size * size))
        throw Error(ErrorKind::ArgumentOutOfDomain, "determinant size must be 1..4");
    if (size == 1)
        return m[0];
    if (size == 2)
        return m[0] * m[3] - m[1] * m[2];
    // Laplace expansion along the first row
    Complex det{};
    std::vector<Complex> minor(static_cast<std::size_t>((size - 1) * (size - 1)));
    for (int col = 0; col < size; ++col) {
        std::size_t w = 0;
        for (int i = 1; i < size; ++i)
            for (int j = 0; j < size; ++j)
                if (j != col)
                    minor[w++] = m[static_cast<std::size_t>(i * size + j)];
        const Complex cof = small_determinant(minor, size - 1);
        det += (col % 2 == 0 ? 1.0 : -1.0) * m[static_cast<std::size_t>(col)] * cof;
    }
    return det;
}

HankelReport hankel_det(const ComplexSeries &f, int q, int n)
{
    if (q < 1 || q > kMaxHankelOrder || n < 1)
        throw Error(ErrorKind::ArgumentOutOfDomain, "Hankel determinant needs 1 <= q <= 4 and n >= 1");
    const auto top = static_cast<std::size_t>(n + 2 * q - 2);
    if (f.order() < top)
        throw Error(ErrorKind::InsufficientOrder,
                    "series order " + std::to_string(f.order()) + " < " + std::to_string(top));
    HankelReport rep;
    rep.q = q;
    rep.n = n;
    for (auto k = static_cast<std::size_t>(n); k <= top; ++k)
        rep.coefficients.push_back(f[k]);
    std::vector<Complex> m(static_cast<std::size_t>(q * q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            m[static_cast<std::size_t>(i * q + j)] = rep.coefficients[static_cast<std::size_t>(i + j)];
    rep.value = small_determinant(m, q);
    rep.modulus = std::abs(rep.value);
    return rep;
}

HankelReport hankel_det(const DiskFunction &f, int q, int n) { return hankel_det(f.series(), q, n); }

Complex reduced_h2(Complex a2, std::span<const Complex> c) { return a2 * c[1] - c[0] * c[0]; }

Complex reduced_h3(std::span<const Complex> c) { return c[0] * c[2] - c[1] * c[1]; }

std::array<Complex, 3> coefficients_from_omega(Complex a2, std::span<const Complex> c)
{
    const Complex a2s = a2 * a2;
    return {c[0] + a2s, c[1] + 2.0 * a2 * c[0] + a2s * a2,
            c[2] + 2.0 * a2 * c[1] + c[0] * c[0] + 3.0 * a2s * c[0] + a2s * a2s};
}

ConstraintSlacks prokhorov_szynal_check(Complex c1, Complex c2, Complex c3)
{
    const double m1 = std::norm(c1);
    const double one_minus = 1.0 - m1;
    ConstraintSlacks s;
    s.slack[0] = 1.0 - std::abs(c1);
    s.slack[1] = one_minus - 2.0 * std::abs(c2);
    s.slack[2] = one_minus * one_minus - 4.0 * std::norm(c2) -
                 std::abs(3.0 * c3 * one_minus + 4.0 * std::conj(c1) * c2 * c2);
    return s;
}

double eq5_envelope(double c1, double c2_abs)
{
    if (!(c1 >= 0.0 && c1 <= 1.0))
        throw Error(ErrorKind::ArgumentOutOfDomain, "c1 must lie in [0, 1]");
    if (!(c2_abs >= 0.0 && c2_abs <= 0.5 * (1.0 - c1 * c1) + 1e-12))
        throw Error(ErrorKind::ArgumentOutOfDomain, "|c2| must not exceed (1 - c1^2)/2");
    return (1.0 - c1 * c1 - 4.0 * c2_abs * c2_abs / (1.0 + c1)) / 3.0;
}

double theorem1_bound_profile(double c1)
{
    if (!(c1 >= 0.0 && c1 <= 1.0))
        throw Error(ErrorKind::ArgumentOutOfDomain, "c1 must lie in [0, 1]");
    const double s = c1 * c1;
    return (3.0 - 2.0 * s - s * s) / 12.0;
}

nlohmann::json to_json(const HankelReport &r)
{
    auto coeffs = nlohmann::json::array();
    for (auto c : r.coefficients)
        coeffs.push_back(complex_to_json(c));
    return {{"q", r.q},
            {"n", r.n},
            {"value", complex_to_json(r.value)},
            {"modulus", r.modulus},
            {"coefficients", std::move(coeffs)}};
}

std::string hankel_csv_header() { return "id,params,abs_h2,abs_h3,c1,c2,c3,slack1,slack2,slack3"; }

namespace {

std::string fmt17(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt_complex(Complex z) { return fmt17(z.real()) + (z.imag() < 0 ? "" : "+") + fmt17(z.imag()) + "i"; }

} // namespace

std::string hankel_csv_row(const DiskFunction &f)
{
    const auto h2 = hankel_det(f, 2, 2);
    const auto h3 = hankel_det(f, 3, 1);
    const auto d = decompose(f);
    const auto s = prokhorov_szynal_check(d.c[0], d.c[1], d.c[2]);
    std::string params;
    for (std::size_t k = 0; k < f.params().size(); ++k)
        params += (k ? ";" : "") + fmt17(f.params()[k]);
    return f.id() + "," + params + "," + fmt17(h2.modulus) + "," + fmt17(h3.modulus) + "," + fmt_complex(d.c[0]) +
           "," + fmt_complex(d.c[1]) + "," + fmt_complex(d.c[2]) + "," + fmt17(s.slack[0]) + "," +
           fmt17(s.slack[1]) + "," + fmt17(s.slack[2]);
}

} // namespace uclass
