#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "uclass/errors.hpp"
#include "uclass/membership.hpp"
#include "uclass/operators.hpp"

using namespace uclass;

namespace {

ErrorKind kind_of(const std::function<void()> &fn)
{
    try {
        fn();
    } catch (const Error &e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::InvalidConfig;
}

DiskFunction fb(double b) { return make_catalog("fb", std::vector<double>{b}); }

ComplexSeries monomial(Complex c, std::size_t power, std::size_t order)
{
    ComplexSeries s(order);
    std::vector<Complex> v(s.coeffs().begin(), s.coeffs().end());
    v[power] = c;
    return ComplexSeries(std::move(v));
}

// U_f = f'(z) (z/f)^2 - 1 straight from the closed forms, without the h jet
Complex u_direct(const DiskFunction &f, Complex z)
{
    const Complex q = z / f.f(z);
    return f.f1(z) * q * q - 1.0;
}

} // namespace

TEST_CASE("U operator closed-form identities")
{
    struct Case {
        const char *id;
        Complex c;
        std::size_t power;
    };
    for (const auto &[id, c, power] : {Case{"koebe", -1.0, 2}, Case{"f1", 1.0, 2}, Case{"f2", 1.0, 3}}) {
        CAPTURE(id);
        const auto f = make_catalog(id);
        const auto U = u_operator(f);
        CHECK(max_coeff_diff(U.series, monomial(c, power, U.series.order())) <= 1e-12);
        SampleRng rng(2);
        for (int i = 0; i < 20; ++i) {
            const Complex z = testing::random_point(rng, 0.99);
            CHECK(std::abs(U.pointwise(z) - c * std::pow(z, static_cast<int>(power))) < 1e-12);
        }
    }
    CHECK(u_operator(make_catalog("identity")).pointwise(Complex(0.3, 0.3)) == Complex(0.0));
    CHECK(std::abs(u_operator(make_catalog("half_plane")).pointwise(Complex(0.9, 0.1))) < 1e-15);
}

TEST_CASE("U of -log(1 - z) at 0.99")
{
    const auto f = make_catalog("log_map");
    const Complex z = 0.99;
    const Complex want = u_direct(f, z);
    const Complex got = u_operator(f).pointwise(z);
    CHECK(std::abs(got - want) < 1e-12);
    CHECK(std::abs(got.real() - 3.621) < 1e-3);
    CHECK(std::abs(got.imag()) < 1e-12);
}

TEST_CASE("U series agrees with the pointwise evaluator")
{
    std::vector<DiskFunction> fs;
    for (auto id : {"koebe", "f1", "f2", "log_map", "half_plane", "example_sec1"})
        fs.push_back(make_catalog(id));
    fs.push_back(fb(0.7));
    for (std::uint64_t s = 0; s < 10; ++s)
        fs.push_back(testing::random_member(s + 500));
    SampleRng rng(13);
    for (const auto &f : fs) {
        const auto U = u_operator(f);
        for (int i = 0; i < 100; ++i) {
            const Complex z = testing::random_point(rng, 0.5);
            CHECK(std::abs(eval(U.series, z) - U.pointwise(z)) < 1e-8);
            CHECK(std::abs(u_direct(f, z) - U.pointwise(z)) < 1e-10);
        }
    }
}

TEST_CASE("U_f = z^2 omega1' on sampled functions")
{
    for (std::uint64_t s = 0; s < 100; ++s) {
        const auto f = testing::random_member(s + 1000);
        REQUIRE(f.generator().has_value());
        const auto lhs = u_operator(f).series;
        const auto rhs = shift_up(shift_up(f.generator()->psi_series()));
        CHECK(max_coeff_diff(lhs, rhs) <= 1e-10);
    }
}

TEST_CASE("starlike and convex quotients")
{
    const Complex i{0.0, 1.0};
    const auto ex = make_catalog("example_sec1");
    CHECK(std::abs(starlike_quotient(ex)(i) - Complex(-0.2, 0.6)) < 1e-12);

    const auto id = make_catalog("identity");
    CHECK(starlike_quotient(id)(Complex(0.4, -0.7)) == Complex(1.0));
    CHECK(starlike_quotient(id)(0.0) == Complex(1.0));
    CHECK(convex_quotient(id)(Complex(0.5, 0.5)) == Complex(1.0));

    const auto k = make_catalog("koebe");
    CHECK(std::abs(starlike_quotient(k)(0.5) - 3.0) < 1e-12);
    SampleRng rng(3);
    for (int n = 0; n < 20; ++n) {
        const Complex z = testing::random_point(rng, 0.95);
        CHECK(std::abs(starlike_quotient(k)(z) - (1.0 + z) / (1.0 - z)) < 1e-12);
    }

    const auto lg = make_catalog("log_map");
    for (int n = 0; n < 20; ++n) {
        const Complex z = testing::random_point(rng, 0.999);
        CHECK(std::abs(convex_quotient(lg)(z) - 1.0 / (1.0 - z)) < 1e-12);
    }
    for (double r : {0.5, 0.9, 0.99, 0.999}) {
        const auto scan = extremal_on_circle(convex_quotient(lg), ScanMode::InfReal, r, 512);
        CHECK(scan.value > 0.0);
        CHECK(std::abs(scan.value - 1.0 / (1.0 + r)) < 1e-9);
    }

    CHECK(convex_quotient(make_catalog("half_plane"))(0.0) == Complex(1.0));
    CHECK(kind_of([&] { (void)starlike_quotient(k)(1.0); }) == ErrorKind::EvalNearZeroDenominator);
}

TEST_CASE("Mocanu functional")
{
    SampleRng rng(6);
    std::vector<DiskFunction> fs{make_catalog("koebe"), make_catalog("log_map"), make_catalog("example_sec1"),
                                 testing::random_member(77)};
    for (const auto &f : fs) {
        for (int n = 0; n < 20; ++n) {
            const Complex z = testing::random_point(rng, 0.6);
            CHECK(std::abs(mocanu_functional(f, 0.0)(z) - starlike_quotient(f)(z)) <= 1e-14);
            CHECK(std::abs(mocanu_functional(f, 1.0)(z) - convex_quotient(f)(z)) <= 1e-14);
        }
    }
    const auto hp = make_catalog("half_plane");
    for (double alpha : {-2.0, -1.0, 0.3, 1.5}) {
        for (int n = 0; n < 10; ++n) {
            const Complex z = testing::random_point(rng, 0.99);
            CHECK(std::abs(mocanu_functional(hp, alpha)(z) - (1.0 + alpha * z) / (1.0 - z)) < 1e-12);
        }
    }
    CHECK(std::abs(mocanu_functional(hp, -1.0)(Complex(0.9, -0.3)) - 1.0) < 1e-14);
    CHECK(mocanu_functional(hp, -1.0).name() == "mocanu(-1)");
}

TEST_CASE("g-transform")
{
    for (double b : {0.25, 0.5, 1.0, 1.5, 2.0}) {
        const auto g = g_transform(fb(b));
        CHECK(max_coeff_diff(g.series(), ComplexSeries({0.0, 1.0, 1.0 / b}, g.series().order())) < 1e-12);
        const Complex z{0.3, -0.2};
        CHECK(std::abs(g.f(z) - (z + z * z / b)) < 1e-14);
        CHECK(std::abs(g.f1(z) - (1.0 + 2.0 * z / b)) < 1e-14);
        CHECK(std::abs(g.f2(z) - 2.0 / b) < 1e-13);
        CHECK(std::abs(g.f1(-b / 2.0)) <= 1e-14);
    }
    const auto g = g_transform(make_catalog("half_plane"));
    CHECK(max_coeff_diff(g.series(), ComplexSeries({0.0, 1.0}, g.series().order())) < 1e-15);
    CHECK(kind_of([] { (void)g_transform(make_catalog("f1")); }) == ErrorKind::SecondCoefficientVanishes);

    SUBCASE("matches z + z omega1 / a2 on samples")
    {
        for (std::uint64_t s = 0; s < 10; ++s) {
            const auto f = testing::random_member(s + 40);
            const auto d = decompose(f);
            const auto gs = g_transform(f).series();
            const auto want = add(ComplexSeries::variable(gs.order()), scale(shift_up(d.omega1.with_order(gs.order())), 1.0 / d.a2));
            CHECK(max_coeff_diff(gs, want) < 1e-10);
        }
    }
}

TEST_CASE("decompose")
{
    auto d = decompose(make_catalog("f1"));
    CHECK(std::abs(d.a2) < 1e-15);
    CHECK(std::abs(d.c[0] - 1.0) < 1e-14);
    CHECK(std::abs(d.c[1]) < 1e-14);
    CHECK(std::abs(d.c[2]) < 1e-14);
    CHECK(std::abs(make_catalog("f1").series()[3] - (d.c[0] + d.a2 * d.a2)) < 1e-14);

    d = decompose(make_catalog("identity"));
    CHECK(d.a2 == Complex(0.0));
    CHECK(d.c == std::array<Complex, 3>{});

    d = decompose(make_catalog("f2"));
    CHECK(std::abs(d.c[1] - 0.5) < 1e-14);
    CHECK(std::abs(d.c[0]) + std::abs(d.c[2]) < 1e-14);
    CHECK(std::abs(make_catalog("f2").series()[4] - d.c[1]) < 1e-14);

    SUBCASE("coefficient relations and rebuild")
    {
        std::vector<DiskFunction> fs;
        for (auto id : {"koebe", "f1", "f2", "log_map", "half_plane", "identity", "example_sec1"})
            fs.push_back(make_catalog(id));
        for (double b : {0.25, 1.0, 2.0})
            fs.push_back(fb(b));
        for (std::uint64_t s = 0; s < 40; ++s)
            fs.push_back(testing::random_member(s + 300));
        for (const auto &f : fs) {
            const auto &a = f.series();
            const auto dd = decompose(f);
            const auto [c1, c2, c3] = dd.c;
            const Complex a2 = dd.a2;
            CHECK(std::abs(a[3] - (c1 + a2 * a2)) <= 1e-12);
            CHECK(std::abs(a[4] - (c2 + 2.0 * a2 * c1 + a2 * a2 * a2)) <= 1e-12);
            CHECK(std::abs(a[5] - (c3 + 2.0 * a2 * c2 + c1 * c1 + 3.0 * a2 * a2 * c1 + std::pow(a2, 4))) <= 1e-12);

            // (1 - a2 z - z omega1) f/z = 1
            const auto N = dd.omega1.order();
            const auto h = sub(sub(ComplexSeries({1.0, -a2}, N), ComplexSeries(N)), shift_up(dd.omega1));
            const auto fz = shift_down(f.series()).with_order(N);
            CHECK(max_coeff_diff(mul(h, fz), ComplexSeries({1.0}, N)) <= 1e-10);
        }
        for (std::uint64_t s = 0; s < 20; ++s) {
            const auto f = testing::random_member(s + 700);
            const auto dd = decompose(f);
            const auto gen = SchwarzGenerator::from_psi_series(derivative(dd.omega1));
            const auto rebuilt = build_from_eq2(dd.a2, gen, f.series().order());
            CHECK(max_coeff_diff(rebuilt.series().with_order(dd.omega1.order()),
                                 f.series().with_order(dd.omega1.order())) <= 1e-10);
        }
    }
}

TEST_CASE("Schwarz growth bound")
{
    for (double r : {0.1, 0.5, 0.9}) {
        const Complex z = std::polar(r, 0.4);
        CHECK(schwarz_growth_bound(z, z) == doctest::Approx(0.0).epsilon(1e-15));
    }
    CHECK(schwarz_growth_bound(0.0, 0.5) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    for (int k = 1; k <= 90; ++k) {
        const double r = k / 100.0;
        const double lhs = std::abs(r * r - r * r / 2.0);
        CHECK(lhs <= schwarz_growth_bound(r * r / 2.0, r) + 1e-15);
    }
    SUBCASE("sampled omega1 respect the bound")
    {
        SampleRng rng(15);
        for (std::uint64_t s = 0; s < 20; ++s) {
            const auto f = testing::random_member(s + 900);
            const auto &g = *f.generator();
            for (int n = 0; n < 10; ++n) {
                const Complex z = testing::random_point(rng, 0.95);
                const Complex w = g.omega1(z);
                CHECK(std::abs(z * g.psi(z) - w) <= schwarz_growth_bound(w, z) + 1e-9);
            }
        }
    }
    CHECK(kind_of([] { (void)schwarz_growth_bound(0.6, 0.5); }) == ErrorKind::ArgumentOutOfDomain);
    CHECK(kind_of([] { (void)schwarz_growth_bound(0.0, 1.0); }) == ErrorKind::ArgumentOutOfDomain);
}

TEST_CASE("phi profile")
{
    for (double a : {0.3, 0.7, 1.0}) {
        for (double r : {0.1, 0.2, 0.29}) {
            CHECK(phi_profile(0.0, r, a) == doctest::Approx(r * r / a).epsilon(1e-14));
            CHECK(phi_profile(r, r, a) == doctest::Approx((1 - r * r) * r * r / ((a - r) * (a - r))).epsilon(1e-14));
        }
    }
    double prev = -1.0;
    for (int k = 0; k <= 400; ++k) {
        const double v = phi_profile(0.4 * k / 400.0, 0.4, 1.0);
        CHECK(v >= prev);
        prev = v;
    }
    CHECK(kind_of([] { (void)phi_profile(0.5, 0.4, 1.0); }) == ErrorKind::ArgumentOutOfDomain);
    CHECK(kind_of([] { (void)phi_profile(0.1, 0.4, 0.4); }) == ErrorKind::ArgumentOutOfDomain);
    CHECK(kind_of([] { (void)phi_profile(-0.1, 0.4, 1.0); }) == ErrorKind::ArgumentOutOfDomain);
}
