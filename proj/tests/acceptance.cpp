// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "uclass/catalog.hpp"
#include "uclass/errors.hpp"
#include "uclass/explorer.hpp"
#include "uclass/hankel.hpp"
#include "uclass/json_io.hpp"
#include "uclass/membership.hpp"
#include "uclass/operators.hpp"
#include "uclass/rng.hpp"

using namespace uclass;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string &what)
    {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

int failures = 0;

void criterion(int number, const char *title, const std::function<void(Outcome &)> &body)
{
    Outcome o;
    try {
        body(o);
    } catch (const std::exception &e) {
        o.pass = false;
        o.detail << " [exception: " << e.what() << "]";
    }
    if (!o.pass)
        ++failures;
    std::printf("%s %2d. %s:%s\n", o.pass ? "PASS" : "FAIL", number, title, o.detail.str().c_str());
    std::fflush(stdout);
}

DiskFunction fb(double b) { return make_catalog("fb", std::vector<double>{b}); }

Complex unit_ball(SampleRng &rng) { return std::polar(std::sqrt(rng.uniform()), kTwoPi * rng.uniform()); }

ComplexSeries monomial(Complex c, std::size_t power, std::size_t order)
{
    std::vector<Complex> v(order + 1);
    v[power] = c;
    return ComplexSeries(std::move(v));
}

/// Accepted random samples drawn through the campaign sampler.
std::vector<DiskFunction> sampled(std::size_t count, std::uint64_t seed)
{
    auto cfg = CampaignConfig::defaults_for(CampaignKind::Theorem1);
    cfg.seed = seed;
    std::vector<DiskFunction> out;
    for (std::size_t i = catalog_prefix_size(cfg.campaign); out.size() < count; ++i)
        if (auto s = campaign_sample(cfg, i))
            out.push_back(s->function);
    return out;
}

} // namespace

int main()
{
    criterion(1, "U of -log(1-z) at 0.99 and class-U verdict", [](Outcome &o) {
        const auto f = make_catalog("log_map");
        const Complex z = 0.99;
        // closed form: f' (z/f)^2 - 1 with f = -log(1-z)
        const Complex oracle = (1.0 / (1.0 - z)) * std::pow(z / -std::log(1.0 - z), 2) - 1.0;
        const Complex u = u_operator(f).pointwise(z);
        const auto rep = test_class(f, {ClassTag::U});
        o.detail << " U(0.99)=" << u.real() << " verdict=" << to_string(rep.verdict)
                 << " sup=" << rep.extremal_value;
        o.require(std::abs(u - 3.621) < 1e-3, "|U(0.99) - 3.621| < 1e-3");
        o.require(std::abs(u - oracle) < 1e-12, "operator matches direct formula");
        o.require(rep.verdict == Verdict::Out, "verdict OUT");
    });

    criterion(2, "z/f = (1-z)^2(1+z/2): starlike quotient at i, verdicts", [](Outcome &o) {
        const auto f = make_catalog("example_sec1");
        const Complex q = starlike_quotient(f)(Complex(0.0, 1.0));
        const auto s = test_class(f, {ClassTag::Starlike});
        const auto u = test_class(f, {ClassTag::U});
        o.detail << " zf'/f(i)=(" << q.real() << "," << q.imag() << ") S*=" << to_string(s.verdict)
                 << " supU=" << u.extremal_value;
        o.require(std::abs(q - Complex(-0.2, 0.6)) < 1e-12, "zf'/f(i) = -0.2+0.6i");
        o.require(s.verdict == Verdict::Out, "starlike verdict OUT");
        o.require(u.extremal_value <= 1.0 + 1e-9, "U scan value <= 1+1e-9");
    });

    criterion(3, "Sharp Hankel values of k, f1, f2", [](Outcome &o) {
        const double hk = hankel_det(make_catalog("koebe"), 2, 2).modulus;
        const double h1 = hankel_det(make_catalog("f1"), 2, 2).modulus;
        const double h3 = hankel_det(make_catalog("f2"), 3, 1).modulus;
        o.detail << " |H2(2)|k=" << hk << " |H2(2)|f1=" << h1 << " |H3(1)|f2=" << h3;
        o.require(std::abs(hk - 1.0) < 1e-12, "koebe");
        o.require(std::abs(h1 - 1.0) < 1e-12, "f1");
        o.require(std::abs(h3 - 0.25) < 1e-12, "f2");
    });

    criterion(4, "Operator identities U_k=-z^2, U_f1=z^2, U_f2=z^3", [](Outcome &o) {
        double worst = 0.0;
        const std::array<std::tuple<const char *, Complex, std::size_t>, 3> cases{
            {{"koebe", -1.0, 2}, {"f1", 1.0, 2}, {"f2", 1.0, 3}}};
        for (const auto &[id, c, p] : cases) {
            const auto s = u_operator(make_catalog(id)).series;
            worst = std::max(worst, max_coeff_diff(s, monomial(c, p, s.order())));
        }
        o.detail << " max coefficient error=" << worst;
        o.require(worst <= 1e-12, "coefficient-wise to 1e-12");
    });

    criterion(5, "U_f = z^2 omega1' on 100 sampled functions", [](Outcome &o) {
        double worst = 0.0;
        for (const auto &f : sampled(100, 501)) {
            const auto lhs = u_operator(f).series;
            const auto rhs = shift_up(shift_up(derivative(f.generator()->omega1_series())));
            worst = std::max(worst, max_coeff_diff(lhs, rhs));
        }
        o.detail << " max coefficient error=" << worst;
        o.require(worst <= 1e-10, "coefficient-wise to 1e-10");
    });

    criterion(6, "Reduced Hankel identities on 1000 random tuples", [](Outcome &o) {
        SampleRng rng(606);
        double worst = 0.0;
        for (int t = 0; t < 1000; ++t) {
            const Complex a2 = unit_ball(rng);
            const std::array<Complex, 3> c{unit_ball(rng), unit_ball(rng), unit_ball(rng)};
            const Complex a3 = c[0] + a2 * a2;
            const Complex a4 = c[1] + 2.0 * a2 * c[0] + a2 * a2 * a2;
            const Complex a5 = c[2] + 2.0 * a2 * c[1] + c[0] * c[0] + 3.0 * a2 * a2 * c[0] + a2 * a2 * a2 * a2;
            const ComplexSeries s({0.0, 1.0, a2, a3, a4, a5}, 8);
            worst = std::max(worst, std::abs(hankel_det(s, 2, 2).value - (a2 * c[1] - c[0] * c[0])));
            worst = std::max(worst, std::abs(hankel_det(s, 3, 1).value - (c[0] * c[2] - c[1] * c[1])));
        }
        o.detail << " max error=" << worst;
        o.require(worst <= 1e-10, "identities to 1e-10");
    });

    criterion(7, "Rotation invariance of |H2(2)|, |H3(1)|", [](Outcome &o) {
        SampleRng rng(707);
        double worst = 0.0;
        for (const auto &f : sampled(20, 702)) {
            const double h2 = hankel_det(f, 2, 2).modulus;
            const double h3 = hankel_det(f, 3, 1).modulus;
            for (int t = 0; t < 50; ++t) {
                const auto g = rotate(f.series(), kTwoPi * rng.uniform());
                worst = std::max(worst, std::abs(hankel_det(g, 2, 2).modulus - h2));
                worst = std::max(worst, std::abs(hankel_det(g, 3, 1).modulus - h3));
            }
        }
        o.detail << " max change=" << worst;
        o.require(worst <= 1e-10, "invariant to 1e-10");
    });

    criterion(8, "Coefficient constraints on 1000 sampled omega1 and the c3 envelope", [](Outcome &o) {
        double worst = 1e300;
        for (const auto &f : sampled(1000, 808)) {
            const auto w = f.generator()->omega1_series();
            const auto s = prokhorov_szynal_check(w[1], w[2], w[3]);
            for (double x : s.slack)
                worst = std::min(worst, x);
        }
        // with c1 >= 0 and c2 = i|c2| the third constraint is tight at the envelope
        double env_gap = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double c1 = i / 100.0;
            for (double c2 : {0.0, (1.0 - c1 * c1) / 2.0}) {
                const double env = eq5_envelope(c1, c2);
                const auto s = prokhorov_szynal_check(c1, Complex(0.0, c2), env);
                env_gap = std::max({env_gap, std::abs(s.slack[2]), std::max(0.0, -s.slack[1])});
            }
        }
        o.detail << " min slack=" << worst << " envelope gap=" << env_gap;
        o.require(worst >= -1e-9, "slacks >= -1e-9");
        o.require(env_gap <= 1e-12, "envelope tight against the third constraint");
    });

    criterion(9, "Theorem 1 campaign, 10^4 samples", [](Outcome &o) {
        auto cfg = CampaignConfig::defaults_for(CampaignKind::Theorem1);
        cfg.samples = 10000;
        cfg.seed = 7;
        const auto rep = run_campaign(cfg, 0);
        const double h2 = rep.worst_case.at("H2").value;
        const double h3 = rep.worst_case.at("H3").value;
        o.detail << " samples_run=" << rep.samples_run << " rejected=" << rep.rejected << " max|H2|=" << h2
                 << " max|H3|=" << h3 << " violations=" << rep.violations.size();
        o.require(rep.samples_run >= 10000, "all slots produced a sample");
        o.require(h2 <= 1.0 + 1e-9 && h2 >= 0.999, "0.999 <= max|H2| <= 1+1e-9");
        o.require(h3 <= 0.25 + 1e-9 && h3 >= 0.2499, "0.2499 <= max|H3| <= 0.25+1e-9");
        o.require(rep.violations.empty(), "zero violations");
    });

    criterion(10, "Theorem 3 campaign, 200 samples, |a2| in (0,1]; phi monotone", [](Outcome &o) {
        auto cfg = CampaignConfig::defaults_for(CampaignKind::Theorem3);
        cfg.samples = 200;
        cfg.seed = 7;
        cfg.shrink = 0.01;
        const auto rep = run_campaign(cfg, 0);
        o.detail << " samples_run=" << rep.samples_run;
        for (auto q : {"theorem3_a", "theorem3_b", "theorem3_c"}) {
            const double v = rep.worst_case.at(q).value;
            o.detail << " " << q << "=" << v;
            o.require(v < 1.0, std::string(q) + " < 1");
        }
        o.require(rep.violations.empty(), "zero violations");
        bool monotone = true;
        for (int ia = 1; ia <= 10; ++ia) {
            const double a = ia / 10.0;
            for (int ir = 1; ir <= 9; ++ir) {
                const double r = ir / 10.0 * a / 2.0;
                double prev = -1.0;
                for (int k = 0; k <= 200; ++k) {
                    const double v = phi_profile(std::min(r, r * k / 200.0), r, a);
                    monotone &= v >= prev;
                    prev = v;
                }
            }
        }
        o.require(monotone, "phi nondecreasing on grids");
    });

    criterion(11, "Starlikeness radius of g_b equals b/2", [](Outcome &o) {
        for (double b : {0.5, 1.0, 1.5, 2.0}) {
            const auto g = g_transform(fb(b));
            const auto r = radius_of(g, {ClassTag::Starlike}, 1e-5, {}, 1.25);
            const double d = std::abs(g.f1(-b / 2.0));
            o.detail << " b=" << b << ":" << r.radius;
            o.require(std::abs(r.radius - b / 2.0) <= 1e-4, "radius within 1e-4 for b=" + std::to_string(b));
            o.require(d <= 1e-14, "g_b'(-b/2) = 0 for b=" + std::to_string(b));
        }
    });

    criterion(12, "Theorem 2 table", [](Outcome &o) {
        const auto lg = make_catalog("log_map");
        const auto k = test_class(lg, {ClassTag::Convex});
        const auto u = test_class(lg, {ClassTag::U});
        const auto hp = theorem2_check(make_catalog("half_plane"), -1.0);
        o.detail << " log: K=" << to_string(k.verdict) << " U=" << to_string(u.verdict)
                 << "; half_plane alpha=-1: M=" << to_string(hp.in_m_alpha.verdict)
                 << " U=" << to_string(hp.in_u.verdict);
        o.require(k.verdict == Verdict::In, "log_map in K");
        o.require(u.verdict == Verdict::Out, "log_map not in U");
        o.require(hp.in_m_alpha.verdict == Verdict::In && hp.in_u.verdict == Verdict::In, "half_plane IN/IN");

        auto cfg = CampaignConfig::defaults_for(CampaignKind::Theorem2);
        cfg.seed = 7;
        const auto rep = run_campaign(cfg, 0);
        std::size_t asserted = 0, broken = 0;
        for (const auto &row : rep.table) {
            if (row.at("alpha").get<double>() > -1.0)
                continue;
            ++asserted;
            broken += !row.at("implication_respected").get<bool>();
        }
        o.detail << "; rows with alpha<=-1: " << asserted << ", not respected: " << broken;
        o.require(asserted > 0 && broken == 0, "implication respected for alpha <= -1");
    });

    criterion(13, "Conjecture campaign, 1000 samples, |a2| in (1,2]", [](Outcome &o) {
        auto cfg = CampaignConfig::defaults_for(CampaignKind::Conjecture);
        cfg.samples = 1000;
        cfg.seed = 7;
        const auto rep = run_campaign(cfg, 0);
        o.detail << " samples_run=" << rep.samples_run << " rejected=" << rep.rejected << " status=" << rep.status;
        for (const auto &[q, c] : rep.worst_case)
            o.detail << " " << q << "=" << c.value;
        for (const auto &c : rep.violations) {
            const auto again = replay(c, cfg);
            o.detail << " certificate " << canonical_dump(to_json(again));
        }
        o.require(rep.violations.empty(), "zero counterexample certificates");
        o.require(rep.status == "evidence", "status evidence");
    });

    criterion(14, "Determinism across thread counts", [](Outcome &o) {
        auto cfg = CampaignConfig::defaults_for(CampaignKind::Theorem1);
        cfg.samples = 1000;
        cfg.seed = 1414;
        const auto a = canonical_dump(to_json(run_campaign(cfg, 1)));
        const auto b = canonical_dump(to_json(run_campaign(cfg, 4)));
        o.detail << " bytes=" << a.size();
        o.require(a == b, "byte-identical canonical JSON");
    });

    std::printf("%d of 14 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
