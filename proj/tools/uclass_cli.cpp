// Command-line front end: every subcommand prints a JSON document that
// echoes its effective configuration.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "uclass/catalog.hpp"
#include "uclass/errors.hpp"
#include "uclass/explorer.hpp"
#include "uclass/hankel.hpp"
#include "uclass/json_io.hpp"
#include "uclass/membership.hpp"
#include "uclass/operators.hpp"

namespace {

using nlohmann::json;
using namespace uclass;

constexpr int kExitIn = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitOut = 3;
constexpr int kExitBoundary = 4;

struct FunctionArgs {
    std::string id;
    std::vector<double> b;
    std::string series_file;
    std::size_t order = kDefaultOrder;
    bool of_g = false;
};

struct OutputArgs {
    std::string out;
    bool json = true;
    bool csv = false;
};

void add_function_options(CLI::App *cmd, FunctionArgs &fa, bool allow_g)
{
    cmd->add_option("--id", fa.id, "catalog id (koebe, f1, f2, fb, log_map, half_plane, identity, example_sec1)");
    cmd->add_option("--b", fa.b, "parameter b of fb, 0 < b <= 2");
    cmd->add_option("--series-file", fa.series_file, "JSON file holding a series or a function spec");
    cmd->add_option("--order", fa.order, "series truncation order")->check(CLI::Range(5, 4096));
    if (allow_g)
        cmd->add_flag("--of-g", fa.of_g, "apply the g-transform (z/f - 1)/(-a2) first");
}

void add_output_options(CLI::App *cmd, OutputArgs &oa, bool allow_csv)
{
    cmd->add_option("--out", oa.out, "write the report to this file instead of stdout");
    cmd->add_flag("--json", oa.json, "JSON output (default)");
    if (allow_csv)
        cmd->add_flag("--csv", oa.csv, "CSV output");
}

void add_policy_options(CLI::App *cmd, MembershipPolicy &p)
{
    cmd->add_option("--r-max", p.r_max, "scan radius for class tests");
    cmd->add_option("--grid", p.grid, "points on the scan circle")->check(CLI::Range(64, 1 << 22));
    cmd->add_option("--delta", p.delta, "verdict margin");
}

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

DiskFunction load_function(const FunctionArgs &fa)
{
    if (fa.id.empty() == fa.series_file.empty())
        throw UsageError("exactly one of --id or --series-file is required");
    DiskFunction f = [&] {
        if (!fa.series_file.empty()) {
            std::ifstream in(fa.series_file);
            if (!in)
                throw UsageError("cannot read " + fa.series_file);
            const json j = json::parse(in);
            if (j.contains("id"))
                return function_from_spec(j, fa.order);
            if (j.contains("series"))
                return from_series(j.at("series").get<ComplexSeries>());
            if (j.contains("function"))
                return function_from_spec(j.at("function").value("spec", j.at("function")), fa.order);
            return from_series(j.get<ComplexSeries>());
        }
        if (fa.id != "fb" && !fa.b.empty())
            throw UsageError("--b only applies to --id fb");
        return make_catalog(fa.id, fa.b, fa.order);
    }();
    return fa.of_g ? g_transform(f) : f;
}

void emit(const OutputArgs &oa, const std::string &text)
{
    if (oa.out.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream out(oa.out);
    if (!out)
        throw UsageError("cannot write " + oa.out);
    out << text << '\n';
}

json function_echo(const FunctionArgs &fa, const DiskFunction &f)
{
    return {{"spec", f.spec()}, {"order", fa.order}, {"of_g", fa.of_g}};
}

int verdict_exit(Verdict v)
{
    switch (v) {
    case Verdict::In: return kExitIn;
    case Verdict::Out: return kExitOut;
    case Verdict::Boundary: return kExitBoundary;
    }
    return kExitFailure;
}

Complex parse_point(const std::string &s)
{
    std::string t = s;
    for (auto &ch : t)
        if (ch == ',')
            ch = ' ';
    std::istringstream is(t);
    double re = 0.0, im = 0.0;
    if (!(is >> re))
        throw UsageError("--z expects 're,im'");
    is >> im;
    return {re, im};
}

std::pair<double, double> parse_range(const std::string &s)
{
    const auto colon = s.find(':');
    if (colon == std::string::npos)
        throw UsageError("--a2 expects lo:hi");
    try {
        return {std::stod(s.substr(0, colon)), std::stod(s.substr(colon + 1))};
    } catch (const std::exception &) {
        throw UsageError("--a2 expects lo:hi");
    }
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Numerical toolkit for the class U of normalized analytic functions"};
    app.require_subcommand(1);

    FunctionArgs fa;
    OutputArgs oa;
    MembershipPolicy policy;
    std::string class_name = "U";
    double alpha = 0.0;
    int q = 2, n = 2;
    double tol = 1e-4;
    double r_hi = 0.0;
    std::string z_text = "0.5,0";

    auto *membership = app.add_subcommand("membership", "numerical class test; exit 0 IN, 3 OUT, 4 BOUNDARY");
    add_function_options(membership, fa, true);
    add_output_options(membership, oa, false);
    add_policy_options(membership, policy);
    membership->add_option("--class", class_name, "U, starlike, convex, mocanu, bounded_turning");
    membership->add_option("--alpha", alpha, "alpha for the mocanu class");

    auto *hankel = app.add_subcommand("hankel", "Hankel determinant H_q(n)");
    add_function_options(hankel, fa, true);
    add_output_options(hankel, oa, true);
    hankel->add_option("--q", q, "determinant size (1..4)");
    hankel->add_option("--n", n, "first coefficient index");

    auto *radius = app.add_subcommand("radius", "largest radius on which a class property holds");
    add_function_options(radius, fa, true);
    add_output_options(radius, oa, false);
    add_policy_options(radius, policy);
    radius->add_option("--class", class_name, "U, starlike, convex, mocanu, bounded_turning");
    radius->add_option("--alpha", alpha, "alpha for the mocanu class");
    radius->add_option("--tol", tol, "bracket width");
    radius->add_option("--r-hi", r_hi, "top of the bisection range (default: --r-max)");

    CampaignConfig cfg;
    std::string kind = "theorem1";
    std::string config_file, a2_text;
    unsigned threads = 0;
    auto *campaign = app.add_subcommand("campaign", "seeded randomized verification campaign");
    campaign->add_option("--kind", kind, "theorem1, theorem2, theorem3, conjecture");
    campaign->add_option("--config", config_file, "JSON file mirroring the campaign configuration");
    campaign->add_option("--samples", cfg.samples, "random samples after the catalog extremals");
    campaign->add_option("--seed", cfg.seed, "64-bit seed");
    campaign->add_option("--order", cfg.order, "series order")->check(CLI::Range(5, 4096));
    campaign->add_option("--a2", a2_text, "range lo:hi of |a2|");
    campaign->add_option("--shrink", cfg.shrink, "theorem3 circle shrink factor");
    campaign->add_option("--threads", threads, "worker threads (wall time only)");
    add_policy_options(campaign, cfg.policy);
    add_output_options(campaign, oa, true);

    auto *decompose_cmd = app.add_subcommand("decompose", "a2, omega1 and c1..c3 of z/f = 1 - a2 z - z omega1");
    add_function_options(decompose_cmd, fa, true);
    add_output_options(decompose_cmd, oa, false);

    auto *eval_cmd = app.add_subcommand("eval", "evaluate f and its functionals at a point");
    add_function_options(eval_cmd, fa, true);
    add_output_options(eval_cmd, oa, false);
    eval_cmd->add_option("--z", z_text, "point 're,im'");
    eval_cmd->add_option("--alpha", alpha, "alpha for the mocanu functional");

    auto *catalog_cmd = app.add_subcommand("catalog", "list catalog ids, or print one entry's series");
    add_function_options(catalog_cmd, fa, false);
    add_output_options(catalog_cmd, oa, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*membership) {
            const DiskFunction f = load_function(fa);
            const auto rep = test_class(f, ClassSpec::parse(class_name, alpha), policy);
            json out{{"command", "membership"},
                     {"function", function_echo(fa, f)},
                     {"policy", to_json(policy)},
                     {"report", to_json(rep)}};
            emit(oa, canonical_dump(out, 2));
            return verdict_exit(rep.verdict);
        }
        if (*hankel) {
            const DiskFunction f = load_function(fa);
            const auto rep = hankel_det(f, q, n);
            if (oa.csv) {
                emit(oa, hankel_csv_header() + "\n" + hankel_csv_row(f));
                return 0;
            }
            json out{{"command", "hankel"}, {"function", function_echo(fa, f)}, {"report", to_json(rep)}};
            emit(oa, canonical_dump(out, 2));
            return 0;
        }
        if (*radius) {
            const DiskFunction f = load_function(fa);
            const auto res = radius_of(f, ClassSpec::parse(class_name, alpha), tol, policy, r_hi);
            json out{{"command", "radius"},
                     {"function", function_echo(fa, f)},
                     {"policy", to_json(policy)},
                     {"r_hi", r_hi > 0.0 ? r_hi : policy.r_max},
                     {"report", to_json(res)}};
            emit(oa, canonical_dump(out, 2));
            return 0;
        }
        if (*campaign) {
            CampaignConfig effective;
            if (!config_file.empty()) {
                std::ifstream in(config_file);
                if (!in)
                    throw UsageError("cannot read " + config_file);
                effective = campaign_config_from_json(json::parse(in));
            } else {
                effective = CampaignConfig::defaults_for(campaign_kind_from_string(kind));
            }
            // explicit flags override the file / campaign defaults
            if (campaign->count("--kind") && !config_file.empty())
                effective.campaign = campaign_kind_from_string(kind);
            if (campaign->count("--samples"))
                effective.samples = cfg.samples;
            if (campaign->count("--seed"))
                effective.seed = cfg.seed;
            if (campaign->count("--order"))
                effective.order = cfg.order;
            if (campaign->count("--shrink"))
                effective.shrink = cfg.shrink;
            if (campaign->count("--r-max"))
                effective.policy.r_max = cfg.policy.r_max;
            if (campaign->count("--grid"))
                effective.policy.grid = cfg.policy.grid;
            if (campaign->count("--delta"))
                effective.policy.delta = cfg.policy.delta;
            if (!a2_text.empty())
                std::tie(effective.a2_lo, effective.a2_hi) = parse_range(a2_text);
            effective.validate();
            if (oa.csv) {
                emit(oa, campaign_csv(effective, threads));
                return 0;
            }
            const auto rep = run_campaign(effective, threads);
            emit(oa, canonical_dump(to_json(rep), 2));
            return 0;
        }
        if (*decompose_cmd) {
            const DiskFunction f = load_function(fa);
            const auto d = decompose(f);
            const auto s = prokhorov_szynal_check(d.c[0], d.c[1], d.c[2]);
            const auto a = coefficients_from_omega(d.a2, d.c);
            json residual = json::array();
            for (int k = 0; k < 3; ++k)
                residual.push_back(std::abs(a[static_cast<std::size_t>(k)] - f.series().coeff(static_cast<std::size_t>(k + 3))));
            json out{{"command", "decompose"},
                     {"function", function_echo(fa, f)},
                     {"a2", complex_to_json(d.a2)},
                     {"c", {complex_to_json(d.c[0]), complex_to_json(d.c[1]), complex_to_json(d.c[2])}},
                     {"omega1", d.omega1},
                     {"constraint_slacks", s.slack},
                     {"coefficient_identity_residuals", residual}};
            emit(oa, canonical_dump(out, 2));
            return 0;
        }
        if (*eval_cmd) {
            const DiskFunction f = load_function(fa);
            const Complex z = parse_point(z_text);
            const Jet j = f.jet(z);
            json values{{"f", complex_to_json(j.value)}, {"f1", complex_to_json(j.d1)}, {"f2", complex_to_json(j.d2)}};
            auto try_put = [&](const char *key, auto &&fn) {
                try {
                    values[key] = complex_to_json(fn());
                } catch (const Error &e) {
                    values[key] = nullptr;
                }
            };
            try_put("U", [&] { return u_operator(f).pointwise(z); });
            try_put("starlike_quotient", [&] { return starlike_quotient(f)(z); });
            try_put("convex_quotient", [&] { return convex_quotient(f)(z); });
            try_put("mocanu", [&] { return mocanu_functional(f, alpha)(z); });
            try_put("series_f", [&] { return eval(f.series(), z); });
            json out{{"command", "eval"},
                     {"function", function_echo(fa, f)},
                     {"z", complex_to_json(z)},
                     {"alpha", alpha},
                     {"values", values}};
            emit(oa, canonical_dump(out, 2));
            return 0;
        }
        if (*catalog_cmd) {
            if (fa.id.empty() && fa.series_file.empty()) {
                json ids = json::array();
                for (auto id : catalog_ids())
                    ids.push_back(std::string(id));
                emit(oa, canonical_dump(json{{"command", "catalog"}, {"ids", ids}}, 2));
                return 0;
            }
            const DiskFunction f = load_function(fa);
            json out{{"command", "catalog"},
                     {"function", function_echo(fa, f)},
                     {"a2", complex_to_json(f.a2())},
                     {"series", f.series()}};
            emit(oa, canonical_dump(out, 2));
            return 0;
        }
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        const auto k = e.kind();
        const bool usage = k == ErrorKind::UnknownId || k == ErrorKind::ParamOutOfRange ||
                           k == ErrorKind::InvalidConfig || k == ErrorKind::InsufficientOrder ||
                           k == ErrorKind::ArgumentOutOfDomain;
        return usage ? kExitUsage : kExitFailure;
    } catch (const json::exception &e) {
        std::cerr << "usage error: malformed JSON input: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
