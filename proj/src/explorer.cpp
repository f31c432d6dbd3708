#include "uclass/explorer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <thread>

#include "uclass/errors.hpp"
#include "uclass/hankel.hpp"
#include "uclass/json_io.hpp"
#include "uclass/operators.hpp"
#include "uclass/rng.hpp"

namespace uclass {

namespace {

constexpr std::size_t kHistogramBins = 20;
constexpr double kHankelTolerance = 1e-9;
constexpr double kReplayTolerance = 1e-9;
constexpr std::array<double, 8> kFbGrid{0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0};

nlohmann::json catalog_entry(std::string_view id) { return {{"id", std::string(id)}}; }
nlohmann::json fb_entry(double b) { return {{"id", "fb"}, {"params", {b}}}; }

std::vector<nlohmann::json> catalog_prefix(CampaignKind kind)
{
    std::vector<nlohmann::json> out;
    auto add_fb = [&] {
        for (double b : kFbGrid)
            out.push_back(fb_entry(b));
    };
    switch (kind) {
    case CampaignKind::Theorem1:
        for (auto id : {"koebe", "f1", "f2"})
            out.push_back(catalog_entry(id));
        add_fb();
        break;
    case CampaignKind::Theorem2:
        for (auto id : {"koebe", "f1", "f2"})
            out.push_back(catalog_entry(id));
        add_fb();
        for (auto id : {"log_map", "half_plane", "identity", "example_sec1"})
            out.push_back(catalog_entry(id));
        break;
    case CampaignKind::Theorem3:
    case CampaignKind::Conjecture:
        for (auto id : {"half_plane", "koebe"})
            out.push_back(catalog_entry(id));
        add_fb();
        break;
    }
    return out;
}

bool lower_sense(std::string_view quantity) { return quantity == "ps_slack_min"; }

std::string format_param(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

struct SampleOutcome {
    bool present = false;
    bool skipped = false;
    bool error = false;
    std::size_t rejections = 0;
    std::vector<Certificate> quantities;
    std::vector<Certificate> witnesses;
    std::vector<nlohmann::json> rows;
};

Certificate make_cert(const CampaignConfig &cfg, const CampaignSample &s, std::size_t index, std::string quantity)
{
    Certificate c;
    c.campaign = std::string(to_string(cfg.campaign));
    c.quantity = std::move(quantity);
    c.seed = cfg.seed;
    c.sample_index = index;
    c.attempt = s.attempt;
    c.order = cfg.order;
    c.function = s.function.spec();
    return c;
}

void evaluate_theorem1(const CampaignConfig &cfg, const CampaignSample &s, std::size_t index, SampleOutcome &out)
{
    const DiskFunction &f = s.function;
    Certificate h2 = make_cert(cfg, s, index, "H2");
    h2.value = hankel_det(f, 2, 2).modulus;
    h2.bound = 1.0;
    h2.margin = kHankelTolerance;
    Certificate h3 = make_cert(cfg, s, index, "H3");
    h3.value = hankel_det(f, 3, 1).modulus;
    h3.bound = 0.25;
    h3.margin = kHankelTolerance;
    const auto d = decompose(f);
    const auto slacks = prokhorov_szynal_check(d.c[0], d.c[1], d.c[2]);
    Certificate ps = make_cert(cfg, s, index, "ps_slack_min");
    ps.value = *std::min_element(slacks.slack.begin(), slacks.slack.end());
    ps.bound = 0.0;
    ps.margin = kHankelTolerance;
    out.quantities = {std::move(h2), std::move(h3), std::move(ps)};
}

void evaluate_theorem3(const CampaignConfig &cfg, const CampaignSample &s, std::size_t index, SampleOutcome &out)
{
    const DiskFunction &f = s.function;
    const double a = std::abs(f.a2());
    if (a < kDefaultEpsA2) {
        out.skipped = true;
        return;
    }
    for (auto part : {Theorem3Part::A, Theorem3Part::B, Theorem3Part::C}) {
        if (part == Theorem3Part::C && a > 1.0)
            continue;
        const auto rep = theorem3_check(f, part, cfg.shrink, cfg.policy);
        Certificate c = make_cert(cfg, s, index, "theorem3_" + std::string(to_string(part)));
        c.point = rep.witness;
        c.parameter = cfg.shrink;
        c.value = rep.extremal_value;
        c.bound = 1.0;
        c.margin = cfg.policy.delta;
        out.quantities.push_back(std::move(c));
    }
}

void evaluate_conjecture(const CampaignConfig &cfg, const CampaignSample &s, std::size_t index, SampleOutcome &out)
{
    const DiskFunction &f = s.function;
    if (std::abs(f.a2()) < kDefaultEpsA2) {
        out.skipped = true;
        return;
    }
    for (double eps : cfg.epsilon_ladder) {
        const auto rep = theorem3_check(f, Theorem3Part::C, eps, cfg.policy, true);
        Certificate c = make_cert(cfg, s, index, "U_g(eps=" + format_param(eps) + ")");
        c.point = rep.witness;
        c.parameter = eps;
        c.value = rep.extremal_value;
        c.bound = 1.0;
        c.margin = cfg.policy.delta;
        out.quantities.push_back(std::move(c));
    }
}

void evaluate_theorem2(const CampaignConfig &cfg, const CampaignSample &s, std::size_t index, SampleOutcome &out)
{
    const DiskFunction &f = s.function;
    for (double alpha : cfg.alpha_grid) {
        const Theorem2Record rec = theorem2_check(f, alpha, cfg.policy);
        nlohmann::json row = to_json(rec);
        row.erase("m_alpha_report");
        row.erase("u_report");
        row["sample_index"] = index;
        row["function"] = f.spec();
        row["m_alpha_value"] = rec.in_m_alpha.extremal_value;
        row["u_value"] = rec.in_u.extremal_value;
        out.rows.push_back(std::move(row));

        Certificate c = make_cert(cfg, s, index, "U");
        c.point = rec.in_u.witness;
        c.parameter = alpha;
        c.value = rec.in_u.extremal_value;
        c.bound = 1.0;
        c.margin = cfg.policy.delta;
        if (!rec.implication_respected)
            out.quantities.push_back(c);
        else if (alpha >= 0.0 && alpha <= 1.0 && rec.in_m_alpha.verdict == Verdict::In &&
                 rec.in_u.verdict == Verdict::Out)
            out.witnesses.push_back(c);
    }
}

SampleOutcome evaluate_sample(const CampaignConfig &cfg, std::size_t index)
{
    SampleOutcome out;
    std::optional<CampaignSample> s;
    try {
        s = campaign_sample(cfg, index, &out.rejections);
    } catch (const Error &) {
        out.error = true;
        return out;
    }
    if (!s)
        return out;
    out.present = true;
    try {
        switch (cfg.campaign) {
        case CampaignKind::Theorem1: evaluate_theorem1(cfg, *s, index, out); break;
        case CampaignKind::Theorem2: evaluate_theorem2(cfg, *s, index, out); break;
        case CampaignKind::Theorem3: evaluate_theorem3(cfg, *s, index, out); break;
        case CampaignKind::Conjecture: evaluate_conjecture(cfg, *s, index, out); break;
        }
    } catch (const Error &) {
        out.error = true;
        out.present = false;
        out.quantities.clear();
        out.witnesses.clear();
        out.rows.clear();
    }
    return out;
}

std::vector<SampleOutcome> run_samples(const CampaignConfig &cfg, unsigned threads)
{
    const std::size_t total = catalog_prefix_size(cfg.campaign) + cfg.samples;
    std::vector<SampleOutcome> outcomes(total);
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(total, 1)));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < total; i = next++)
            outcomes[i] = evaluate_sample(cfg, i);
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }
    return outcomes;
}

bool is_violation(const Certificate &c)
{
    if (lower_sense(c.quantity))
        return c.value < c.bound - c.margin;
    return c.value > c.bound + c.margin;
}

} // namespace

std::string_view to_string(CampaignKind kind)
{
    switch (kind) {
    case CampaignKind::Theorem1: return "theorem1";
    case CampaignKind::Theorem2: return "theorem2";
    case CampaignKind::Theorem3: return "theorem3";
    case CampaignKind::Conjecture: return "conjecture";
    }
    return "?";
}

CampaignKind campaign_kind_from_string(std::string_view name)
{
    for (auto k : {CampaignKind::Theorem1, CampaignKind::Theorem2, CampaignKind::Theorem3, CampaignKind::Conjecture})
        if (to_string(k) == name)
            return k;
    throw Error(ErrorKind::InvalidConfig, "unknown campaign '" + std::string(name) + "'");
}

CampaignConfig CampaignConfig::defaults_for(CampaignKind kind)
{
    CampaignConfig cfg;
    cfg.campaign = kind;
    switch (kind) {
    case CampaignKind::Theorem1: break;
    case CampaignKind::Theorem2: cfg.samples = 20; break;
    case CampaignKind::Theorem3:
        cfg.a2_hi = 1.0;
        cfg.samples = 200;
        break;
    case CampaignKind::Conjecture:
        cfg.a2_lo = 1.0;
        cfg.a2_hi = 2.0;
        break;
    }
    return cfg;
}

void CampaignConfig::validate() const
{
    auto fail = [](const std::string &m) { throw Error(ErrorKind::InvalidConfig, m); };
    if (samples < 1)
        fail("samples must be >= 1");
    if (!(a2_lo >= 0.0 && a2_lo < a2_hi && a2_hi <= 2.0))
        fail("a2 range must satisfy 0 <= lo < hi <= 2");
    if (order < 5)
        fail("order must be >= 5");
    if (!(shrink > 0.0 && shrink < 1.0))
        fail("shrink must lie in (0, 1)");
    for (double e : epsilon_ladder)
        if (!(e > 0.0 && e < 1.0))
            fail("epsilon ladder entries must lie in (0, 1)");
    if (!(policy.r_max > 0.0 && policy.r_max < 1.0) || policy.grid < 64 || !(policy.delta >= 0.0))
        fail("invalid membership policy");
    if (max_attempts < 1)
        fail("max_attempts must be >= 1");
}

nlohmann::json to_json(const CampaignConfig &cfg)
{
    return {{"campaign", std::string(to_string(cfg.campaign))},
            {"samples", cfg.samples},
            {"seed", cfg.seed},
            {"order", cfg.order},
            {"policy", to_json(cfg.policy)},
            {"a2_range", {cfg.a2_lo, cfg.a2_hi}},
            {"shrink", cfg.shrink},
            {"epsilon_ladder", cfg.epsilon_ladder},
            {"alpha_grid", cfg.alpha_grid},
            {"max_attempts", cfg.max_attempts}};
}

CampaignConfig campaign_config_from_json(const nlohmann::json &j)
{
    const auto kind = campaign_kind_from_string(j.value("campaign", std::string("theorem1")));
    CampaignConfig cfg = CampaignConfig::defaults_for(kind);
    cfg.samples = j.value("samples", cfg.samples);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.order = j.value("order", cfg.order);
    if (j.contains("policy")) {
        const auto &p = j.at("policy");
        cfg.policy.r_max = p.value("r_max", cfg.policy.r_max);
        cfg.policy.grid = p.value("grid", cfg.policy.grid);
        cfg.policy.delta = p.value("delta", cfg.policy.delta);
        cfg.policy.refine_iterations = p.value("refine_iterations", cfg.policy.refine_iterations);
    }
    if (j.contains("a2_range")) {
        cfg.a2_lo = j.at("a2_range").at(0).get<double>();
        cfg.a2_hi = j.at("a2_range").at(1).get<double>();
    }
    cfg.shrink = j.value("shrink", cfg.shrink);
    cfg.epsilon_ladder = j.value("epsilon_ladder", cfg.epsilon_ladder);
    cfg.alpha_grid = j.value("alpha_grid", cfg.alpha_grid);
    cfg.max_attempts = j.value("max_attempts", cfg.max_attempts);
    cfg.validate();
    return cfg;
}

nlohmann::json to_json(const Certificate &c)
{
    return {{"campaign", c.campaign},
            {"quantity", c.quantity},
            {"seed", c.seed},
            {"sample_index", c.sample_index},
            {"attempt", c.attempt},
            {"order", c.order},
            {"function", c.function},
            {"point", c.point ? complex_to_json(*c.point) : nlohmann::json()},
            {"parameter", c.parameter},
            {"value", c.value},
            {"bound", c.bound},
            {"margin", c.margin}};
}

Certificate certificate_from_json(const nlohmann::json &j)
{
    Certificate c;
    c.campaign = j.at("campaign").get<std::string>();
    c.quantity = j.at("quantity").get<std::string>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.sample_index = j.at("sample_index").get<std::size_t>();
    c.attempt = j.value("attempt", 0);
    c.order = j.value("order", kDefaultOrder);
    c.function = j.at("function");
    if (j.contains("point") && !j.at("point").is_null())
        c.point = complex_from_json(j.at("point"));
    c.parameter = j.value("parameter", 0.0);
    c.value = j.at("value").get<double>();
    c.bound = j.value("bound", 0.0);
    c.margin = j.value("margin", 0.0);
    return c;
}

nlohmann::json to_json(const CampaignReport &r)
{
    nlohmann::json worst = nlohmann::json::object();
    for (const auto &[k, c] : r.worst_case)
        worst[k] = to_json(c);
    auto certs = [](const std::vector<Certificate> &v) {
        auto a = nlohmann::json::array();
        for (const auto &c : v)
            a.push_back(to_json(c));
        return a;
    };
    nlohmann::json hist = nlohmann::json::object();
    for (const auto &[k, h] : r.histograms)
        hist[k] = {{"range", {0.0, 1.0}}, {"normalized_by", "bound"}, {"counts", h.counts}, {"overflow", h.overflow}};
    return {{"config", to_json(r.config)},
            {"samples_run", r.samples_run},
            {"catalog_samples", r.catalog_samples},
            {"rejected", r.rejected},
            {"errors", r.errors},
            {"skipped", r.skipped},
            {"worst_case", std::move(worst)},
            {"violations", certs(r.violations)},
            {"witnesses", certs(r.witnesses)},
            {"histograms", std::move(hist)},
            {"table", r.table},
            {"status", r.status}};
}

std::size_t catalog_prefix_size(CampaignKind kind) { return catalog_prefix(kind).size(); }

std::optional<CampaignSample> campaign_sample(const CampaignConfig &cfg, std::size_t index, std::size_t *rejections)
{
    const auto prefix = catalog_prefix(cfg.campaign);
    if (index < prefix.size())
        return CampaignSample{function_from_spec(prefix[index], cfg.order), 0};

    SampleRng rng(derive_seed(cfg.seed, index));
    constexpr double two_pi = 2.0 * std::numbers::pi;
    for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
        const double u = rng.uniform();
        SchwarzKind kind = SchwarzKind::ScaledUnimodular;
        int degree = 0;
        if (u < 0.5) {
            kind = SchwarzKind::BlaschkeProduct;
            degree = static_cast<int>(rng.below(5));
        } else if (u < 0.85) {
            kind = SchwarzKind::RandomPolynomial;
            degree = 1 + static_cast<int>(rng.below(6));
        }
        const std::uint64_t psi_seed = rng.next();
        const double modulus = cfg.a2_lo + (cfg.a2_hi - cfg.a2_lo) * rng.uniform_open_low();
        const Complex a2 = std::polar(modulus, two_pi * rng.uniform());
        // large |a2| leaves little room, so those draws are mostly aligned
        const bool align = rng.uniform() < modulus;
        const SchwarzGenerator g =
            sample_schwarz(psi_seed, kind, degree, cfg.order, align ? std::optional<Complex>(a2) : std::nullopt);
        try {
            return CampaignSample{build_from_eq2(a2, g, cfg.order), attempt};
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::DenominatorVanishes)
                throw;
            if (rejections)
                ++*rejections;
        }
    }
    return std::nullopt;
}

CampaignReport run_campaign(const CampaignConfig &cfg, unsigned threads)
{
    cfg.validate();
    const auto outcomes = run_samples(cfg, threads);

    CampaignReport rep;
    rep.config = cfg;
    rep.catalog_samples = catalog_prefix_size(cfg.campaign);
    for (const auto &o : outcomes) {
        rep.rejected += o.rejections;
        rep.errors += o.error ? 1 : 0;
        if (!o.present)
            continue;
        ++rep.samples_run;
        rep.skipped += o.skipped ? 1 : 0;
        for (const auto &row : o.rows)
            rep.table.push_back(row);
        for (const auto &w : o.witnesses)
            rep.witnesses.push_back(w);
        for (const auto &c : o.quantities) {
            const bool lower = lower_sense(c.quantity);
            if (!lower && cfg.campaign != CampaignKind::Theorem2) {
                auto &h = rep.histograms[c.quantity];
                h.counts.resize(kHistogramBins);
                const double ratio = c.bound != 0.0 ? c.value / c.bound : c.value;
                if (ratio >= 1.0)
                    ++h.overflow;
                else
                    ++h.counts[static_cast<std::size_t>(std::max(0.0, ratio) * kHistogramBins)];
            }
            auto it = rep.worst_case.find(c.quantity);
            if (it == rep.worst_case.end())
                rep.worst_case.emplace(c.quantity, c);
            else if (lower ? c.value < it->second.value : c.value > it->second.value)
                it->second = c;
            if (cfg.campaign == CampaignKind::Theorem2 || is_violation(c))
                rep.violations.push_back(c);
        }
    }
    if (cfg.campaign == CampaignKind::Conjecture)
        rep.status = rep.violations.empty() ? "evidence" : "counterexample-candidate";
    else
        rep.status = rep.violations.empty() ? "verified" : "violations";
    return rep;
}

double evaluate_certificate(const Certificate &c)
{
    const DiskFunction f = function_from_spec(c.function, c.order);
    const std::string &q = c.quantity;
    auto need_point = [&] {
        if (!c.point)
            throw Error(ErrorKind::ReplayMismatch, "certificate for '" + q + "' lacks a point");
        return *c.point;
    };
    if (q == "H2")
        return hankel_det(f, 2, 2).modulus;
    if (q == "H3")
        return hankel_det(f, 3, 1).modulus;
    if (q == "ps_slack_min") {
        const auto d = decompose(f);
        const auto s = prokhorov_szynal_check(d.c[0], d.c[1], d.c[2]);
        return *std::min_element(s.slack.begin(), s.slack.end());
    }
    if (q == "U")
        return std::abs(u_operator(f).pointwise(need_point()));
    if (q == "mocanu")
        return mocanu_functional(f, c.parameter)(need_point()).real();
    if (q.starts_with("theorem3_") || q.starts_with("U_g")) {
        const DiskFunction g = g_transform(f);
        FunctionalTag tag = FunctionalTag::U;
        if (q == "theorem3_a")
            tag = FunctionalTag::GDeviation;
        else if (q == "theorem3_b")
            tag = FunctionalTag::GStarlikeDeviation;
        return std::abs(PointFunctional(tag, g)(need_point()));
    }
    throw Error(ErrorKind::ReplayMismatch, "unknown certificate quantity '" + q + "'");
}

Certificate replay(const Certificate &cert, const CampaignConfig &cfg)
{
    CampaignConfig c = cfg;
    c.seed = cert.seed;
    c.order = cert.order;
    std::optional<CampaignSample> regen;
    try {
        regen = campaign_sample(c, cert.sample_index);
    } catch (const Error &e) {
        throw Error(ErrorKind::ReplayMismatch, std::string("regeneration failed: ") + e.what());
    }
    if (!regen || regen->attempt != cert.attempt ||
        canonical_dump(regen->function.spec()) != canonical_dump(cert.function))
        throw Error(ErrorKind::ReplayMismatch, "regenerated sample differs from the certificate");
    Certificate out = cert;
    out.value = evaluate_certificate(cert);
    if (!(std::abs(out.value - cert.value) <= kReplayTolerance))
        throw Error(ErrorKind::ReplayMismatch, "re-evaluated value differs from the certificate");
    return out;
}

std::string campaign_csv(const CampaignConfig &cfg, unsigned threads)
{
    cfg.validate();
    const auto outcomes = run_samples(cfg, threads);
    std::string out = "sample,attempt,id,quantity,parameter,value,bound\n";
    char buf[128];
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        for (const auto &c : outcomes[i].quantities) {
            std::snprintf(buf, sizeof buf, ",%.17g,%.17g,%.17g\n", c.parameter, c.value, c.bound);
            out += std::to_string(i) + "," + std::to_string(c.attempt) + "," +
                   c.function.value("id", std::string("?")) + "," + c.quantity + buf;
        }
    }
    return out;
}

} // namespace uclass
