#ifndef UCLASS_EXPLORER_HPP
#define UCLASS_EXPLORER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "uclass/catalog.hpp"
#include "uclass/membership.hpp"

namespace uclass {

enum class CampaignKind { Theorem1, Theorem2, Theorem3, Conjecture };

std::string_view to_string(CampaignKind kind);
CampaignKind campaign_kind_from_string(std::string_view name);

struct CampaignConfig {
    CampaignKind campaign = CampaignKind::Theorem1;
    std::size_t samples = 1000;
    std::uint64_t seed = 7;
    std::size_t order = kDefaultOrder;
    MembershipPolicy policy;
    /// |a2| is drawn uniformly from (lo, hi].
    double a2_lo = 0.0;
    double a2_hi = 2.0;
    /// Circle |z| = (1 - shrink) |a2| / 2 for theorem3.
    double shrink = 0.01;
    /// Circles (1 - eps) |a2| / 2 probed by the conjecture campaign.
    std::vector<double> epsilon_ladder{0.1, 0.01, 0.001};
    std::vector<double> alpha_grid{-2.0, -1.0, -0.5, 0.0, 0.5, 1.0};
    /// Redraws per sample slot after a rejected (a2, psi) pair.
    int max_attempts = 16;

    /// Defaults with the campaign's natural |a2| range: theorem3 (0, 1],
    /// conjecture (1, 2], otherwise (0, 2].
    static CampaignConfig defaults_for(CampaignKind kind);
    /// Throws Error(InvalidConfig).
    void validate() const;
};

nlohmann::json to_json(const CampaignConfig &cfg);
/// Missing keys keep the defaults of the named campaign.
CampaignConfig campaign_config_from_json(const nlohmann::json &j);

/// A reproducible record of one evaluated quantity: enough to rebuild the
/// function from its parameters alone and to regenerate it from the seed.
struct Certificate {
    std::string campaign;
    std::string quantity;
    std::uint64_t seed = 0;
    std::size_t sample_index = 0;
    int attempt = 0;
    std::size_t order = kDefaultOrder;
    nlohmann::json function;
    std::optional<Complex> point;
    /// epsilon, shrink or alpha, depending on the quantity.
    double parameter = 0.0;
    double value = 0.0;
    double bound = 0.0;
    /// Tolerance used when comparing value against bound.
    double margin = 0.0;
};

nlohmann::json to_json(const Certificate &c);
Certificate certificate_from_json(const nlohmann::json &j);

struct Histogram {
    /// value / bound in [0, 1), `bins` equal cells, plus an overflow count.
    std::vector<std::size_t> counts;
    std::size_t overflow = 0;
};

struct CampaignReport {
    CampaignConfig config;
    std::size_t samples_run = 0;
    std::size_t catalog_samples = 0;
    std::size_t rejected = 0;
    std::size_t errors = 0;
    std::size_t skipped = 0;
    std::map<std::string, Certificate> worst_case;
    std::vector<Certificate> violations;
    /// theorem2 only: functions in M_alpha (0 <= alpha <= 1) but not in U.
    std::vector<Certificate> witnesses;
    std::map<std::string, Histogram> histograms;
    /// theorem2 rows, one per (function, alpha).
    nlohmann::json table = nlohmann::json::array();
    /// "verified" / "violations", or for the conjecture "evidence" /
    /// "counterexample-candidate". Never a proof claim.
    std::string status;
};

nlohmann::json to_json(const CampaignReport &r);

/// Deterministic in (config) for any `threads` (0 = hardware concurrency).
/// Catalog extremals occupy the first sample indices; random samples follow.
CampaignReport run_campaign(const CampaignConfig &cfg, unsigned threads = 0);

/// Sample slot `index` of a campaign: the catalog extremal or the accepted
/// random draw. Returns nothing when every attempt was rejected.
struct CampaignSample {
    DiskFunction function;
    int attempt = 0;
};
std::optional<CampaignSample> campaign_sample(const CampaignConfig &cfg, std::size_t index,
                                              std::size_t *rejections = nullptr);
std::size_t catalog_prefix_size(CampaignKind kind);

/// Recompute a certificate's quantity from its stored function parameters.
double evaluate_certificate(const Certificate &c);

/// Regenerate the sample from (cert.seed, cert.sample_index) under `cfg`,
/// check it matches the stored parameters and that the quantity
/// re-evaluates to within 1e-9. Throws Error(ReplayMismatch) otherwise.
Certificate replay(const Certificate &cert, const CampaignConfig &cfg);

/// Per-sample CSV rows (theorem1: Hankel sweep columns).
std::string campaign_csv(const CampaignConfig &cfg, unsigned threads = 0);

} // namespace uclass

#endif
