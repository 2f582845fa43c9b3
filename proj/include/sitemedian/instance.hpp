#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "sitemedian/errors.hpp"

namespace sitemedian {

/// Which part a site plays: eligible for experimentation (facility side),
/// policy-relevant (client side), or both.
enum class Role { Experimental, Policy, Both };

inline bool is_experimental(Role r) { return r != Role::Policy; }
inline bool is_policy(Role r) { return r != Role::Experimental; }

const char* role_token(Role r);              // "E", "P", "EP"
Role parse_role(const std::string& token);   // throws DataError on anything else

/// Per-site metadata. Covariate vectors live in ProblemInstance::covariates,
/// one row per site, so the whole covariate cloud is a single dense matrix.
struct Site {
    std::string id;
    int index = 0;
    Role role = Role::Experimental;
    std::optional<double> sigma;     // sd of the site's effect estimator
    std::optional<double> cost;      // fixed experimentation cost c_s
    std::optional<double> estimate;  // estimated effect tau_hat_s

    bool operator==(const Site&) const = default;
};

/// Validated, immutable-after-construction problem data.
struct ProblemInstance {
    std::vector<Site> sites;
    std::vector<std::string> covariate_names;
    Eigen::MatrixXd covariates;   // n_sites x dimension, row s = X_s
    bool standardized = false;

    // Derived index sets, ascending. A site with role Both appears in each.
    std::vector<int> experimental_indices;
    std::vector<int> policy_indices;

    int size() const { return static_cast<int>(sites.size()); }
    int dimension() const { return static_cast<int>(covariates.cols()); }
    auto covariate_row(int s) const { return covariates.row(s); }

    const Site& site(int s) const { return sites.at(static_cast<size_t>(s)); }
    int index_of_id(const std::string& id) const;  // throws DataError if unknown

    /// Sigma of site s or a DataError naming the site.
    double require_sigma(int s) const;
    double require_estimate(int s) const;

    bool operator==(const ProblemInstance& other) const;
};

/// Builds an instance and enforces the structural invariants:
/// indices 0..n-1 in order, common dimension d >= 1, sigma/cost >= 0,
/// at least two experimental sites, at least one policy site, and no two
/// sites with identical covariate vectors.
ProblemInstance make_instance(std::vector<Site> sites, Eigen::MatrixXd covariates,
                              std::vector<std::string> covariate_names,
                              bool standardized = false);

/// Denominator convention for the standardization sd.
enum class SdDenominator { NMinus1, N };

/// Returns a copy with every covariate column replaced by its z-score,
/// statistics pooled over all sites. Rejects already-standardized input and
/// zero-variance columns.
ProblemInstance standardize(const ProblemInstance& instance,
                            SdDenominator denom = SdDenominator::NMinus1);

/// Pure diagnostics; never throws.
struct Diagnostics {
    bool assumption2_ok = true;                 // distinct covariate vectors
    double min_pairwise_distance = 0.0;         // Euclidean, over all site pairs
    std::pair<std::string, std::string> closest_pair;
    std::vector<std::string> sites_missing_sigma;
    std::vector<std::string> sites_missing_estimate;
    bool min_lipschitz_available = false;       // estimates on every site
    std::vector<std::string> warnings;
};

Diagnostics validate(const ProblemInstance& instance);

} // namespace sitemedian
