#include "sitemedian/instance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sitemedian {

const char* role_token(Role r) {
    switch (r) {
        case Role::Experimental: return "E";
        case Role::Policy: return "P";
        case Role::Both: return "EP";
    }
    return "?";
}

Role parse_role(const std::string& token) {
    if (token == "E") return Role::Experimental;
    if (token == "P") return Role::Policy;
    if (token == "EP") return Role::Both;
    throw DataError("unknown role token '" + token + "' (expected E, P, or EP)");
}

int ProblemInstance::index_of_id(const std::string& id) const {
    for (const Site& s : sites)
        if (s.id == id) return s.index;
    throw DataError("unknown site id '" + id + "'");
}

double ProblemInstance::require_sigma(int s) const {
    const Site& st = site(s);
    if (!st.sigma) throw DataError("site '" + st.id + "' has no sigma");
    return *st.sigma;
}

double ProblemInstance::require_estimate(int s) const {
    const Site& st = site(s);
    if (!st.estimate) throw DataError("site '" + st.id + "' has no estimate");
    return *st.estimate;
}

bool ProblemInstance::operator==(const ProblemInstance& other) const {
    return sites == other.sites && covariate_names == other.covariate_names &&
           standardized == other.standardized && covariates.rows() == other.covariates.rows() &&
           covariates.cols() == other.covariates.cols() && covariates == other.covariates;
}

ProblemInstance make_instance(std::vector<Site> sites, Eigen::MatrixXd covariates,
                              std::vector<std::string> covariate_names, bool standardized) {
    const int n = static_cast<int>(sites.size());
    if (n == 0) throw DataError("instance has no sites");
    if (covariates.rows() != n)
        throw DataError("covariate matrix has " + std::to_string(covariates.rows()) +
                        " rows for " + std::to_string(n) + " sites");
    if (covariates.cols() < 1) throw DataError("instance needs at least one covariate column");
    if (static_cast<int>(covariate_names.size()) != covariates.cols())
        throw DataError("covariate name count does not match dimension");

    ProblemInstance inst;
    inst.sites = std::move(sites);
    inst.covariates = std::move(covariates);
    inst.covariate_names = std::move(covariate_names);
    inst.standardized = standardized;

    for (int s = 0; s < n; ++s) {
        Site& st = inst.sites[static_cast<size_t>(s)];
        if (st.index != s)
            throw DataError("site '" + st.id + "' has index " + std::to_string(st.index) +
                            ", expected " + std::to_string(s));
        if (st.sigma && *st.sigma < 0)
            throw DataError("site '" + st.id + "' has negative sigma");
        if (st.cost && *st.cost < 0)
            throw DataError("site '" + st.id + "' has negative cost");
        for (int t = 0; t < s; ++t)
            if (inst.sites[static_cast<size_t>(t)].id == st.id)
                throw DataError("duplicate site id '" + st.id + "'");
        if (is_experimental(st.role)) inst.experimental_indices.push_back(s);
        if (is_policy(st.role)) inst.policy_indices.push_back(s);
    }

    if (inst.experimental_indices.size() < 2)
        throw DataError("need at least two experimental sites, got " +
                        std::to_string(inst.experimental_indices.size()));
    if (inst.policy_indices.empty()) throw DataError("need at least one policy site");

    // Identical covariate vectors break the nearest-neighbor construction.
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t)
            if (inst.covariates.row(s) == inst.covariates.row(t))
                throw DataError("sites '" + inst.sites[static_cast<size_t>(s)].id + "' and '" +
                                inst.sites[static_cast<size_t>(t)].id +
                                "' have identical covariate vectors");

    return inst;
}

ProblemInstance standardize(const ProblemInstance& instance, SdDenominator denom) {
    if (instance.standardized)
        throw DataError("instance is already standardized");

    const int n = instance.size();
    const int d = instance.dimension();
    const double div = denom == SdDenominator::NMinus1 ? n - 1 : n;
    if (div <= 0) throw DataError("too few sites to standardize");

    Eigen::MatrixXd z = instance.covariates;
    for (int c = 0; c < d; ++c) {
        const double mean = z.col(c).mean();
        const double ss = (z.col(c).array() - mean).square().sum();
        if (ss == 0.0)
            throw DataError("covariate column '" + instance.covariate_names[static_cast<size_t>(c)] +
                            "' has zero variance");
        const double sd = std::sqrt(ss / div);
        z.col(c) = (z.col(c).array() - mean) / sd;
    }
    return make_instance(instance.sites, std::move(z), instance.covariate_names, true);
}

Diagnostics validate(const ProblemInstance& instance) {
    Diagnostics diag;
    const int n = instance.size();

    diag.min_pairwise_distance = std::numeric_limits<double>::infinity();
    for (int s = 0; s < n; ++s) {
        for (int t = s + 1; t < n; ++t) {
            const double dist = (instance.covariate_row(s) - instance.covariate_row(t)).norm();
            if (dist < diag.min_pairwise_distance) {
                diag.min_pairwise_distance = dist;
                diag.closest_pair = {instance.site(s).id, instance.site(t).id};
            }
            if (dist == 0.0) diag.assumption2_ok = false;
        }
    }

    for (const Site& s : instance.sites) {
        if (!s.sigma) diag.sites_missing_sigma.push_back(s.id);
        if (!s.estimate) diag.sites_missing_estimate.push_back(s.id);
    }
    diag.min_lipschitz_available = diag.sites_missing_estimate.empty();

    if (!diag.sites_missing_sigma.empty())
        diag.warnings.push_back("regret bounds requiring sigma will fail for selections serving: " +
                                [&] {
                                    std::string joined;
                                    for (const auto& id : diag.sites_missing_sigma) {
                                        if (!joined.empty()) joined += ", ";
                                        joined += id;
                                    }
                                    return joined;
                                }());
    if (!diag.min_lipschitz_available)
        diag.warnings.push_back("min_lipschitz unavailable: estimates missing on some sites");
    return diag;
}

} // namespace sitemedian
