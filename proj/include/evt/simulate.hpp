#pragma once

#include <cstdint>
#include <vector>

#include "evt/profile.hpp"

namespace evt {

/// Settings for a sample -> fit -> confidence-interval coverage study.
struct CoverageConfig {
    GevParams truth{0.1, 1.0, 0.0};
    std::size_t n_maxima = 192;
    int replications = 500;
    std::vector<double> ks = {20.0};  // return-level horizons to study
    std::uint64_t seed = 42;
    bool param_cis = true;   // profile CIs for shape/scale/location
    bool level_cis = true;   // profile CIs per k
    FitConfig fit{};
    ProfileOptions profile{};
};

/// Estimate quality for one quantity across replications.
struct CoverageCell {
    double truth = 0;
    double bias = 0;      // mean(estimate) - truth
    double rmse = 0;
    double median = 0;    // median estimate
    int covered = 0;      // replications whose CI contains the truth
    int with_ci = 0;      // replications with a CI computed
    [[nodiscard]] double coverage() const {
        return with_ci > 0 ? static_cast<double>(covered) / with_ci : 0.0;
    }
};

struct CoverageResult {
    int replications = 0;
    int converged = 0;   // replications whose fit converged
    int failed = 0;      // non-converged replications (counted, not fatal)
    CoverageCell shape;
    CoverageCell scale;
    CoverageCell location;
    std::vector<std::pair<double, CoverageCell>> levels;  // (k, cell)
};

/// Run the coverage study: per replication, draw n_maxima from the truth,
/// fit, and test whether each profile CI covers the generating value.
/// Replications are deterministic given the seed.
CoverageResult run_coverage(const CoverageConfig& config);

}  // namespace evt
