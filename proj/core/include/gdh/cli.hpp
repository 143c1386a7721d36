#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gdh/model.hpp"

namespace gdh::cli {

inline constexpr const char* version = "0.1.0";

/// Resolved configuration of one CLI invocation. Every command writes its
/// artifacts plus a manifest.json capturing all resolved parameters, grid,
/// tolerances and the version, so runs are reproducible byte for byte.
struct RunConfig {
    std::string command; // validate | profile | spectrum | scan-pi2 | evolve |
                         // blowup | reproduce-figure1 | reproduce-theorem1
    ModelParams params;
    std::optional<std::string> paramsFile; // JSON overrides inline params

    std::optional<double> L;
    std::optional<int> N;

    double dt;
    double Tmax;
    double blowThreshold;
    int recordEvery = 1;
    std::string ic = "equilibrium"; // equilibrium | equilibrium+eig:k:eps |
                                    // gaussian:amp:width | weighted:amp
    double R0factor = 1.5;          // blowup: R(0) = R0factor * R1

    std::vector<double> Zs;         // scan-pi2 / reproduce-theorem1 override
    bool eigenvectorCsv = false;    // spectrum: also write eigenvectors.csv

    std::string outDir = ".";

    RunConfig();
};

/// Executes the command; returns 0 on success, 1 on regime violations
/// (the violated inequality goes to stderr), 2 on numerical failures.
int run(const RunConfig& config);

} // namespace gdh::cli
