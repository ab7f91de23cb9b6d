#pragma once

#include <cstdint>

#include "liecon/tensor.hpp"

namespace liecon {

struct ExperimentConfig {
    std::vector<double> radii;     // strictly increasing, >= 2 entries for scans
    int restarts = 64;
    int eval_budget = 20000;       // objective evaluations per restart
    uint64_t seed = 1;
    double det_floor = 1e-8;
    double step_tol = 1e-12;       // simplex size below which a restart stops
    double value_tol = 0.0;        // objective value considered converged

    std::string to_json() const;
    static ExperimentConfig from_json(const std::string& text);
    static ExperimentConfig load(const std::string& path);
};

/// Sum of squared components of act(C, U) - C0 over i<j, k; a large
/// det_floor/|det| penalty replaces the residual when |det U| <= det_floor.
double objective(const StructureTensor<double>& c, const StructureTensor<double>& c0,
                 const Matrix<double>& u, double det_floor);

struct MinimizeResult {
    Matrix<double> u_best;
    double residual = 0;      // best objective value found
    int restart_index = 0;    // restart that produced it
};

/// Multistart derivative-free local search (Nelder-Mead over the n^2
/// entries) with projection onto the Frobenius ball of radius R after
/// every step. Deterministic given config.seed.
MinimizeResult minimize_under_radius(const StructureTensor<Rational>& c,
                                     const StructureTensor<Rational>& c0, double radius,
                                     const ExperimentConfig& config);

struct RadiusRow {
    double radius = 0;
    double best_residual = 0;
    double best_norm = 0;
    int restart_index = 0;
};

struct ExperimentReport {
    std::vector<RadiusRow> rows;
    double slope = 0;          // least-squares slope of log residual vs log radius
    bool slope_meaningful = false;  // false when every residual sits at the floor

    std::string to_json() const;
    static ExperimentReport from_json(const std::string& text);
    std::string to_csv() const;
};

/// minimize_under_radius per radius plus the fitted log-log slope.
/// Residuals below 1e-6 are treated as at-floor and excluded from the fit;
/// slope_meaningful is false when fewer than two rows remain.
ExperimentReport scan_radii(const StructureTensor<Rational>& c,
                            const StructureTensor<Rational>& c0, const ExperimentConfig& config);

}  // namespace liecon
