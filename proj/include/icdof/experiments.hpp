#pragma once

#include <cstdint>
#include <vector>

#include "icdof/exporders.hpp"

namespace icdof {

// Empirical tail probabilities over an snr grid with fitted decay exponents.
// For the upper-tail laws `probability` holds P(stat > threshold); for the
// wishart law it holds the lower tail P(stat < threshold). Sampled statistics
// are restricted to each law's support, matching the asymptotic range of the
// underlying order variables.
struct TailEstimate {
    AnalyticLaw law;
    std::vector<double> thresholds;
    std::vector<double> snr_grid;  // linear
    std::int64_t trials = 0;

    std::vector<std::vector<std::int64_t>> counts;  // [snr][threshold]
    std::vector<std::vector<double>> probability;   // [snr][threshold]

    // Per threshold: least-squares slope of -ln(p) against ln(snr), its
    // standard error, and the analytic exponent. The fit needs at least 3
    // grid points with positive probability, else it is NaN. A threshold is
    // flagged below resolution when the fit is unavailable or the expected
    // count at the largest snr falls under 100.
    std::vector<double> fitted_exponent;
    std::vector<double> fitted_stderr;
    std::vector<double> analytic_exponent;
    std::vector<bool> below_resolution;
};

TailEstimate tail_sweep(const AnalyticLaw& law, std::vector<double> thresholds,
                        std::vector<double> snr_grid, std::int64_t trials,
                        std::uint64_t seed, int threads = 1);

// Wishart eigenvalue-order lower tail P[sum (1 - alpha_m)^+ < r] for p x q
// complex Gaussian matrices, p <= q, r in (0, p).
TailEstimate wishart_tail_run(int p, int q, std::vector<double> r_grid,
                              std::vector<double> snr_grid, std::int64_t trials,
                              std::uint64_t seed, int threads = 1);

// Finite-snr pre-log estimate: least-squares slope of mean sum rate against
// log2(snr) over the top half of the grid (at least two points).
struct DofEstimate {
    std::vector<double> snr_grid;
    std::vector<double> sum_rate;
    double slope = 0.0;
    double intercept = 0.0;  // finite-snr remainder at the fit anchor
};

DofEstimate estimate_dof(const std::vector<double>& snr_grid,
                         const std::vector<double>& sum_rates);

// Network-scaling Monte Carlo: at each snr the network holds
// n = round(snr^xi) users (xi = 0 keeps the degenerate fixed network n = K),
// split into floor(n/K) disjoint groups.
enum class Selector { XOrder, SumRate };

struct ScalingPoint {
    double snr = 0.0;
    std::int64_t n = 0;
    std::int64_t groups = 0;
    double mean = 0.0;  // mean of max_i X_{U_i}, or of the best group sum rate
    double stderr_ = 0.0;
};

struct ScalingRun {
    Selector selector = Selector::XOrder;
    std::vector<ScalingPoint> points;
    TheoremBounds bounds;
    double dof_slope = 0.0;  // sum-rate selector only; NaN otherwise
};

ScalingRun scaling_run(double xi, int K, int N, std::vector<double> snr_grid,
                       std::int64_t trials, std::uint64_t seed, Selector selector,
                       int threads = 1);

// Largest-order-statistic bound for exchangeable sequences, checked on a
// constructed family: X_i = Y + noise_i with a shared latent Y (or the
// i.i.d. control with Y = 0). lhs = P(max_i X_i <= x), rhs = P(X_1 <= x)^n.
enum class Mixing { Iid, SharedMean };

struct ExchangeabilityPoint {
    double x = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;    // lhs - rhs
    double stderr_ = 0.0;   // combined standard error of the margin
};

std::vector<ExchangeabilityPoint> exchangeability_check(int n,
                                                        std::vector<double> x_grid,
                                                        std::int64_t trials,
                                                        std::uint64_t seed,
                                                        Mixing latent,
                                                        int threads = 1);

}  // namespace icdof
