#include "icdof/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "icdof/errors.hpp"
#include "icdof/parallel.hpp"
#include "icdof/rates.hpp"
#include "icdof/rng.hpp"

namespace icdof {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_snr_grid(const std::vector<double>& grid) {
    if (grid.empty()) throw ConfigError("snr grid is empty");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 1.0)) throw ConfigError("snr grid entries must exceed 1");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            throw ConfigError("snr grid must be strictly increasing");
    }
}

struct OlsFit {
    double slope = kNaN;
    double stderr_ = kNaN;
    double intercept = kNaN;
};

OlsFit ols(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t m = x.size();
    OlsFit f;
    if (m < 2) return f;
    double xm = 0.0, ym = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        xm += x[i];
        ym += y[i];
    }
    xm /= static_cast<double>(m);
    ym /= static_cast<double>(m);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        sxx += (x[i] - xm) * (x[i] - xm);
        sxy += (x[i] - xm) * (y[i] - ym);
    }
    if (sxx <= 0.0) return f;
    f.slope = sxy / sxx;
    f.intercept = ym - f.slope * xm;
    if (m > 2) {
        double rss = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double r = y[i] - (f.intercept + f.slope * x[i]);
            rss += r * r;
        }
        f.stderr_ = std::sqrt(rss / static_cast<double>(m - 2) / sxx);
    } else {
        f.stderr_ = 0.0;
    }
    return f;
}

// ---- per-law statistic samplers --------------------------------------------
//
// Each trial draws its gains once; the exponential orders at every snr are
// deterministic rescalings by 1/ln(snr). Statistics are clamped to the law's
// support.

struct LawSampler {
    AnalyticLaw law;
    std::vector<double> inv_log_snr;

    explicit LawSampler(const AnalyticLaw& l, const std::vector<double>& grid)
        : law(l) {
        inv_log_snr.reserve(grid.size());
        for (double s : grid) inv_log_snr.push_back(1.0 / std::log(s));
    }

    // Fills stat[s] for each snr index s of one trial.
    void sample(TrialRng& rng, std::vector<double>& stat) const {
        switch (law.id) {
            case LawId::ZSiso: sample_z_siso(rng, stat); break;
            case LawId::XSiso: sample_x_siso(rng, stat); break;
            case LawId::BetaAlpha: sample_beta_alpha(rng, stat); break;
            case LawId::ZMimo: sample_z_mimo(rng, stat, 1); break;
            case LawId::XMimo: sample_z_mimo(rng, stat, law.K); break;
            case LawId::Wishart: sample_wishart(rng, stat); break;
        }
    }

  private:
    void sample_z_siso(TrialRng& rng, std::vector<double>& stat) const {
        const int k1 = law.K - 1;
        double max_ln_int = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < k1; ++i)
            max_ln_int = std::max(max_ln_int, std::log(rng.next_exp()));
        const double ln_dir = std::log(rng.next_exp());
        for (std::size_t s = 0; s < inv_log_snr.size(); ++s) {
            const double c = inv_log_snr[s];
            const double beta = k1 > 0 ? std::min(-max_ln_int * c, 1.0) : 1.0;
            const double z = std::max(0.0, beta - (-ln_dir * c));
            stat[s] = std::min(z, 1.0);
        }
    }

    void sample_x_siso(TrialRng& rng, std::vector<double>& stat) const {
        const int K = law.K;
        // ln of squared gains for the K x K block of the active set.
        thread_local std::vector<double> ln_g;
        ln_g.resize(static_cast<std::size_t>(K) * K);
        for (auto& v : ln_g) v = std::log(rng.next_exp());
        for (std::size_t s = 0; s < inv_log_snr.size(); ++s) {
            const double c = inv_log_snr[s];
            double x = 0.0;
            for (int u = 0; u < K; ++u) {
                double beta = 1.0;
                for (int v = 0; v < K; ++v) {
                    if (v == u) continue;
                    beta = std::min(
                        beta, -ln_g[static_cast<std::size_t>(u) * K + v] * c);
                }
                const double auu = -ln_g[static_cast<std::size_t>(u) * K + u] * c;
                x += std::min(std::max(0.0, beta - auu), 1.0);
            }
            stat[s] = x;
        }
    }

    void sample_beta_alpha(TrialRng& rng, std::vector<double>& stat) const {
        const double ln_int = std::log(rng.next_exp());
        const double ln_dir = std::log(rng.next_exp());
        for (std::size_t s = 0; s < inv_log_snr.size(); ++s) {
            const double c = inv_log_snr[s];
            const double beta = std::min(-ln_int * c, 1.0);
            stat[s] = std::min(std::max(0.0, beta - (-ln_dir * c)), 1.0);
        }
    }

    // One user's Z for `users` == 1, or the set statistic X for K users.
    void sample_z_mimo(TrialRng& rng, std::vector<double>& stat, int users) const {
        const int N = law.N;
        const int K = law.K;
        std::fill(stat.begin(), stat.end(), 0.0);
        for (int uu = 0; uu < users; ++uu) {
            CMatrix hd(static_cast<std::size_t>(N), static_cast<std::size_t>(N));
            for (std::size_t i = 0; i < hd.rows(); ++i)
                for (std::size_t j = 0; j < hd.cols(); ++j)
                    hd(i, j) = rng.next_cgauss();
            CMatrix hi(static_cast<std::size_t>(N),
                       static_cast<std::size_t>(K - 1) * N);
            for (std::size_t i = 0; i < hi.rows(); ++i)
                for (std::size_t j = 0; j < hi.cols(); ++j)
                    hi(i, j) = rng.next_cgauss();

            const auto mu = hermitian_eigenvalues(gram(hd));
            const auto lam = hermitian_eigenvalues(gram(hi));
            for (std::size_t s = 0; s < inv_log_snr.size(); ++s) {
                const double c = inv_log_snr[s];
                double z = 0.0;
                for (double m : mu)
                    z += 1.0 - (m > 0.0 ? -std::log(m) * c
                                        : std::numeric_limits<double>::infinity());
                for (double l : lam) {
                    const double b = l > 0.0
                                         ? -std::log(l) * c
                                         : std::numeric_limits<double>::infinity();
                    z -= std::max(0.0, 1.0 - b);
                }
                stat[s] += std::min(std::max(0.0, z), static_cast<double>(N));
            }
        }
    }

    void sample_wishart(TrialRng& rng, std::vector<double>& stat) const {
        CMatrix a(static_cast<std::size_t>(law.p), static_cast<std::size_t>(law.q));
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = rng.next_cgauss();
        const auto mu = hermitian_eigenvalues(gram(a));
        for (std::size_t s = 0; s < inv_log_snr.size(); ++s) {
            const double c = inv_log_snr[s];
            double sum = 0.0;
            for (double m : mu) {
                const double al = m > 0.0 ? -std::log(m) * c
                                          : std::numeric_limits<double>::infinity();
                sum += std::min(std::max(0.0, 1.0 - al), 1.0);
            }
            stat[s] = sum;
        }
    }
};

}  // namespace

TailEstimate tail_sweep(const AnalyticLaw& law, std::vector<double> thresholds,
                        std::vector<double> snr_grid, std::int64_t trials,
                        std::uint64_t seed, int threads) {
    law.validate();
    check_snr_grid(snr_grid);
    if (thresholds.empty()) throw ConfigError("tail_sweep: no thresholds");
    if (trials < 1000) throw ConfigError("tail_sweep: need at least 1000 trials");

    const std::size_t ns = snr_grid.size();
    const std::size_t nt = thresholds.size();
    const bool lower_tail = law.id == LawId::Wishart;

    const LawSampler sampler(law, snr_grid);
    using Counts = std::vector<std::int64_t>;
    Counts counts = parallel_blocks<Counts>(
        trials, threads, Counts(ns * nt, 0),
        [&](std::int64_t lo, std::int64_t hi) {
            Counts part(ns * nt, 0);
            std::vector<double> stat(ns);
            for (std::int64_t t = lo; t < hi; ++t) {
                TrialRng rng(seed, static_cast<std::uint64_t>(t));
                sampler.sample(rng, stat);
                for (std::size_t s = 0; s < ns; ++s)
                    for (std::size_t i = 0; i < nt; ++i) {
                        const bool hit = lower_tail ? stat[s] < thresholds[i]
                                                    : stat[s] > thresholds[i];
                        part[s * nt + i] += hit ? 1 : 0;
                    }
            }
            return part;
        },
        [](Counts& acc, const Counts& p) {
            for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += p[i];
        });

    TailEstimate est;
    est.law = law;
    est.thresholds = std::move(thresholds);
    est.snr_grid = std::move(snr_grid);
    est.trials = trials;
    est.counts.assign(ns, std::vector<std::int64_t>(nt, 0));
    est.probability.assign(ns, std::vector<double>(nt, 0.0));
    for (std::size_t s = 0; s < ns; ++s)
        for (std::size_t i = 0; i < nt; ++i) {
            est.counts[s][i] = counts[s * nt + i];
            est.probability[s][i] =
                static_cast<double>(counts[s * nt + i]) / static_cast<double>(trials);
        }

    est.fitted_exponent.assign(nt, kNaN);
    est.fitted_stderr.assign(nt, kNaN);
    est.analytic_exponent.assign(nt, 0.0);
    est.below_resolution.assign(nt, false);
    for (std::size_t i = 0; i < nt; ++i) {
        est.analytic_exponent[i] = analytic_tail_exponent(est.law, est.thresholds[i]);
        std::vector<double> xs, ys;
        for (std::size_t s = 0; s < ns; ++s)
            if (est.counts[s][i] > 0) {
                xs.push_back(std::log(est.snr_grid[s]));
                ys.push_back(-std::log(est.probability[s][i]));
            }
        if (xs.size() >= 3) {
            const OlsFit f = ols(xs, ys);
            est.fitted_exponent[i] = f.slope;
            est.fitted_stderr[i] = f.stderr_;
        }
        est.below_resolution[i] =
            xs.size() < 3 || est.counts[ns - 1][i] < 100;
    }
    return est;
}

TailEstimate wishart_tail_run(int p, int q, std::vector<double> r_grid,
                              std::vector<double> snr_grid, std::int64_t trials,
                              std::uint64_t seed, int threads) {
    if (p < 1 || q < 1 || p > q) throw ConfigError("wishart_tail_run: need 1 <= p <= q");
    for (double r : r_grid)
        if (!(r > 0.0) || !(r < static_cast<double>(p)))
            throw ConfigError("wishart_tail_run: thresholds must lie in (0, p)");
    return tail_sweep(AnalyticLaw::wishart(p, q), std::move(r_grid),
                      std::move(snr_grid), trials, seed, threads);
}

DofEstimate estimate_dof(const std::vector<double>& snr_grid,
                         const std::vector<double>& sum_rates) {
    if (snr_grid.size() != sum_rates.size())
        throw ConfigError("estimate_dof: grid and rates differ in length");
    if (snr_grid.size() < 2) throw ConfigError("estimate_dof: need at least 2 points");

    const std::size_t m = snr_grid.size();
    const std::size_t h = std::max<std::size_t>(2, (m + 1) / 2);
    std::vector<double> xs, ys;
    for (std::size_t i = m - h; i < m; ++i) {
        xs.push_back(std::log2(snr_grid[i]));
        ys.push_back(sum_rates[i]);
    }
    const OlsFit f = ols(xs, ys);

    DofEstimate d;
    d.snr_grid = snr_grid;
    d.sum_rate = sum_rates;
    d.slope = f.slope;
    d.intercept = f.intercept;
    return d;
}

namespace {

struct MeanAccum {
    double sum = 0.0;
    double sumsq = 0.0;
    std::int64_t count = 0;
};

// X_{U} of one K-user group from i.i.d. unit-exponential squared gains,
// computed directly in the order domain.
double group_x_order(TrialRng& rng, int K, double inv_log_snr) {
    thread_local std::vector<double> ln_g;
    ln_g.resize(static_cast<std::size_t>(K) * K);
    for (auto& v : ln_g) v = std::log(rng.next_exp());
    double x = 0.0;
    for (int u = 0; u < K; ++u) {
        double beta = 1.0;
        for (int v = 0; v < K; ++v) {
            if (v == u) continue;
            beta = std::min(beta,
                            std::min(-ln_g[static_cast<std::size_t>(u) * K + v] *
                                         inv_log_snr,
                                     1.0));
        }
        const double auu =
            -ln_g[static_cast<std::size_t>(u) * K + u] * inv_log_snr;
        x += std::max(0.0, beta - auu);
    }
    return x;
}

// Sum rate of one K-user group sampled in place (unit path loss).
double group_sum_rate(TrialRng& rng, int K, int N, double snr) {
    std::vector<cplx> gains(static_cast<std::size_t>(K) * K * N * N);
    for (auto& g : gains) g = rng.next_cgauss();
    ChannelRealization ch(K, N, std::move(gains),
                          std::vector<double>(static_cast<std::size_t>(K) * K, 1.0));
    ActiveSet all;
    for (int u = 1; u <= K; ++u) all.members.push_back(u);
    return sum_rate(all, ch, snr, N == 1 ? RateMode::Siso : RateMode::Mimo).sum;
}

}  // namespace

ScalingRun scaling_run(double xi, int K, int N, std::vector<double> snr_grid,
                       std::int64_t trials, std::uint64_t seed, Selector selector,
                       int threads) {
    if (!(xi >= 0.0)) throw ConfigError("scaling_run: xi must be nonnegative");
    if (K < 1) throw ConfigError("scaling_run: K must be positive");
    if (N < 1) throw ConfigError("scaling_run: N must be positive");
    if (trials < 1) throw ConfigError("scaling_run: need at least 1 trial");
    check_snr_grid(snr_grid);

    ScalingRun run;
    run.selector = selector;
    run.bounds = theorem_bounds(xi, K, N);
    run.dof_slope = kNaN;

    for (double snr : snr_grid) {
        const std::int64_t n =
            xi == 0.0 ? K : static_cast<std::int64_t>(std::llround(std::pow(snr, xi)));
        if (n < K)
            throw ConfigError("scaling_run: network size round(snr^xi) = " +
                              std::to_string(n) + " is below K at snr " +
                              std::to_string(snr));
        const std::int64_t groups = n / K;
        const double inv_log_snr = 1.0 / std::log(snr);

        const MeanAccum acc = parallel_blocks<MeanAccum>(
            trials, threads, MeanAccum{},
            [&](std::int64_t lo, std::int64_t hi) {
                MeanAccum part;
                for (std::int64_t t = lo; t < hi; ++t) {
                    double best = -std::numeric_limits<double>::infinity();
                    for (std::int64_t g = 0; g < groups; ++g) {
                        TrialRng rng(seed, static_cast<std::uint64_t>(t),
                                     stream::kGroupBase + static_cast<std::uint64_t>(g));
                        const double val =
                            selector == Selector::XOrder
                                ? group_x_order(rng, K, inv_log_snr)
                                : group_sum_rate(rng, K, N, snr);
                        best = std::max(best, val);
                    }
                    part.sum += best;
                    part.sumsq += best * best;
                    part.count += 1;
                }
                return part;
            },
            [](MeanAccum& a, const MeanAccum& p) {
                a.sum += p.sum;
                a.sumsq += p.sumsq;
                a.count += p.count;
            },
            // One block covers many group draws already; keep blocks small.
            std::max<std::int64_t>(1, 65536 / std::max<std::int64_t>(1, groups)));

        ScalingPoint pt;
        pt.snr = snr;
        pt.n = n;
        pt.groups = groups;
        pt.mean = acc.sum / static_cast<double>(acc.count);
        const double var =
            std::max(0.0, acc.sumsq / static_cast<double>(acc.count) - pt.mean * pt.mean);
        pt.stderr_ = std::sqrt(var / static_cast<double>(acc.count));
        run.points.push_back(pt);
    }

    if (selector == Selector::SumRate && run.points.size() >= 2) {
        std::vector<double> rates;
        for (const auto& p : run.points) rates.push_back(p.mean);
        run.dof_slope = estimate_dof(snr_grid, rates).slope;
    }
    return run;
}

std::vector<ExchangeabilityPoint> exchangeability_check(int n,
                                                        std::vector<double> x_grid,
                                                        std::int64_t trials,
                                                        std::uint64_t seed,
                                                        Mixing latent,
                                                        int threads) {
    if (n < 1) throw ConfigError("exchangeability_check: n must be positive");
    if (x_grid.empty()) throw ConfigError("exchangeability_check: empty x grid");
    if (trials < 1000) throw ConfigError("exchangeability_check: need at least 1000 trials");

    const std::size_t nx = x_grid.size();
    using Counts = std::vector<std::int64_t>;  // [max<=x counts..., X1<=x counts...]
    const Counts counts = parallel_blocks<Counts>(
        trials, threads, Counts(2 * nx, 0),
        [&](std::int64_t lo, std::int64_t hi) {
            Counts part(2 * nx, 0);
            for (std::int64_t t = lo; t < hi; ++t) {
                TrialRng rng(seed, static_cast<std::uint64_t>(t), stream::kLatent);
                const double y = latent == Mixing::SharedMean ? rng.next_normal() : 0.0;
                double first = 0.0, maxv = -std::numeric_limits<double>::infinity();
                for (int i = 0; i < n; ++i) {
                    const double v = y + rng.next_normal();
                    if (i == 0) first = v;
                    maxv = std::max(maxv, v);
                }
                for (std::size_t i = 0; i < nx; ++i) {
                    if (maxv <= x_grid[i]) part[i] += 1;
                    if (first <= x_grid[i]) part[nx + i] += 1;
                }
            }
            return part;
        },
        [](Counts& a, const Counts& p) {
            for (std::size_t i = 0; i < a.size(); ++i) a[i] += p[i];
        });

    std::vector<ExchangeabilityPoint> out;
    out.reserve(nx);
    const double T = static_cast<double>(trials);
    for (std::size_t i = 0; i < nx; ++i) {
        ExchangeabilityPoint p;
        p.x = x_grid[i];
        p.lhs = static_cast<double>(counts[i]) / T;
        const double f = static_cast<double>(counts[nx + i]) / T;
        p.rhs = std::pow(f, n);
        p.margin = p.lhs - p.rhs;
        const double se_l = std::sqrt(std::max(p.lhs * (1.0 - p.lhs), 0.0) / T);
        const double se_f = std::sqrt(std::max(f * (1.0 - f), 0.0) / T);
        const double se_r = n * std::pow(f, n - 1) * se_f;  // delta method
        p.stderr_ = std::sqrt(se_l * se_l + se_r * se_r);
        out.push_back(p);
    }
    return out;
}

}  // namespace icdof
