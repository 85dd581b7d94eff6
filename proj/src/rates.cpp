#include "icdof/rates.hpp"

#include <cmath>
#include <string>

#include "icdof/errors.hpp"

namespace icdof {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

// log2(1 + e^d) without overflow.
double log2_softplus(double d) {
    if (d == -std::numeric_limits<double>::infinity()) return 0.0;
    if (d > 0.0) return (d + std::log1p(std::exp(-d))) / kLn2;
    return std::log1p(std::exp(d)) / kLn2;
}

void check_args(int u, const ActiveSet& v, const ChannelRealization& ch, double snr) {
    v.validate(ch.n());
    if (!v.contains(u))
        throw ConfigError("rates: user " + std::to_string(u) + " not in active set");
    if (!(snr > 0.0)) throw ConfigError("rates: snr must be positive");
}

// Concatenation of sqrt(gamma) * H_uv over interferers of u; N x (K-1)N.
// With override_gamma >= 0 every interferer uses that value instead.
CMatrix interference_matrix(int u, const ActiveSet& v, const ChannelRealization& ch,
                            double override_gamma = -1.0) {
    const int N = ch.antennas();
    const int k1 = v.size() - 1;
    CMatrix h(static_cast<std::size_t>(N), static_cast<std::size_t>(k1) * N);
    std::size_t col = 0;
    for (int w : v.members) {
        if (w == u) continue;
        const double g = override_gamma >= 0.0 ? override_gamma : ch.gamma(u, w);
        const double sg = std::sqrt(g);
        for (int r = 0; r < N; ++r)
            for (int t = 0; t < N; ++t) h(r, col + t) = sg * ch.gain(u, w, r, t);
        col += static_cast<std::size_t>(N);
    }
    return h;
}

void check_finite(const CMatrix& m, const char* who) {
    if (!m.all_finite()) throw NumericError(std::string(who) + ": non-finite channel entry");
}

}  // namespace

double sinr_siso(int u, const ActiveSet& v, const ChannelRealization& ch, double snr) {
    check_args(u, v, ch, snr);
    if (ch.antennas() != 1) throw ConfigError("sinr_siso: channel is not single-antenna");

    const double num = ch.gamma(u, u) * std::norm(ch.gain(u, u, 0, 0));
    double den = 1.0 / snr;
    for (int w : v.members)
        if (w != u) den += ch.gamma(u, w) * std::norm(ch.gain(u, w, 0, 0));
    if (!std::isfinite(num) || !std::isfinite(den))
        throw NumericError("sinr_siso: non-finite channel entry");
    return num / den;
}

double rate_sd_siso(int u, const ActiveSet& v, const ChannelRealization& ch, double snr) {
    return std::log1p(sinr_siso(u, v, ch, snr)) / kLn2;
}

double rate_sd_mimo(int u, const ActiveSet& v, const ChannelRealization& ch, double snr) {
    check_args(u, v, ch, snr);

    const CMatrix huu = ch.channel_matrix(u, u);
    check_finite(huu, "rate_sd_mimo");

    // Y = L^{-1} H_uu with B = I + snr H_uV H_uV^H = L L^H; then
    // H_uu^H B^{-1} H_uu = Y^H Y.
    CMatrix y;
    if (v.size() == 1) {
        y = huu;
    } else {
        const CMatrix hv = interference_matrix(u, v, ch);
        check_finite(hv, "rate_sd_mimo");
        CMatrix b = gram(hv);
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                b(i, j) = (i == j ? cplx{1.0} : cplx{}) + snr * b(i, j);
        y = forward_solve(cholesky_lower(b), huu);
    }

    const double c = snr * ch.gamma(u, u);
    CMatrix m = gram(y.adjoint());  // Y^H Y
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(i, j) = (i == j ? cplx{1.0} : cplx{}) + c * m(i, j);
    return spd_logdet(m) / kLn2;
}

double rate_sd_mimo_lb(int u, const ActiveSet& v, const ChannelRealization& ch,
                       double snr) {
    check_args(u, v, ch, snr);
    const int N = ch.antennas();

    const CMatrix huu = ch.channel_matrix(u, u);
    check_finite(huu, "rate_sd_mimo_lb");

    // log det[snr gamma_uu H_uu H_uu^H]; a singular direct channel gives a
    // zero determinant and hence a zero bound.
    double log_num;
    try {
        log_num = N * std::log(snr * ch.gamma(u, u)) + spd_logdet(gram(huu));
    } catch (const NumericError&) {
        return 0.0;
    }

    double log_den = 0.0;
    if (v.size() > 1) {
        double gmax = 0.0;
        for (int w : v.members)
            if (w != u) gmax = std::max(gmax, ch.gamma(u, w));
        const CMatrix ht = interference_matrix(u, v, ch, gmax);
        check_finite(ht, "rate_sd_mimo_lb");
        CMatrix b = gram(ht);
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                b(i, j) = (i == j ? cplx{1.0} : cplx{}) + snr * b(i, j);
        log_den = spd_logdet(b);
    }
    return log2_softplus(log_num - log_den);
}

RateReport sum_rate(const ActiveSet& v, const ChannelRealization& ch, double snr,
                    RateMode mode) {
    if (mode == RateMode::Siso && ch.antennas() != 1)
        throw ConfigError("sum_rate: siso mode needs a single-antenna channel");

    RateReport rep;
    rep.snr = snr;
    for (int u : v.members) {
        double r = 0.0;
        switch (mode) {
            case RateMode::Siso: r = rate_sd_siso(u, v, ch, snr); break;
            case RateMode::Mimo: r = rate_sd_mimo(u, v, ch, snr); break;
            case RateMode::MimoLb: r = rate_sd_mimo_lb(u, v, ch, snr); break;
        }
        rep.per_user[u] = r;
        rep.sum += r;
    }
    return rep;
}

}  // namespace icdof
