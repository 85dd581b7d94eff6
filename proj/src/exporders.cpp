#include "icdof/exporders.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "icdof/errors.hpp"

namespace icdof {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double exp_order(double v, double snr) {
    if (!(snr > 1.0)) throw ConfigError("exp_order: snr must exceed 1");
    if (!(v > 0.0)) return kInf;
    return -std::log(v) / std::log(snr);
}

OrderMatrix order_matrix(const ChannelRealization& ch, double snr,
                         bool include_pathloss) {
    if (ch.antennas() != 1)
        throw ConfigError("order_matrix: channel is not single-antenna");
    OrderMatrix m(ch.n());
    for (int u = 1; u <= ch.n(); ++u)
        for (int v = 1; v <= ch.n(); ++v) {
            double g = std::norm(ch.gain(u, v, 0, 0));
            if (include_pathloss) g *= ch.gamma(u, v);
            m.at(u, v) = exp_order(g, snr);
        }
    return m;
}

double beta_set(int u, const ActiveSet& v, const OrderMatrix& alpha) {
    if (!v.contains(u))
        throw ConfigError("beta_set: user " + std::to_string(u) + " not in active set");
    double b = 1.0;
    for (int w : v.members)
        if (w != u) b = std::min(b, std::min(alpha.at(u, w), 1.0));
    return b;
}

double z_siso(double alpha_uu, double beta_u) {
    return std::max(0.0, beta_u - alpha_uu);
}

double x_of_set(std::span<const double> z) {
    double s = 0.0;
    for (double v : z) s += v;
    return s;
}

EigenOrders eigen_orders_for(int u, const ActiveSet& v, const ChannelRealization& ch,
                             double snr, bool include_pathloss) {
    v.validate(ch.n());
    if (!v.contains(u))
        throw ConfigError("eigen_orders_for: user not in active set");
    const int N = ch.antennas();

    EigenOrders e;
    {
        CMatrix huu = ch.channel_matrix(u, u);
        if (include_pathloss) {
            const double s = std::sqrt(ch.gamma(u, u));
            for (std::size_t i = 0; i < huu.rows(); ++i)
                for (std::size_t j = 0; j < huu.cols(); ++j) huu(i, j) *= s;
        }
        for (double mu : hermitian_eigenvalues(gram(huu)))
            e.direct.push_back(exp_order(mu, snr));
    }

    if (v.size() == 1) {
        // No interference: an all-zero block has every eigenvalue order at
        // +infinity, which makes each (1 - beta)^+ vanish.
        e.interf.assign(static_cast<std::size_t>(N), kInf);
        return e;
    }

    double gmax = 1.0;
    if (include_pathloss) {
        gmax = 0.0;
        for (int w : v.members)
            if (w != u) gmax = std::max(gmax, ch.gamma(u, w));
    }
    CMatrix ht(static_cast<std::size_t>(N),
               static_cast<std::size_t>(v.size() - 1) * N);
    const double sg = std::sqrt(gmax);
    std::size_t col = 0;
    for (int w : v.members) {
        if (w == u) continue;
        for (int r = 0; r < N; ++r)
            for (int t = 0; t < N; ++t) ht(r, col + t) = sg * ch.gain(u, w, r, t);
        col += static_cast<std::size_t>(N);
    }
    for (double lam : hermitian_eigenvalues(gram(ht)))
        e.interf.push_back(exp_order(lam, snr));
    return e;
}

double z_mimo(const EigenOrders& e, int N) {
    if (e.direct.size() != static_cast<std::size_t>(N) ||
        e.interf.size() != static_cast<std::size_t>(N))
        throw ConfigError("z_mimo: order lists must have length N");
    double s = 0.0;
    for (double a : e.direct) s += 1.0 - a;
    for (double b : e.interf) s -= std::max(0.0, 1.0 - b);
    return std::max(0.0, s);
}

OrderSample make_order_sample(const ActiveSet& v, const ChannelRealization& ch,
                              double snr, bool include_pathloss) {
    v.validate(ch.n());
    OrderSample s;
    s.snr = snr;
    s.per_user_max = 1;
    s.alpha = order_matrix(ch, snr, include_pathloss);
    for (int u : v.members) {
        const double b = beta_set(u, v, s.alpha);
        const double z = std::min(z_siso(s.alpha.at(u, u), b), 1.0);
        s.beta[u] = b;
        s.z[u] = z;
        s.x += z;
    }
    return s;
}

OrderSample make_order_sample_mimo(const ActiveSet& v, const ChannelRealization& ch,
                                   double snr, bool include_pathloss) {
    v.validate(ch.n());
    const int N = ch.antennas();
    OrderSample s;
    s.snr = snr;
    s.per_user_max = N;
    for (int u : v.members) {
        const EigenOrders e = eigen_orders_for(u, v, ch, snr, include_pathloss);
        const double z = std::min(z_mimo(e, N), static_cast<double>(N));
        s.z[u] = z;
        s.x += z;
    }
    return s;
}

double AnalyticLaw::support_max() const {
    switch (id) {
        case LawId::ZSiso: return 1.0;
        case LawId::XSiso: return static_cast<double>(K);
        case LawId::BetaAlpha: return 1.0;
        case LawId::ZMimo: return static_cast<double>(N);
        case LawId::XMimo: return static_cast<double>(N) * K;
        case LawId::Wishart: return static_cast<double>(p);
    }
    return 0.0;
}

void AnalyticLaw::validate() const {
    switch (id) {
        case LawId::ZSiso:
        case LawId::XSiso:
            if (K < 1) throw ConfigError("AnalyticLaw: K must be positive");
            break;
        case LawId::BetaAlpha:
            break;
        case LawId::ZMimo:
        case LawId::XMimo:
            if (K < 1) throw ConfigError("AnalyticLaw: K must be positive");
            if (N < 1) throw ConfigError("AnalyticLaw: N must be positive");
            break;
        case LawId::Wishart:
            if (p < 1 || q < 1) throw ConfigError("AnalyticLaw: p, q must be positive");
            if (p > q) throw ConfigError("AnalyticLaw: wishart needs p <= q");
            break;
    }
}

double analytic_tail_exponent(const AnalyticLaw& law, double point) {
    law.validate();
    const double top = law.support_max();
    if (law.id == LawId::Wishart) {
        // Lower tail: below the support the event is impossible, above it
        // certain.
        if (point <= 0.0) return kInf;
        if (point > top) return 0.0;
        return (law.q - point) * (law.p - point);
    }
    if (point < 0.0) return 0.0;
    if (point > top) return kInf;
    switch (law.id) {
        case LawId::ZSiso:
        case LawId::XSiso:
            return (law.K - 1) * point;
        case LawId::BetaAlpha:
            return point;
        case LawId::ZMimo:
        case LawId::XMimo:
            return point * (point + static_cast<double>(law.K - 2) * law.N);
        default:
            break;
    }
    return 0.0;
}

TheoremBounds theorem_bounds(double xi, int K, int N) {
    if (!(xi >= 0.0)) throw ConfigError("theorem_bounds: xi must be nonnegative");
    if (K < 1) throw ConfigError("theorem_bounds: K must be positive");
    if (N < 1) throw ConfigError("theorem_bounds: N must be positive");

    TheoremBounds b;
    b.xi = xi;
    b.K = K;
    b.N = N;

    // K = 1 degenerates the ratio to +infinity, leaving the cap.
    b.lb_siso = (K == 1) ? static_cast<double>(K)
                         : std::min(static_cast<double>(K), xi / (K - 1));
    b.ub_siso = K * std::min(1.0, 2.0 * xi);

    const double kn = static_cast<double>(K - 2) * N;
    b.zeta = (std::sqrt(kn * kn + 4.0 * xi) - kn) / 2.0;
    const int nk = N * K;
    const double pairing = (nk == 1) ? kInf : xi / (nk - 1);
    b.lb_mimo = std::min(static_cast<double>(nk), std::max(pairing, b.zeta));
    return b;
}

double xi_sufficient(double d, int K) { return d * (K - 1); }

double xi_necessary(double d, int K) { return d / (2.0 * K); }

double xi_sufficient_mimo(double d, int K, int N) {
    if (d <= 2.0 * N - 1.0) return d * d + d * static_cast<double>(K - 2) * N;
    return d * (static_cast<double>(N) * K - 1.0);
}

}  // namespace icdof
