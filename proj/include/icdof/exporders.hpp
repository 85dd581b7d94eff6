#pragma once

#include <map>
#include <span>
#include <vector>

#include "icdof/netmodel.hpp"

namespace icdof {

// Exponential order of a positive quantity: -ln(v) / ln(snr). A quantity
// decaying like snr^-a has order a; v <= 0 maps to +infinity (certain zero).
double exp_order(double v, double snr);

// Square matrix of exponential orders alpha_{u,v}, 1-based users.
struct OrderMatrix {
    int n = 0;
    std::vector<double> a;

    OrderMatrix() = default;
    explicit OrderMatrix(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_) {}
    double at(int u, int v) const { return a[static_cast<std::size_t>(u - 1) * n + (v - 1)]; }
    double& at(int u, int v) { return a[static_cast<std::size_t>(u - 1) * n + (v - 1)]; }
};

// Orders of the squared gains of a single-antenna realization at the given
// snr. Path loss is excluded by default: it carries no exponential order and
// only shifts finite-snr constants.
OrderMatrix order_matrix(const ChannelRealization& ch, double snr,
                         bool include_pathloss = false);

// beta_u(V) = min over interferers v of min(alpha_uv, 1). The empty minimum
// (K = 1) is the clip value 1, so the interference-free order is (1-alpha)^+.
double beta_set(int u, const ActiveSet& v, const OrderMatrix& alpha);

// Per-user order contribution (beta_u - alpha_uu)^+.
double z_siso(double alpha_uu, double beta_u);

// Set statistic X_V = sum of per-user contributions.
double x_of_set(std::span<const double> z);

// Eigenvalue orders for one user of a multi-antenna set: `direct` holds the
// orders of the eigenvalues of H_uu H_uu^H, `interf` those of Ht Ht^H built
// from the strongest interferer path loss. Both lists follow ascending
// eigenvalues, i.e. descending order.
struct EigenOrders {
    std::vector<double> direct;
    std::vector<double> interf;
};

EigenOrders eigen_orders_for(int u, const ActiveSet& v, const ChannelRealization& ch,
                             double snr, bool include_pathloss = false);

// [sum_m (1 - alpha_m) - sum_m (1 - beta_m)^+]^+ for N-antenna users.
double z_mimo(const EigenOrders& e, int N);

// Orders of one realization restricted to an active set. The stored per-user
// contributions are clamped to the per-user range [0, per_user_max] (1 for
// single-antenna users, N otherwise); finite-snr draws with gains above 1
// would otherwise leak outside the asymptotic support. The raw statistics
// remain available through z_siso / z_mimo.
struct OrderSample {
    OrderMatrix alpha;            // single-antenna case; empty for MIMO samples
    std::map<int, double> beta;   // beta_u(V); empty for MIMO samples
    std::map<int, double> z;      // clamped per-user contributions
    double x = 0.0;               // sum of stored z
    double snr = 0.0;
    int per_user_max = 1;
};

OrderSample make_order_sample(const ActiveSet& v, const ChannelRealization& ch,
                              double snr, bool include_pathloss = false);
OrderSample make_order_sample_mimo(const ActiveSet& v, const ChannelRealization& ch,
                                   double snr, bool include_pathloss = false);

// Tail laws with closed-form decay exponents.
enum class LawId { ZSiso, XSiso, BetaAlpha, ZMimo, XMimo, Wishart };

struct AnalyticLaw {
    LawId id = LawId::ZSiso;
    int K = 2;
    int N = 1;
    int p = 1;
    int q = 1;

    static AnalyticLaw z_siso(int k) { return {LawId::ZSiso, k, 1, 1, 1}; }
    static AnalyticLaw x_siso(int k) { return {LawId::XSiso, k, 1, 1, 1}; }
    static AnalyticLaw beta_alpha() { return {LawId::BetaAlpha, 2, 1, 1, 1}; }
    static AnalyticLaw z_mimo(int k, int n) { return {LawId::ZMimo, k, n, 1, 1}; }
    static AnalyticLaw x_mimo(int k, int n) { return {LawId::XMimo, k, n, 1, 1}; }
    static AnalyticLaw wishart(int p_, int q_) { return {LawId::Wishart, 2, 1, p_, q_}; }

    double support_max() const;
    void validate() const;
};

// Decay exponent b with P(statistic beyond `point`) ~ snr^-b:
//   Z_siso:     (K-1) z           on [0, 1]
//   X_siso:     (K-1) x           on [0, K]
//   beta_alpha: w                 on [0, 1]
//   Z_mimo:     z (z + (K-2) N)   on [0, N]
//   X_mimo:     x (x + (K-2) N)   on [0, N K]
//   wishart:    (q-r)(p-r)        on (0, p], lower tail P(stat < r)
// Outside the support the indicator structure applies: a certain event has
// exponent 0, an impossible one +infinity.
double analytic_tail_exponent(const AnalyticLaw& law, double point);

// Degrees-of-freedom bounds for an opportunistic (n, K)-user network whose
// size scales as n ~ snr^xi.
struct TheoremBounds {
    double xi = 0.0;
    int K = 1;
    int N = 1;
    double lb_siso = 0.0;  // min(K, xi/(K-1))
    double ub_siso = 0.0;  // K min(1, 2 xi)
    double zeta = 0.0;     // (sqrt((K-2)^2 N^2 + 4 xi) - (K-2) N) / 2
    double lb_mimo = 0.0;  // min(NK, max(xi/(NK-1), zeta))
};

TheoremBounds theorem_bounds(double xi, int K, int N = 1);

// Scaling exponents sufficient/necessary for d degrees of freedom.
double xi_sufficient(double d, int K);                 // d (K-1)
double xi_necessary(double d, int K);                  // d / (2K)
double xi_sufficient_mimo(double d, int K, int N);     // d^2 + d(K-2)N, or d(NK-1)

}  // namespace icdof
