#pragma once

#include <map>

#include "icdof/netmodel.hpp"

namespace icdof {

// Per-user and total single-user-decoding rates, in bits per channel use.
struct RateReport {
    std::map<int, double> per_user;
    double sum = 0.0;
    double snr = 0.0;
};

enum class RateMode { Siso, Mimo, MimoLb };

// SINR of receiver u when the set V is active (single-antenna nodes):
// gamma_uu |H_uu|^2 / (sum_{v in V, v != u} gamma_uv |H_uv|^2 + 1/snr).
double sinr_siso(int u, const ActiveSet& v, const ChannelRealization& ch, double snr);

// log2(1 + sinr_siso(...)).
double rate_sd_siso(int u, const ActiveSet& v, const ChannelRealization& ch, double snr);

// Single-user-decoding rate with N antennas:
//   log2 det[I + snr gamma_uu H_uu^H (I + snr H_uV H_uV^H)^{-1} H_uu],
// where H_uV concatenates sqrt(gamma_uv) H_uv over the interferers of u.
// The middle inverse is applied through a Cholesky solve; the matrix is
// Hermitian positive definite by construction.
double rate_sd_mimo(int u, const ActiveSet& v, const ChannelRealization& ch, double snr);

// Determinant-split lower bound on rate_sd_mimo. The interference block is
// worsened to the strongest interferer path loss gamma_uV = max_{v != u}
// gamma_uv, giving
//   log2(1 + det[snr gamma_uu H_uu H_uu^H] / det[I + snr Ht Ht^H]).
double rate_sd_mimo_lb(int u, const ActiveSet& v, const ChannelRealization& ch, double snr);

RateReport sum_rate(const ActiveSet& v, const ChannelRealization& ch, double snr,
                    RateMode mode);

}  // namespace icdof
