#include "icdof/netmodel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "icdof/errors.hpp"
#include "icdof/rng.hpp"

namespace icdof {

void NetworkConfig::validate() const {
    if (n < 1) throw ConfigError("NetworkConfig: n must be positive");
    if (K < 1) throw ConfigError("NetworkConfig: K must be positive");
    if (K > n) throw ConfigError("NetworkConfig: K exceeds n");
    if (N < 1) throw ConfigError("NetworkConfig: N must be positive");
    if (pathloss.model == PathLoss::Model::LogUniform) {
        if (!(pathloss.gamma_min > 0.0) || !(pathloss.gamma_max > 0.0))
            throw ConfigError("NetworkConfig: path-loss bounds must be positive");
        if (pathloss.gamma_min > pathloss.gamma_max)
            throw ConfigError("NetworkConfig: gamma_min exceeds gamma_max");
    }
}

bool ActiveSet::contains(int u) const {
    return std::find(members.begin(), members.end(), u) != members.end();
}

void ActiveSet::validate(int n) const {
    if (members.empty()) throw ConfigError("ActiveSet: empty");
    for (int u : members)
        if (u < 1 || u > n)
            throw ConfigError("ActiveSet: member " + std::to_string(u) +
                              " out of range [1, " + std::to_string(n) + "]");
    std::vector<int> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ConfigError("ActiveSet: duplicate member");
}

ChannelRealization::ChannelRealization(int n, int antennas, std::vector<cplx> gains,
                                       std::vector<double> pathloss)
    : n_(n), antennas_(antennas), gains_(std::move(gains)),
      pathloss_(std::move(pathloss)) {
    const std::size_t want =
        static_cast<std::size_t>(n_) * n_ * antennas_ * antennas_;
    if (gains_.size() != want)
        throw ConfigError("ChannelRealization: gain tensor has wrong size");
    if (pathloss_.size() != static_cast<std::size_t>(n_) * n_)
        throw ConfigError("ChannelRealization: path-loss matrix has wrong size");
    for (double g : pathloss_)
        if (!(g > 0.0)) throw ConfigError("ChannelRealization: path loss must be positive");
}

CMatrix ChannelRealization::channel_matrix(int u, int v) const {
    CMatrix h(static_cast<std::size_t>(antennas_), static_cast<std::size_t>(antennas_));
    for (int r = 0; r < antennas_; ++r)
        for (int t = 0; t < antennas_; ++t) h(r, t) = gain(u, v, r, t);
    return h;
}

ChannelRealization sample_network(const NetworkConfig& config, std::uint64_t trial_id) {
    config.validate();
    const int n = config.n;
    const int N = config.N;

    std::vector<cplx> gains(static_cast<std::size_t>(n) * n * N * N);
    TrialRng rng(config.seed, trial_id, stream::kChannel);
    for (auto& g : gains) g = rng.next_cgauss();

    std::vector<double> gamma(static_cast<std::size_t>(n) * n, 1.0);
    if (config.pathloss.model == PathLoss::Model::LogUniform) {
        TrialRng grng(config.seed, 0, stream::kPathloss);
        const double lo = std::log(config.pathloss.gamma_min);
        const double hi = std::log(config.pathloss.gamma_max);
        for (auto& g : gamma) g = std::exp(lo + (hi - lo) * grng.next_unit());
    }
    return ChannelRealization(n, N, std::move(gains), std::move(gamma));
}

std::vector<ActiveSet> active_set_partition(int n, int K) {
    if (K < 1) throw ConfigError("active_set_partition: K must be positive");
    if (K > n) throw ConfigError("active_set_partition: K exceeds n");
    const int m = n / K;
    std::vector<ActiveSet> groups;
    groups.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        ActiveSet s;
        s.members.resize(static_cast<std::size_t>(K));
        for (int j = 0; j < K; ++j) s.members[static_cast<std::size_t>(j)] = K * i + j + 1;
        groups.push_back(std::move(s));
    }
    return groups;
}

ChannelRealization antenna_pairing_transform(const ChannelRealization& ch) {
    const int n = ch.n();
    const int N = ch.antennas();
    const int np = n * N;

    std::vector<cplx> gains(static_cast<std::size_t>(np) * np);
    std::vector<double> gamma(static_cast<std::size_t>(np) * np);
    for (int u = 1; u <= n; ++u)
        for (int b = 0; b < N; ++b) {
            const std::size_t up = static_cast<std::size_t>(u - 1) * N + b;
            for (int v = 1; v <= n; ++v)
                for (int a = 0; a < N; ++a) {
                    const std::size_t vp = static_cast<std::size_t>(v - 1) * N + a;
                    gains[up * np + vp] = ch.gain(u, v, b, a);
                    gamma[up * np + vp] = ch.gamma(u, v);
                }
        }
    return ChannelRealization(np, 1, std::move(gains), std::move(gamma));
}

}  // namespace icdof
