#pragma once

#include <cstdint>
#include <vector>

#include "icdof/linalg.hpp"

namespace icdof {

// Deterministic per-pair attenuation applied on top of the fading gains.
struct PathLoss {
    enum class Model { Unit, LogUniform };

    Model model = Model::Unit;
    double gamma_min = 1.0;
    double gamma_max = 1.0;

    static PathLoss unit() { return {}; }
    static PathLoss loguniform(double gmin, double gmax) {
        return {Model::LogUniform, gmin, gmax};
    }
};

struct NetworkConfig {
    int n = 1;  // transmitter-receiver pairs in the network
    int K = 1;  // pairs active per slot
    int N = 1;  // antennas per node
    PathLoss pathloss{};
    std::uint64_t seed = 0;

    void validate() const;  // throws ConfigError
};

// Ordered list of K distinct 1-based user indices.
struct ActiveSet {
    std::vector<int> members;

    int size() const { return static_cast<int>(members.size()); }
    bool contains(int u) const;
    void validate(int n) const;  // distinct, in [1, n]
};

// One block-fading slot: i.i.d. CN(0,1) gains for every ordered pair and
// antenna combination, plus the path-loss matrix. Immutable after
// construction and safe to share across threads.
class ChannelRealization {
  public:
    ChannelRealization(int n, int antennas, std::vector<cplx> gains,
                       std::vector<double> pathloss);

    int n() const { return n_; }
    int antennas() const { return antennas_; }

    // Users are 1-based, antennas 0-based; (u, v) is receiver u, transmitter v.
    cplx gain(int u, int v, int rx, int tx) const {
        return gains_[idx(u, v, rx, tx)];
    }
    double gamma(int u, int v) const {
        return pathloss_[static_cast<std::size_t>(u - 1) * n_ + (v - 1)];
    }

    // N x N channel matrix from transmitter v to receiver u.
    CMatrix channel_matrix(int u, int v) const;

    const std::vector<cplx>& gains() const { return gains_; }

  private:
    std::size_t idx(int u, int v, int rx, int tx) const {
        return ((static_cast<std::size_t>(u - 1) * n_ + (v - 1)) * antennas_ + rx) *
                   antennas_ +
               tx;
    }

    int n_ = 0;
    int antennas_ = 0;
    std::vector<cplx> gains_;
    std::vector<double> pathloss_;
};

// Draws one channel realization. Pure function of (config.seed, trial_id):
// regeneration with the same key is bit-identical, and distinct trials may be
// generated concurrently. Path loss depends on the seed only, so all trials
// of a configuration share one gamma matrix.
ChannelRealization sample_network(const NetworkConfig& config, std::uint64_t trial_id);

// Disjoint groups U_i = {K(i-1)+1, ..., Ki}, i = 1..floor(n/K). Users beyond
// K*floor(n/K) are dropped.
std::vector<ActiveSet> active_set_partition(int n, int K);

// Turns an N-antenna realization into an (n*N)-user single-antenna one by
// pairing transmit antenna a of user v with receive antenna a of receiver v.
// Derived user (v, a) has index (v-1)*N + a + 1; the gain from derived
// transmitter (v, a) to derived receiver (u, b) is H_{u,v}[b, a] and keeps
// the path loss gamma_{u,v}.
ChannelRealization antenna_pairing_transform(const ChannelRealization& ch);

}  // namespace icdof
