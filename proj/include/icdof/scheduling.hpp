#pragma once

#include <cstdint>
#include <string>

#include "icdof/netmodel.hpp"

namespace icdof {

enum class Objective { SumRateSiso, SumRateMimo, XOrder };

struct SelectionResult {
    ActiveSet set;
    double objective = 0.0;
    std::string strategy;
    std::int64_t candidates_evaluated = 0;
};

// Objective value of one candidate set: sum rate in bits, or the order-domain
// statistic X_V evaluated at the measurement snr.
double evaluate_objective(const ActiveSet& v, const ChannelRealization& ch, double snr,
                          Objective obj);

// Argmax over all K-subsets of the n users. Ties go to the lexicographically
// smallest member list. Refuses when C(n, K) exceeds the cap; use the
// partitioned strategy for large networks.
SelectionResult select_exhaustive(const ChannelRealization& ch, double snr, int K,
                                  Objective obj, std::int64_t cap = 1000000);

// Argmax over the floor(n/K) disjoint index groups; ties go to the lowest
// group index. Each group needs only its own local channel state.
SelectionResult select_partitioned(const ChannelRealization& ch, double snr, int K,
                                   Objective obj);

// Uniformly random K-subset, deterministic in the seed; members ascending.
ActiveSet select_random(int n, int K, std::uint64_t seed);

}  // namespace icdof
