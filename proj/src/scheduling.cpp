#include "icdof/scheduling.hpp"

#include <algorithm>
#include <cmath>

#include "icdof/errors.hpp"
#include "icdof/exporders.hpp"
#include "icdof/rates.hpp"
#include "icdof/rng.hpp"

namespace icdof {

namespace {

double x_order_objective(const ActiveSet& v, const ChannelRealization& ch, double snr) {
    double x = 0.0;
    if (ch.antennas() == 1) {
        for (int u : v.members) {
            double beta = 1.0;
            for (int w : v.members) {
                if (w == u) continue;
                const double a = exp_order(std::norm(ch.gain(u, w, 0, 0)), snr);
                beta = std::min(beta, std::min(a, 1.0));
            }
            const double auu = exp_order(std::norm(ch.gain(u, u, 0, 0)), snr);
            x += z_siso(auu, beta);
        }
    } else {
        for (int u : v.members)
            x += z_mimo(eigen_orders_for(u, v, ch, snr), ch.antennas());
    }
    return x;
}

// C(n, k) capped to avoid overflow.
std::int64_t choose_capped(int n, int k, std::int64_t cap) {
    double c = 1.0;
    for (int i = 1; i <= k; ++i) {
        c *= static_cast<double>(n - k + i) / i;
        if (c > 2.0 * static_cast<double>(cap)) return cap + 1;
    }
    return static_cast<std::int64_t>(std::llround(c));
}

}  // namespace

double evaluate_objective(const ActiveSet& v, const ChannelRealization& ch, double snr,
                          Objective obj) {
    switch (obj) {
        case Objective::SumRateSiso: return sum_rate(v, ch, snr, RateMode::Siso).sum;
        case Objective::SumRateMimo: return sum_rate(v, ch, snr, RateMode::Mimo).sum;
        case Objective::XOrder: return x_order_objective(v, ch, snr);
    }
    return 0.0;
}

SelectionResult select_exhaustive(const ChannelRealization& ch, double snr, int K,
                                  Objective obj, std::int64_t cap) {
    const int n = ch.n();
    if (K < 1 || K > n) throw ConfigError("select_exhaustive: need 1 <= K <= n");
    if (choose_capped(n, K, cap) > cap)
        throw ConfigError(
            "select_exhaustive: candidate count exceeds the cap; "
            "use select_partitioned for networks this large");

    // Lexicographic combination walk; a strict improvement is required, so
    // the first (smallest) maximizer wins ties.
    std::vector<int> comb(static_cast<std::size_t>(K));
    for (int i = 0; i < K; ++i) comb[static_cast<std::size_t>(i)] = i + 1;

    SelectionResult best;
    best.strategy = "exhaustive";
    bool have = false;
    for (;;) {
        ActiveSet v{comb};
        const double val = evaluate_objective(v, ch, snr, obj);
        ++best.candidates_evaluated;
        if (!have || val > best.objective) {
            best.set = v;
            best.objective = val;
            have = true;
        }
        // advance
        int i = K - 1;
        while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - (K - 1 - i)) --i;
        if (i < 0) break;
        ++comb[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < K; ++j)
            comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    }
    return best;
}

SelectionResult select_partitioned(const ChannelRealization& ch, double snr, int K,
                                   Objective obj) {
    const auto groups = active_set_partition(ch.n(), K);
    SelectionResult best;
    best.strategy = "partitioned";
    bool have = false;
    for (const auto& g : groups) {
        const double val = evaluate_objective(g, ch, snr, obj);
        ++best.candidates_evaluated;
        if (!have || val > best.objective) {
            best.set = g;
            best.objective = val;
            have = true;
        }
    }
    return best;
}

ActiveSet select_random(int n, int K, std::uint64_t seed) {
    if (K < 1 || K > n) throw ConfigError("select_random: need 1 <= K <= n");
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i + 1;

    TrialRng rng(seed);
    ActiveSet s;
    s.members.reserve(static_cast<std::size_t>(K));
    for (int i = 0; i < K; ++i) {
        const std::size_t j =
            static_cast<std::size_t>(i) +
            static_cast<std::size_t>(rng.next_u64() % static_cast<std::uint64_t>(n - i));
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
        s.members.push_back(pool[static_cast<std::size_t>(i)]);
    }
    std::sort(s.members.begin(), s.members.end());
    return s;
}

}  // namespace icdof
