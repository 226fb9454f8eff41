#pragma once

#include "linsys/oracle.hpp"

namespace linsys {

// Divisors through a star configuration in P^n: the C(n+2,2) points q_ij
// cut out by n+2 properly-meeting hyperplanes, loaded with multiplicities
// k_ij = max(m_i + m_j - d, 0) derived from n+2 parent parameters m_i.  The
// parent data is what determines the k-value of every subset, not just the
// pairs, which is why the type carries it.
struct StarSpec {
    int n;
    long long d;
    std::vector<long long> parent;  // m_1..m_{n+2}

    StarSpec(int n_, long long d_, std::vector<long long> m) : n(n_), d(d_), parent(std::move(m)) {
        if (n < 2) throw std::invalid_argument("star: n must be >= 2");
        if (static_cast<int>(parent.size()) != n + 2)
            throw std::invalid_argument("star: expected n+2 parent multiplicities");
        long long sum = 0;
        for (long long v : parent) {
            if (v < 0 || v > d) throw std::invalid_argument("star: need 0 <= m_i <= d");
            sum += v;
        }
        if (sum > static_cast<long long>(n + 1) * d)
            throw std::invalid_argument("star: need sum(m) <= (n+1)d");
    }

    long long k_pair(int i, int j) const {
        long long K = parent[static_cast<size_t>(i - 1)] + parent[static_cast<size_t>(j - 1)] - d;
        return K > 0 ? K : 0;
    }

    // K over any parent subset: sum m_i - (|T|-1) d.
    long long K_subset(uint32_t mask) const {
        long long sum = 0;
        int size = 0;
        for (uint32_t m = mask; m; m &= m - 1, ++size)
            sum += parent[static_cast<size_t>(std::countr_zero(m))];
        return sum - static_cast<long long>(size - 1) * d;
    }
};

// Number of sections of the star-configuration divisor.  Every parent
// subset T of size r+1 >= 2 with K_T >= 1 contributes
//     (-1)^r * sum_{t=1..r} C(n + K_T - t, n);
// the t = r term alone is the top contribution of the cycle it spans, and
// the lower t terms are the Pascal ladder connecting the two ambient
// dimension counts.  Dropping them breaks the count as soon as some triple
// has K >= 1, so they are kept.
inline Bint star_h0_formula(const StarSpec& sp) {
    Bint total = binom(sp.n + sp.d, sp.n);
    for (uint32_t mask = 1; mask < (1u << (sp.n + 2)); ++mask) {
        int size = std::popcount(mask);
        if (size < 2) continue;
        long long K = sp.K_subset(mask);
        if (K < 1) continue;
        int r = size - 1;
        Bint contrib = 0;
        for (int t = 1; t <= r; ++t) contrib += binom(sp.n + K - t, sp.n);
        if (r % 2 == 0)
            total += contrib;
        else
            total -= contrib;
    }
    return total;
}

// h-vector (h^0..h^n) of the strict transform of the star divisor after
// blowing up the star subspaces of dimension <= r, 1 <= r <= n-1.  Only the
// 0-th and (r+1)-st entries can be nonzero; the tail collects the parent
// subsets spanning star cycles of dimension > r with alternating signs.
inline std::vector<Bint> star_cohomology(const StarSpec& sp, int r) {
    if (r < 1 || r > sp.n - 1) throw std::invalid_argument("star level out of range");
    std::vector<Bint> h(static_cast<size_t>(sp.n) + 1, Bint(0));
    h[0] = star_h0_formula(sp);
    Bint tail = 0;
    for (uint32_t mask = 1; mask < (1u << (sp.n + 2)); ++mask) {
        int size = std::popcount(mask);
        int rho = size - 1;
        if (rho < r + 2) continue;
        long long K = sp.K_subset(mask);
        if (K < 1) continue;
        Bint contrib = 0;
        for (int t = 1; t <= rho; ++t) contrib += binom(sp.n + K - t, sp.n);
        if ((rho - r) % 2 == 0)
            tail += contrib;
        else
            tail -= contrib;
    }
    h[static_cast<size_t>(r) + 1] = tail;
    return h;
}

// Interpolation count on an honest star configuration: multiplicity k_ij
// imposed at the point q_ij, fresh hyperplane draws per trial.
inline long long star_h0_oracle(const StarSpec& sp, const OracleConfig& cfg) {
    fp::Field f(cfg.prime);
    int trials = cfg.trials < 1 ? 1 : cfg.trials;
    long long best = -1;
    for (int t = 0; t < trials; ++t) {
        OracleConfig trial_cfg = cfg;
        trial_cfg.seed = mix_seed(cfg.seed, 0x57A60000ull + static_cast<uint64_t>(t));
        StarPoints pts = star_points(sp.n, trial_cfg);
        std::vector<long long> mults;
        mults.reserve(pts.labels.size());
        for (auto [i, j] : pts.labels) mults.push_back(sp.k_pair(i, j));
        RankOutcome rk = interpolation_rank(sp.n, sp.d, pts.points, mults, f, cfg.matrix_cap);
        long long h0 = static_cast<long long>(rk.cols) - static_cast<long long>(rk.rank);
        if (best < 0 || h0 < best) best = h0;
    }
    return best;
}

}  // namespace linsys
