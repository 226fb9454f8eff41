#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>

#include "linsys/binom.hpp"
#include "linsys/fp_matrix.hpp"
#include "linsys/multiindex.hpp"

namespace linsys {

enum class PointMode { General, CoordinatePinned, Star, Explicit };

inline const char* point_mode_name(PointMode m) {
    switch (m) {
        case PointMode::General: return "general";
        case PointMode::CoordinatePinned: return "coordinate_pinned";
        case PointMode::Star: return "star";
        case PointMode::Explicit: return "explicit";
    }
    return "?";
}

struct OracleConfig {
    uint64_t prime = fp::kM61;
    int trials = 3;
    uint64_t seed = 1;
    PointMode mode = PointMode::General;
    std::vector<std::vector<uint64_t>> explicit_points;  // homogeneous tuples mod prime
    long long matrix_cap = 20'000'000;                   // rows * cols
    int containment_draws = 3;
};

struct OracleResult {
    long long h0 = 0;  // min over trials; one-sided: can only overestimate
    Bint cols = 0;
    Bint rows = 0;
    long long rank = 0;  // of the best trial
    std::vector<long long> per_trial_h0;
    uint64_t prime = 0;
    uint64_t seed = 0;
    std::string failure_bound;
};

namespace detail {

// All exponent tuples over `slots` variables with total in [lo_total, total],
// emitted in lexicographic order.
inline void exponent_tuples(int slots, long long total, bool exact,
                            std::vector<std::vector<int>>& out) {
    std::vector<int> cur(static_cast<size_t>(slots), 0);
    std::function<void(int, long long)> rec = [&](int pos, long long left) {
        if (pos == slots) {
            if (!exact || left == 0) out.push_back(cur);
            return;
        }
        if (pos == slots - 1 && exact) {
            cur[static_cast<size_t>(pos)] = static_cast<int>(left);
            out.push_back(cur);
            cur[static_cast<size_t>(pos)] = 0;
            return;
        }
        for (long long e = 0; e <= left; ++e) {
            cur[static_cast<size_t>(pos)] = static_cast<int>(e);
            rec(pos + 1, left - e);
        }
        cur[static_cast<size_t>(pos)] = 0;
    };
    if (total >= 0) rec(0, total);
}

// Pascal triangle mod p up to row `max`.
inline std::vector<std::vector<uint64_t>> binom_table(const fp::Field& f, int max) {
    std::vector<std::vector<uint64_t>> t(static_cast<size_t>(max) + 1);
    for (int a = 0; a <= max; ++a) {
        t[static_cast<size_t>(a)].assign(static_cast<size_t>(a) + 1, 1);
        for (int b = 1; b < a; ++b)
            t[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                f.add(t[static_cast<size_t>(a) - 1][static_cast<size_t>(b) - 1],
                      t[static_cast<size_t>(a) - 1][static_cast<size_t>(b)]);
    }
    return t;
}

}  // namespace detail

// A fat-point interpolation problem over F_p: degree-d forms in n+1
// variables with prescribed multiplicities at explicit points.  Rows are
// Hasse-derivative conditions: the point is shifted into the affine chart
// of its last nonzero coordinate and every Taylor coefficient of order
// < m is required to vanish.  Coefficient extraction avoids factorials, so
// the construction is characteristic-free.
class InterpolationProblem {
public:
    InterpolationProblem(int n, long long d, const fp::Field& f) : n_(n), d_(d), f_(f) {
        if (d_ >= 0) detail::exponent_tuples(n + 1, d_, true, monomials_);
        if (d_ > 1024) throw cap_exceeded("interpolation: degree cap exceeded");
        binoms_ = detail::binom_table(f_, d_ < 1 ? 1 : static_cast<int>(d_));
    }

    size_t cols() const { return monomials_.size(); }

    // Appends to `ech` all multiplicity-m conditions at `point`.
    void absorb_point(FpEchelon& ech, const std::vector<uint64_t>& point, long long m) const {
        if (m <= 0 || d_ < 0) return;
        std::vector<uint64_t> pt = normalize(point);
        int pivot = last_nonzero(pt);
        // powers pt[j]^e for e <= d
        std::vector<std::vector<uint64_t>> pw(static_cast<size_t>(n_) + 1);
        for (int j = 0; j <= n_; ++j) {
            pw[static_cast<size_t>(j)].assign(static_cast<size_t>(d_) + 1, 1);
            for (long long e = 1; e <= d_; ++e)
                pw[static_cast<size_t>(j)][static_cast<size_t>(e)] =
                    f_.mul(pw[static_cast<size_t>(j)][static_cast<size_t>(e) - 1], pt[static_cast<size_t>(j)]);
        }
        std::vector<std::vector<int>> orders;
        detail::exponent_tuples(n_, m - 1 < d_ ? m - 1 : d_, false, orders);
        std::vector<uint64_t> row(cols());
        for (const auto& alpha : orders) {
            for (size_t c = 0; c < cols(); ++c) {
                const auto& beta = monomials_[c];
                uint64_t v = 1;
                int slot = 0;
                for (int j = 0; j <= n_ && v; ++j) {
                    if (j == pivot) continue;
                    int a = alpha[static_cast<size_t>(slot++)];
                    int b = beta[static_cast<size_t>(j)];
                    if (a > b) {
                        v = 0;
                        break;
                    }
                    v = f_.mul(v, f_.mul(binoms_[static_cast<size_t>(b)][static_cast<size_t>(a)],
                                         pw[static_cast<size_t>(j)][static_cast<size_t>(b - a)]));
                }
                row[c] = v;
            }
            ech.absorb(row);
        }
    }

    // Coefficients of t -> f(q + t*v) as a polynomial of degree <= d, for a
    // coefficient vector f over the monomial basis.
    std::vector<uint64_t> restrict_to_line(const std::vector<uint64_t>& coeffs,
                                           const std::vector<uint64_t>& q,
                                           const std::vector<uint64_t>& v) const {
        std::vector<uint64_t> out(static_cast<size_t>(d_ < 0 ? 0 : d_) + 1, 0);
        std::vector<uint64_t> prod, factor, next;
        for (size_t c = 0; c < cols(); ++c) {
            if (coeffs[c] == 0) continue;
            const auto& beta = monomials_[c];
            prod.assign(1, 1);
            for (int j = 0; j <= n_; ++j) {
                int b = beta[static_cast<size_t>(j)];
                if (b == 0) continue;
                // (q_j + t v_j)^b
                factor.assign(static_cast<size_t>(b) + 1, 0);
                for (int i = 0; i <= b; ++i)
                    factor[static_cast<size_t>(i)] =
                        f_.mul(binoms_[static_cast<size_t>(b)][static_cast<size_t>(i)],
                               f_.mul(f_.pow(q[static_cast<size_t>(j)], static_cast<uint64_t>(b - i)),
                                      f_.pow(v[static_cast<size_t>(j)], static_cast<uint64_t>(i))));
                next.assign(prod.size() + static_cast<size_t>(b), 0);
                for (size_t x = 0; x < prod.size(); ++x) {
                    if (prod[x] == 0) continue;
                    for (size_t y = 0; y < factor.size(); ++y)
                        next[x + y] = f_.add(next[x + y], f_.mul(prod[x], factor[y]));
                }
                prod.swap(next);
            }
            for (size_t x = 0; x < prod.size() && x < out.size(); ++x)
                out[x] = f_.add(out[x], f_.mul(coeffs[c], prod[x]));
        }
        return out;
    }

    std::vector<uint64_t> normalize(const std::vector<uint64_t>& point) const {
        std::vector<uint64_t> pt = point;
        int pivot = last_nonzero(pt);
        uint64_t s = f_.inv(pt[static_cast<size_t>(pivot)]);
        for (auto& x : pt) x = f_.mul(x, s);
        return pt;
    }

private:
    static int last_nonzero(const std::vector<uint64_t>& pt) {
        for (int j = static_cast<int>(pt.size()); j-- > 0;)
            if (pt[static_cast<size_t>(j)] != 0) return j;
        throw std::invalid_argument("zero point");
    }

    int n_;
    long long d_;
    fp::Field f_;
    std::vector<std::vector<int>> monomials_;
    std::vector<std::vector<uint64_t>> binoms_;
};

// Point configurations -------------------------------------------------

inline std::vector<uint64_t> random_point(const fp::Field& f, int n, SplitMix64& g) {
    for (;;) {
        std::vector<uint64_t> pt(static_cast<size_t>(n) + 1);
        bool nonzero = false;
        for (auto& x : pt) {
            x = f.random(g);
            nonzero |= x != 0;
        }
        if (nonzero) return pt;
    }
}

// s points for the requested mode: general draws everything at random;
// coordinate_pinned puts the first min(s, n+2) points at the coordinate
// points followed by the unit point (a projectivity moves any n+2 general
// points there, so generic ranks are unchanged).
inline std::vector<std::vector<uint64_t>> make_points(const fp::Field& f, int n, int s,
                                                      PointMode mode, SplitMix64& g,
                                                      const std::vector<std::vector<uint64_t>>& explicit_pts) {
    std::vector<std::vector<uint64_t>> pts;
    if (mode == PointMode::Explicit) {
        if (static_cast<int>(explicit_pts.size()) < s)
            throw std::invalid_argument("explicit point list shorter than the multiplicity list");
        pts.assign(explicit_pts.begin(), explicit_pts.begin() + s);
        return pts;
    }
    pts.reserve(static_cast<size_t>(s));
    for (int i = 0; i < s; ++i) {
        if (mode == PointMode::CoordinatePinned && i < n + 1) {
            std::vector<uint64_t> e(static_cast<size_t>(n) + 1, 0);
            e[static_cast<size_t>(i)] = 1;
            pts.push_back(std::move(e));
        } else if (mode == PointMode::CoordinatePinned && i == n + 1) {
            pts.emplace_back(static_cast<size_t>(n) + 1, 1);
        } else {
            pts.push_back(random_point(f, n, g));
        }
    }
    return pts;
}

// Core rank computation ------------------------------------------------

struct RankOutcome {
    size_t rank = 0;
    size_t cols = 0;
};

inline RankOutcome interpolation_rank(int n, long long d, const std::vector<std::vector<uint64_t>>& pts,
                                      const std::vector<long long>& mults, const fp::Field& f,
                                      long long cap, FpEchelon* keep = nullptr) {
    InterpolationProblem prob(n, d, f);
    Bint rows = 0;
    for (long long m : mults) rows += binom(n + m - 1, n);
    if (rows * static_cast<long long>(prob.cols()) > cap)
        throw cap_exceeded("interpolation matrix larger than the size cap");
    FpEchelon local(f, prob.cols());
    FpEchelon& ech = keep ? *keep : local;
    for (size_t i = 0; i < mults.size(); ++i) prob.absorb_point(ech, pts[i], mults[i]);
    return {ech.rank(), prob.cols()};
}

// Exact number of independent sections over F_p, minimized over trials.
// Specializing the points and reducing mod p can only lower the rank, so
// the reported h0 only ever overestimates the generic value; the failure
// probability per trial is bounded by deg(minor)/p (Schwartz-Zippel).
inline OracleResult h0_interpolation(const LinearSystemSpec& spec, const OracleConfig& cfg) {
    fp::Field f(cfg.prime);
    OracleResult res;
    res.prime = cfg.prime;
    res.seed = cfg.seed;
    res.cols = spec.d() >= 0 ? binom(spec.n() + spec.d(), spec.n()) : Bint(0);
    for (long long m : spec.mults()) res.rows += binom(spec.n() + m - 1, spec.n());
    if (spec.max_mult() > spec.d()) {
        // a point of multiplicity > d kills every degree-d form
        res.h0 = 0;
        res.per_trial_h0.assign(static_cast<size_t>(cfg.trials < 1 ? 1 : cfg.trials), 0);
        res.rank = to_int64(res.cols < res.rows ? res.cols : res.rows);
        res.failure_bound = "exact: multiplicity exceeds degree";
        return res;
    }
    int trials = cfg.trials < 1 ? 1 : cfg.trials;
    long long best_h0 = -1, best_rank = 0;
    for (int t = 0; t < trials; ++t) {
        SplitMix64 g(mix_seed(cfg.seed, static_cast<uint64_t>(t) + 1));
        auto pts = make_points(f, spec.n(), spec.s(), cfg.mode, g, cfg.explicit_points);
        RankOutcome rk = interpolation_rank(spec.n(), spec.d(), pts, spec.mults(), f, cfg.matrix_cap);
        long long h0 = static_cast<long long>(rk.cols) - static_cast<long long>(rk.rank);
        res.per_trial_h0.push_back(h0);
        if (best_h0 < 0 || h0 < best_h0) best_h0 = h0;
        if (static_cast<long long>(rk.rank) > best_rank) best_rank = static_cast<long long>(rk.rank);
    }
    res.h0 = best_h0;
    res.rank = best_rank;
    res.failure_bound =
        "one-sided: reported h0 >= generic h0; P[strict] <= rank*d/p per trial (Schwartz-Zippel)";
    return res;
}

struct ContainmentReport {
    long long multiplicity = 0;       // min over draws and kernel basis
    std::vector<long long> per_draw;  // generic order seen in each draw
    bool consistent = true;           // all draws agreed
};

// Measured multiplicity of containment of the span of the points of I in
// the base locus: the kernel of the interpolation matrix is computed once,
// then the vanishing order along the span is read off at a random span
// point in a random direction, minimized over a kernel basis and over
// several draws.  Orders that differ between draws are flagged.
inline ContainmentReport containment_multiplicity(const LinearSystemSpec& spec, const MultiIndex& I,
                                                  const OracleConfig& cfg) {
    if (I.is_empty() || I.size() > spec.n())
        throw std::invalid_argument("containment: index must span a proper linear cycle");
    fp::Field f(cfg.prime);
    SplitMix64 g(mix_seed(cfg.seed, 0xC0417A1ull));
    auto pts = make_points(f, spec.n(), spec.s(), cfg.mode, g, cfg.explicit_points);
    InterpolationProblem prob(spec.n(), spec.d(), f);
    FpEchelon ech(f, prob.cols());
    interpolation_rank(spec.n(), spec.d(), pts, spec.mults(), f, cfg.matrix_cap, &ech);
    auto kernel = ech.kernel_basis();
    if (kernel.empty()) throw std::domain_error("containment: the system is empty");

    ContainmentReport rep;
    int draws = cfg.containment_draws < 1 ? 1 : cfg.containment_draws;
    long long sentinel = spec.d() + 1;
    for (int t = 0; t < draws; ++t) {
        // random point of the span of {p_i : i in I}
        std::vector<uint64_t> q(static_cast<size_t>(spec.n()) + 1, 0);
        for (;;) {
            std::fill(q.begin(), q.end(), 0);
            for (int label : I.labels()) {
                uint64_t c = f.random(g);
                const auto& p = pts[static_cast<size_t>(label - 1)];
                for (size_t j = 0; j < q.size(); ++j) q[j] = f.add(q[j], f.mul(c, p[j]));
            }
            if (std::any_of(q.begin(), q.end(), [](uint64_t x) { return x != 0; })) break;
        }
        std::vector<uint64_t> v = random_point(f, spec.n(), g);
        long long order = sentinel;
        for (const auto& kv : kernel) {
            auto line = prob.restrict_to_line(kv, q, v);
            long long o = sentinel;
            for (size_t x = 0; x < line.size(); ++x)
                if (line[x] != 0) {
                    o = static_cast<long long>(x);
                    break;
                }
            if (o < order) order = o;
        }
        rep.per_draw.push_back(order);
    }
    rep.multiplicity = *std::min_element(rep.per_draw.begin(), rep.per_draw.end());
    rep.consistent = std::all_of(rep.per_draw.begin(), rep.per_draw.end(),
                                 [&](long long o) { return o == rep.multiplicity; });
    return rep;
}

// Star configurations ---------------------------------------------------

struct StarPoints {
    std::vector<std::pair<int, int>> labels;         // (i, j), 1 <= i < j <= n+2
    std::vector<std::vector<uint64_t>> points;       // q_ij, same order
    std::vector<std::vector<uint64_t>> hyperplanes;  // the n+2 forms used
};

// Builds the C(n+2, 2) points cut out by the given n+2 hyperplanes; empty
// result when the hyperplanes do not meet properly (some n+1 of them share
// a point).
inline std::optional<StarPoints> star_points_from(const fp::Field& f, int n,
                                                  const std::vector<std::vector<uint64_t>>& hyps) {
    if (static_cast<int>(hyps.size()) != n + 2) throw std::invalid_argument("need n+2 hyperplanes");
    for (int skip = 0; skip < n + 2; ++skip) {
        std::vector<std::vector<uint64_t>> sq;
        for (int l = 0; l < n + 2; ++l)
            if (l != skip) sq.push_back(hyps[static_cast<size_t>(l)]);
        if (!fp_nonsingular(f, sq)) return std::nullopt;
    }
    StarPoints sp;
    sp.hyperplanes = hyps;
    for (int i = 1; i <= n + 2; ++i)
        for (int j = i + 1; j <= n + 2; ++j) {
            std::vector<std::vector<uint64_t>> rows;
            for (int l = 1; l <= n + 2; ++l)
                if (l != i && l != j) rows.push_back(hyps[static_cast<size_t>(l - 1)]);
            sp.labels.emplace_back(i, j);
            sp.points.push_back(fp_nullvector(f, rows, static_cast<size_t>(n) + 1));
        }
    return sp;
}

// n+2 random properly-meeting hyperplanes, q_ij the common point of all of
// them except the i-th and j-th.  Degenerate draws are retried; running out
// of retries is an error (it cannot happen for honestly random draws).
inline StarPoints star_points(int n, const OracleConfig& cfg, int max_retries = 32) {
    if (n < 2) throw std::invalid_argument("star configurations need n >= 2");
    fp::Field f(cfg.prime);
    SplitMix64 g(mix_seed(cfg.seed, 0x57A2ull));
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        std::vector<std::vector<uint64_t>> hyps;
        for (int l = 0; l < n + 2; ++l) hyps.push_back(random_point(f, n, g));
        auto sp = star_points_from(f, n, hyps);
        if (sp) return *sp;
    }
    throw std::runtime_error("star_points: degenerate hyperplane draws exhausted the retry budget");
}

}  // namespace linsys
