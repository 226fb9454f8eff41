#pragma once

#include <atomic>
#include <fstream>
#include <mutex>
#include <thread>

#include "linsys/serialize.hpp"

namespace linsys {

// Parameter sweep comparing the closed-form tables against the oracle.
// Guaranteed-regime specs must agree exactly (any mismatch is a failure:
// the tables are proven there); OUTSIDE specs are recorded with their
// ldim-vs-oracle gap, which is where non-linear obstructions show up.
struct ScanJob {
    int n_min = 2, n_max = 3;
    long long d_min = 1, d_max = 6;
    int s_min = 1, s_max = 8;
    bool exhaustive = false;    // otherwise random sampling
    long long samples = 100;    // random mode: number of specs drawn
    long long mult_max = -1;    // default d+1
    std::string regime_filter;  // empty = all; otherwise a regime name
    uint64_t seed = 1;
    int threads = 0;  // 0 = hardware
    std::string out_path;       // findings file (JSON lines); cursor sidecar next to it
};

struct ScanFinding {
    LinearSystemSpec spec{1, 0, {}};
    std::string regime;
    long long ldim_clamped = 0;
    long long oracle_h0 = 0;
    long long gap = 0;
};

struct ScanSummary {
    long long total = 0;
    long long guaranteed_checked = 0;
    long long mismatches = 0;
    long long outside_recorded = 0;
    long long skipped_resume = 0;
    std::vector<std::string> mismatch_descriptions;
};

namespace detail {

inline uint64_t spec_hash(const LinearSystemSpec& s) {
    uint64_t h = mix_seed(0x5eedULL, static_cast<uint64_t>(s.n()));
    h = mix_seed(h, static_cast<uint64_t>(s.d()));
    for (long long m : s.mults()) h = mix_seed(h, static_cast<uint64_t>(m));
    return h;
}

inline std::vector<LinearSystemSpec> scan_grid(const ScanJob& job) {
    std::vector<LinearSystemSpec> specs;
    if (job.exhaustive) {
        for (int n = job.n_min; n <= job.n_max; ++n)
            for (long long d = job.d_min; d <= job.d_max; ++d)
                for (int s = job.s_min; s <= job.s_max; ++s) {
                    long long mmax = job.mult_max >= 0 ? job.mult_max : d + 1;
                    // non-increasing multiplicity vectors, one per multiset
                    std::vector<long long> m(static_cast<size_t>(s), 1);
                    std::function<void(int, long long)> rec = [&](int pos, long long hi) {
                        if (pos == s) {
                            specs.emplace_back(n, d, m);
                            return;
                        }
                        for (long long v = hi; v >= 1; --v) {
                            m[static_cast<size_t>(pos)] = v;
                            rec(pos + 1, v);
                        }
                    };
                    if (s >= 1 && mmax >= 1) rec(0, mmax);
                }
    } else {
        SplitMix64 g(job.seed);
        for (long long i = 0; i < job.samples; ++i) {
            int n = job.n_min + static_cast<int>(g.next() % static_cast<uint64_t>(job.n_max - job.n_min + 1));
            long long d = job.d_min + static_cast<long long>(g.next() % static_cast<uint64_t>(job.d_max - job.d_min + 1));
            int s = job.s_min + static_cast<int>(g.next() % static_cast<uint64_t>(job.s_max - job.s_min + 1));
            long long mmax = job.mult_max >= 0 ? job.mult_max : d + 1;
            if (mmax < 1) mmax = 1;
            std::vector<long long> m(static_cast<size_t>(s));
            for (auto& v : m) v = 1 + static_cast<long long>(g.next() % static_cast<uint64_t>(mmax));
            specs.emplace_back(n, d, std::move(m));
        }
    }
    return specs;
}

}  // namespace detail

// Deterministic for a fixed job: the grid, the per-spec oracle seeds and the
// findings bytes do not depend on the thread count.  A cursor sidecar makes
// interrupted scans resumable.
inline ScanSummary run_scan(const ScanJob& job, const OracleConfig& base_cfg,
                            std::ostream* log = nullptr) {
    std::vector<LinearSystemSpec> specs = detail::scan_grid(job);
    ScanSummary summary;
    summary.total = static_cast<long long>(specs.size());

    size_t start_index = 0;
    std::string cursor_path = job.out_path.empty() ? "" : job.out_path + ".cursor";
    if (!cursor_path.empty()) {
        std::ifstream cur(cursor_path);
        long long done = 0;
        if (cur >> done && done > 0) start_index = static_cast<size_t>(done);
        summary.skipped_resume = static_cast<long long>(start_index);
    }

    struct Row {
        bool outside = false;
        bool mismatch = false;
        std::string line;       // findings line for outside rows
        std::string mismatch_desc;
        bool skip = false;
    };
    std::vector<Row> rows(specs.size());

    auto work = [&](size_t idx) {
        const LinearSystemSpec& spec = specs[idx];
        Row& row = rows[idx];
        RegimeReport reg = classify_regime(spec);
        if (!job.regime_filter.empty() && job.regime_filter != regime_name(reg.tag)) {
            row.skip = true;
            return;
        }
        OracleConfig cfg = base_cfg;
        cfg.seed = mix_seed(job.seed, detail::spec_hash(spec));
        OracleResult orc = h0_interpolation(spec, cfg);
        Bint ld = ldim(spec);
        long long clamped = to_int64(ld > 0 ? ld : Bint(0), "ldim");
        if (reg.guaranteed) {
            long long expect = to_int64(ld, "ldim");
            if (expect < 0) expect = 0;  // non-effective chambers carry ldim = 0 anyway
            if (orc.h0 != expect) {
                row.mismatch = true;
                json j = spec_json(spec);
                j["regime"] = regime_name(reg.tag);
                j["table_h0"] = expect;
                j["oracle_h0"] = orc.h0;
                row.mismatch_desc = j.dump();
            }
        } else {
            row.outside = true;
            json j = spec_json(spec);
            j["regime"] = regime_name(reg.tag);
            j["ldim"] = bint_json(ld);
            j["lexpdim_floor"] = clamped;
            j["oracle_h0"] = orc.h0;
            j["gap"] = orc.h0 - clamped;
            row.line = j.dump();
        }
    };

    unsigned hw = std::thread::hardware_concurrency();
    unsigned nthreads = job.threads > 0 ? static_cast<unsigned>(job.threads) : (hw ? hw : 1);
    if (nthreads > 1 && specs.size() > start_index + 1) {
        std::atomic<size_t> next(start_index);
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t)
            pool.emplace_back([&]() {
                for (;;) {
                    size_t idx = next.fetch_add(1);
                    if (idx >= specs.size()) return;
                    work(idx);
                }
            });
        for (auto& th : pool) th.join();
    } else {
        for (size_t idx = start_index; idx < specs.size(); ++idx) work(idx);
    }

    std::ofstream out;
    if (!job.out_path.empty()) out.open(job.out_path, std::ios::app);
    for (size_t idx = start_index; idx < specs.size(); ++idx) {
        const Row& row = rows[idx];
        if (row.skip) continue;
        if (row.mismatch) {
            ++summary.guaranteed_checked;
            ++summary.mismatches;
            summary.mismatch_descriptions.push_back(row.mismatch_desc);
            if (log) *log << "MISMATCH " << row.mismatch_desc << "\n";
        } else if (row.outside) {
            ++summary.outside_recorded;
            if (out.is_open()) out << row.line << "\n";
            if (log) *log << "outside " << row.line << "\n";
        } else {
            ++summary.guaranteed_checked;
        }
        if (!cursor_path.empty()) {
            std::ofstream cur(cursor_path, std::ios::trunc);
            cur << idx + 1 << "\n";
        }
    }
    return summary;
}

}  // namespace linsys
