#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace linsys {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Subset enumeration is exponential in the number of points; everything is
// pruned, but past this many points we refuse instead of silently running
// 2^s work.
inline constexpr int kMaxPoints = 30;

// The linear system of degree-d hypersurfaces of P^n with assigned
// multiplicities m_1..m_s at s points in general position.  Multiplicities
// are kept in the given order; a non-increasing copy plus the sorting
// permutation is kept alongside for enumeration and reporting.
//
// Validated specs have n >= 1, d >= 0 and m_i >= 0.  Cremona images may
// carry negative degree or multiplicities; those are formal classes and are
// built through `unchecked`.
class LinearSystemSpec {
public:
    LinearSystemSpec(int n, long long d, std::vector<long long> mults)
        : LinearSystemSpec(n, d, std::move(mults), true) {}

    static LinearSystemSpec unchecked(int n, long long d, std::vector<long long> mults) {
        return LinearSystemSpec(n, d, std::move(mults), false);
    }

    int n() const { return n_; }
    long long d() const { return d_; }
    int s() const { return static_cast<int>(mults_.size()); }
    const std::vector<long long>& mults() const { return mults_; }
    long long mult(int label1) const { return mults_.at(static_cast<size_t>(label1 - 1)); }

    // Multiplicities sorted non-increasing; sorted_label(i) is the 1-based
    // original label of the i-th sorted entry (ties keep the lowest label
    // first, so the order is deterministic).
    const std::vector<long long>& sorted_mults() const { return sorted_; }
    int sorted_label(int i) const { return order_[static_cast<size_t>(i)] + 1; }

    long long sum_mults() const { return std::accumulate(mults_.begin(), mults_.end(), 0LL); }

    // b = sum(m_i) - n*d, the coordinate controlling the effectivity chambers.
    long long b() const { return sum_mults() - static_cast<long long>(n_) * d_; }

    long long max_mult() const {
        return mults_.empty() ? 0 : *std::max_element(mults_.begin(), mults_.end());
    }

    int count_mult(long long value) const {
        return static_cast<int>(std::count(mults_.begin(), mults_.end(), value));
    }

    // Same system with the zero multiplicities dropped.  Zero points change
    // neither sections nor any of the dimension sums; regime classification
    // works on the stripped system.
    LinearSystemSpec stripped_zeros() const {
        std::vector<long long> m;
        m.reserve(mults_.size());
        for (long long v : mults_)
            if (v != 0) m.push_back(v);
        return LinearSystemSpec::unchecked(n_, d_, std::move(m));
    }

    bool operator==(const LinearSystemSpec& o) const {
        return n_ == o.n_ && d_ == o.d_ && mults_ == o.mults_;
    }

private:
    LinearSystemSpec(int n, long long d, std::vector<long long> mults, bool validate)
        : n_(n), d_(d), mults_(std::move(mults)) {
        if (n_ < 1) throw std::invalid_argument("spec: ambient dimension must be >= 1");
        if (mults_.size() > kMaxPoints)
            throw cap_exceeded("spec: more than " + std::to_string(kMaxPoints) + " points");
        if (validate) {
            if (d_ < 0) throw std::invalid_argument("spec: degree must be >= 0");
            for (long long v : mults_)
                if (v < 0) throw std::invalid_argument("spec: multiplicities must be >= 0");
        }
        order_.resize(mults_.size());
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return mults_[static_cast<size_t>(a)] > mults_[static_cast<size_t>(b)]; });
        sorted_.reserve(mults_.size());
        for (int i : order_) sorted_.push_back(mults_[static_cast<size_t>(i)]);
    }

    int n_;
    long long d_;
    std::vector<long long> mults_;
    std::vector<int> order_;
    std::vector<long long> sorted_;
};

// Multiplicity shorthand shared by all CLI commands: comma-separated tokens,
// each "v" or "v^k" with v >= 0 and k >= 1.  "6^7" -> seven sixes,
// "3,1^2" -> {3,1,1}.  An empty string denotes no points.
inline std::vector<long long> parse_mult_spec(const std::string& text) {
    std::vector<long long> out;
    size_t pos = 0;
    auto fail = [](const std::string& tok) -> long long {
        throw parse_error("bad multiplicity token '" + tok + "'");
    };
    auto parse_uint = [&](const std::string& tok, const std::string& part) {
        if (part.empty()) fail(tok);
        for (char c : part)
            if (!std::isdigit(static_cast<unsigned char>(c))) fail(tok);
        if (part.size() > 9) fail(tok);  // keeps everything far from overflow
        return std::stoll(part);
    };
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (!tok.empty()) {
            size_t caret = tok.find('^');
            long long value, repeat = 1;
            if (caret == std::string::npos) {
                value = parse_uint(tok, tok);
            } else {
                value = parse_uint(tok, tok.substr(0, caret));
                repeat = parse_uint(tok, tok.substr(caret + 1));
                if (repeat < 1) fail(tok);
            }
            if (static_cast<long long>(out.size()) + repeat > kMaxPoints)
                throw cap_exceeded("multiplicity list longer than " + std::to_string(kMaxPoints));
            out.insert(out.end(), static_cast<size_t>(repeat), value);
        } else if (!text.empty()) {
            fail("");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace linsys
