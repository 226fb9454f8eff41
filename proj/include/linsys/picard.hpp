#pragma once

#include <map>

#include "linsys/multiindex.hpp"

namespace linsys {

// Divisor class degree*H + sum_I exc[I]*E_I on an iterated blow-up of P^n
// along points and linear cycles.  Exceptional keys range over subsets of
// size <= n; classes on the top space are expanded into the span of the
// E_I with |I| <= n-1, so hyperplane-type keys only appear transiently.
struct PicardClass {
    long long degree = 0;
    std::map<MultiIndex, long long> exc;

    static PicardClass hyperplane_multiple(long long d) {
        PicardClass c;
        c.degree = d;
        return c;
    }

    long long coeff(const MultiIndex& I) const {
        auto it = exc.find(I);
        return it == exc.end() ? 0 : it->second;
    }

    void add(const MultiIndex& I, long long c) {
        if (c == 0) return;
        auto [it, inserted] = exc.emplace(I, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) exc.erase(it);
        }
    }

    PicardClass& operator+=(const PicardClass& o) {
        degree += o.degree;
        for (const auto& [I, c] : o.exc) add(I, c);
        return *this;
    }

    PicardClass& operator-=(const PicardClass& o) {
        degree -= o.degree;
        for (const auto& [I, c] : o.exc) add(I, -c);
        return *this;
    }

    PicardClass& operator*=(long long t) {
        if (t == 0) {
            degree = 0;
            exc.clear();
            return *this;
        }
        degree *= t;
        for (auto& [I, c] : exc) c *= t;
        return *this;
    }

    friend PicardClass operator+(PicardClass a, const PicardClass& b) { return a += b; }
    friend PicardClass operator-(PicardClass a, const PicardClass& b) { return a -= b; }
    friend PicardClass operator*(long long t, PicardClass a) { return a *= t; }

    bool is_zero() const { return degree == 0 && exc.empty(); }
    bool operator==(const PicardClass& o) const { return degree == o.degree && exc == o.exc; }
};

}  // namespace linsys
