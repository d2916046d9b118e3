#ifndef INVOLIB_MONOMIAL_HPP
#define INVOLIB_MONOMIAL_HPP

#include <cassert>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace involib {

/// Set of variable indices (0-based), packed as a bitmask. Rings are
/// limited to 64 variables, which is far beyond anything the completion
/// algorithms can handle anyway.
using VarMask = std::uint64_t;

inline bool mask_contains(VarMask m, int var) { return (m >> var) & 1u; }
inline VarMask mask_of(int var) { return VarMask{1} << var; }
inline int mask_count(VarMask m) { return __builtin_popcountll(m); }

/// Monomial in K[x_1,...,x_n], stored as a dense exponent vector.
/// Index 0 corresponds to x_1, the greatest variable.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}

    int nvars() const { return static_cast<int>(exps_.size()); }
    int deg(int var) const { return exps_[var]; }
    int& operator[](int var) { return exps_[var]; }
    int operator[](int var) const { return exps_[var]; }

    int total_degree() const {
        return std::accumulate(exps_.begin(), exps_.end(), 0);
    }

    bool is_one() const {
        for (int e : exps_) if (e != 0) return false;
        return true;
    }

    /// Largest index (1-based) of a variable dividing the monomial;
    /// 0 for the unit monomial.
    int cls() const {
        for (int i = nvars() - 1; i >= 0; --i)
            if (exps_[i] > 0) return i + 1;
        return 0;
    }

    VarMask support() const {
        VarMask m = 0;
        for (int i = 0; i < nvars(); ++i)
            if (exps_[i] > 0) m |= mask_of(i);
        return m;
    }

    bool divides(const Monomial& w) const {
        assert(nvars() == w.nvars());
        for (int i = 0; i < nvars(); ++i)
            if (exps_[i] > w.exps_[i]) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        assert(a.nvars() == b.nvars());
        Monomial r(a);
        for (int i = 0; i < r.nvars(); ++i) r.exps_[i] += b.exps_[i];
        return r;
    }

    /// Exact quotient; requires b | a.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        assert(b.divides(a));
        Monomial r(a);
        for (int i = 0; i < r.nvars(); ++i) r.exps_[i] -= b.exps_[i];
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exps_ == b.exps_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) {
        return !(a == b);
    }

    /// Plain lexicographic comparison on the exponent vector, used only
    /// to get deterministic container keys; not a monomial ordering.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        return a.exps_ < b.exps_;
    }

    const std::vector<int>& exponents() const { return exps_; }

private:
    std::vector<int> exps_;
};

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    assert(a.nvars() == b.nvars());
    Monomial r(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
    assert(a.nvars() == b.nvars());
    Monomial r(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
    assert(a.nvars() == b.nvars());
    for (int i = 0; i < a.nvars(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

inline Monomial unit_monomial(int nvars) { return Monomial(nvars); }

inline Monomial var_monomial(int nvars, int var) {
    Monomial m(nvars);
    m[var] = 1;
    return m;
}

} // namespace involib

#endif
