#ifndef INVOLIB_POLYNOMIAL_HPP
#define INVOLIB_POLYNOMIAL_HPP

#include <algorithm>
#include <cassert>
#include <gmpxx.h>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ordering.hpp"

namespace involib {

/// Exact rational coefficients. Q is the only coefficient field supported;
/// intermediate coefficient growth rules out anything of fixed precision.
using Rational = mpq_class;

struct Term {
    Monomial mono;
    Rational coeff;
};

/// Sparse multivariate polynomial: term list strictly decreasing in the
/// ring ordering, no zero coefficients. The zero polynomial is the empty
/// list. The OrderSpec is carried by the ring context, not per value, so
/// arithmetic is exposed as free functions taking the context.
class Polynomial {
public:
    Polynomial() = default;

    const std::vector<Term>& terms() const { return terms_; }
    std::vector<Term>& terms() { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    const Monomial& lm() const {
        assert(!terms_.empty());
        return terms_.front().mono;
    }
    const Rational& lc() const {
        assert(!terms_.empty());
        return terms_.front().coeff;
    }
    const Term& lt() const {
        assert(!terms_.empty());
        return terms_.front();
    }

    int total_degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = terms_.front().mono.total_degree();
        for (const auto& t : terms_)
            if (t.mono.total_degree() != d) return false;
        return true;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].mono != b.terms_[i].mono ||
                a.terms_[i].coeff != b.terms_[i].coeff)
                return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) {
        return !(a == b);
    }

    /// Build from an arbitrary term list: sorts, merges and drops zeros.
    static Polynomial from_terms(std::vector<Term> ts, const OrderSpec& ord) {
        std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) {
            return mono_greater(a.mono, b.mono, ord);
        });
        Polynomial p;
        for (auto& t : ts) {
            if (t.coeff == 0) continue;
            if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
                p.terms_.back().coeff += t.coeff;
            else
                p.terms_.push_back(std::move(t));
            if (!p.terms_.empty() && p.terms_.back().coeff == 0)
                p.terms_.pop_back();
        }
        return p;
    }

private:
    std::vector<Term> terms_;
};

inline Polynomial poly_zero() { return {}; }

inline Polynomial poly_term(Monomial m, Rational c) {
    Polynomial p;
    if (c != 0) p.terms().push_back({std::move(m), std::move(c)});
    return p;
}

inline Polynomial poly_one(int nvars) {
    return poly_term(unit_monomial(nvars), 1);
}

inline Polynomial poly_neg(const Polynomial& a) {
    Polynomial r = a;
    for (auto& t : r.terms()) t.coeff = -t.coeff;
    return r;
}

/// Merge-add of two canonical term lists.
inline Polynomial poly_add(const Polynomial& a, const Polynomial& b,
                           const OrderSpec& ord) {
    Polynomial r;
    auto& out = r.terms();
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        auto c = mono_cmp(a.terms()[i].mono, b.terms()[j].mono, ord);
        if (c == std::strong_ordering::greater) {
            out.push_back(a.terms()[i++]);
        } else if (c == std::strong_ordering::less) {
            out.push_back(b.terms()[j++]);
        } else {
            Rational s = a.terms()[i].coeff + b.terms()[j].coeff;
            if (s != 0) out.push_back({a.terms()[i].mono, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a.terms()[i]);
    for (; j < b.size(); ++j) out.push_back(b.terms()[j]);
    return r;
}

inline Polynomial poly_sub(const Polynomial& a, const Polynomial& b,
                           const OrderSpec& ord) {
    return poly_add(a, poly_neg(b), ord);
}

/// Multiply by a single term. Monomial multiplication preserves the
/// ordering, so the term list stays sorted.
inline Polynomial poly_mul_term(const Polynomial& a, const Monomial& m,
                                const Rational& c) {
    Polynomial r;
    if (c == 0) return r;
    r.terms().reserve(a.size());
    for (const auto& t : a.terms()) r.terms().push_back({t.mono * m, t.coeff * c});
    return r;
}

inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b,
                           const OrderSpec& ord) {
    if (a.is_zero() || b.is_zero()) return {};
    std::map<Monomial, Rational> acc;
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms())
            acc[ta.mono * tb.mono] += ta.coeff * tb.coeff;
    std::vector<Term> ts;
    ts.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) ts.push_back({m, std::move(c)});
    return Polynomial::from_terms(std::move(ts), ord);
}

inline Polynomial poly_scale(const Polynomial& a, const Rational& c) {
    Polynomial r;
    if (c == 0) return r;
    r.terms().reserve(a.size());
    for (const auto& t : a.terms()) r.terms().push_back({t.mono, t.coeff * c});
    return r;
}

inline Polynomial normalize_monic(const Polynomial& a) {
    if (a.is_zero())
        throw std::invalid_argument("normalize_monic: zero polynomial");
    return poly_scale(a, Rational(1) / a.lc());
}

inline std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

inline std::string mono_to_string(const Monomial& m, const OrderSpec& ord) {
    std::string s;
    for (int i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += ord.var_names[i];
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

inline std::string poly_to_string(const Polynomial& p, const OrderSpec& ord) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rational c = t.coeff;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) s += "-";
            first = false;
        } else {
            s += neg ? " - " : " + ";
        }
        std::string ms = mono_to_string(t.mono, ord);
        if (c != 1 || ms == "1") {
            s += rational_to_string(c);
            if (ms != "1") s += "*";
        }
        if (ms != "1") s += ms;
    }
    return s;
}

/// Homogenize each polynomial with a fresh smallest variable appended to
/// the ring. Returns the extended context.
inline OrderSpec homogenize_context(const OrderSpec& ord,
                                    const std::string& hname = "h0") {
    OrderSpec ext = ord;
    std::string name = hname;
    while (std::find(ext.var_names.begin(), ext.var_names.end(), name) !=
           ext.var_names.end())
        name += "_";
    ext.var_names.push_back(name);
    ext.nvars += 1;
    return ext;
}

inline Polynomial homogenize(const Polynomial& p, const OrderSpec& ext_ord) {
    if (p.is_zero()) return {};
    int d = p.total_degree();
    std::vector<Term> ts;
    ts.reserve(p.size());
    for (const auto& t : p.terms()) {
        std::vector<int> e = t.mono.exponents();
        e.push_back(d - t.mono.total_degree());
        ts.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(std::move(ts), ext_ord);
}

} // namespace involib

#endif
