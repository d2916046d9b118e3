#ifndef INVOLIB_MODULE_ELEMENT_HPP
#define INVOLIB_MODULE_ELEMENT_HPP

#include <cassert>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace involib {

/// Element of the free module P^t, stored as a sparse map slot -> nonzero
/// polynomial coordinate. The rank t is implied by context. These carry
/// representations, signatures and syzygies.
class ModuleElement {
public:
    ModuleElement() = default;

    static ModuleElement unit(int slot, int nvars) {
        ModuleElement m;
        m.coords_[slot] = poly_one(nvars);
        return m;
    }

    const std::map<int, Polynomial>& coords() const { return coords_; }
    bool is_zero() const { return coords_.empty(); }

    const Polynomial* coord(int slot) const {
        auto it = coords_.find(slot);
        return it == coords_.end() ? nullptr : &it->second;
    }

    void set_coord(int slot, Polynomial p) {
        if (p.is_zero())
            coords_.erase(slot);
        else
            coords_[slot] = std::move(p);
    }

    friend bool operator==(const ModuleElement& a, const ModuleElement& b) {
        return a.coords_ == b.coords_;
    }

private:
    friend ModuleElement madd(const ModuleElement&, const ModuleElement&,
                              const OrderSpec&);
    std::map<int, Polynomial> coords_;
};

inline ModuleElement madd(const ModuleElement& a, const ModuleElement& b,
                          const OrderSpec& ord) {
    ModuleElement r = a;
    for (const auto& [slot, p] : b.coords()) {
        auto it = r.coords_.find(slot);
        if (it == r.coords_.end()) {
            r.coords_[slot] = p;
        } else {
            Polynomial s = poly_add(it->second, p, ord);
            if (s.is_zero())
                r.coords_.erase(it);
            else
                it->second = std::move(s);
        }
    }
    return r;
}

inline ModuleElement mneg(const ModuleElement& a) {
    ModuleElement r;
    for (const auto& [slot, p] : a.coords()) r.set_coord(slot, poly_neg(p));
    return r;
}

inline ModuleElement msub(const ModuleElement& a, const ModuleElement& b,
                          const OrderSpec& ord) {
    return madd(a, mneg(b), ord);
}

/// Coordinate-wise multiplication by the term c*m.
inline ModuleElement mscale_term(const ModuleElement& a, const Monomial& m,
                                 const Rational& c) {
    ModuleElement r;
    if (c == 0) return r;
    for (const auto& [slot, p] : a.coords()) r.set_coord(slot, poly_mul_term(p, m, c));
    return r;
}

inline ModuleElement mscale_poly(const ModuleElement& a, const Polynomial& f,
                                 const OrderSpec& ord) {
    ModuleElement r;
    for (const auto& [slot, p] : a.coords()) r.set_coord(slot, poly_mul(p, f, ord));
    return r;
}

/// Greatest module monomial of a nonzero element under the module
/// ordering. Applied to a representation this is its signature.
inline ModuleMonomial lm_module(const ModuleElement& a, const ModuleOrderSpec& mo) {
    if (a.is_zero())
        throw std::invalid_argument("lm_module: zero module element");
    bool have = false;
    ModuleMonomial best;
    for (const auto& [slot, p] : a.coords()) {
        ModuleMonomial cand{p.lm(), slot};
        if (!have || module_mono_less(best, cand, mo)) {
            best = cand;
            have = true;
        }
    }
    return best;
}

inline Rational module_lead_coeff(const ModuleElement& a, const ModuleMonomial& lead) {
    const Polynomial* p = a.coord(lead.slot);
    assert(p);
    for (const auto& t : p->terms())
        if (t.mono == lead.mono) return t.coeff;
    assert(false);
    return 0;
}

/// Evaluate sum_i a[i] * polys[i]; slots index into polys.
inline Polynomial module_evaluate(const ModuleElement& a,
                                  const std::vector<Polynomial>& polys,
                                  const OrderSpec& ord) {
    Polynomial acc;
    for (const auto& [slot, p] : a.coords()) {
        if (slot < 0 || slot >= static_cast<int>(polys.size()))
            throw std::out_of_range("module_evaluate: slot out of range");
        acc = poly_add(acc, poly_mul(p, polys[slot], ord), ord);
    }
    return acc;
}

inline std::string module_to_string(const ModuleElement& a, const OrderSpec& ord) {
    if (a.is_zero()) return "0";
    std::string s;
    for (const auto& [slot, p] : a.coords()) {
        if (!s.empty()) s += " + ";
        s += "(" + poly_to_string(p, ord) + ")*e" + std::to_string(slot + 1);
    }
    return s;
}

} // namespace involib

#endif
