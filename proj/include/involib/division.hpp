#ifndef INVOLIB_DIVISION_HPP
#define INVOLIB_DIVISION_HPP

#include <algorithm>
#include <cassert>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "module_element.hpp"

namespace involib {

/// Janet is Noetherian (every ideal has a finite Janet basis); Pommaret is
/// not, so Pommaret completions run under an iteration cap.
enum class DivisionKind { Janet, Pommaret };

inline const char* division_kind_name(DivisionKind k) {
    return k == DivisionKind::Janet ? "janet" : "pommaret";
}

inline DivisionKind division_kind_from_name(const std::string& s) {
    if (s == "janet") return DivisionKind::Janet;
    if (s == "pommaret") return DivisionKind::Pommaret;
    throw std::invalid_argument("unknown division: " + s);
}

/// Splitting of {x_1..x_n} into multiplicative and non-multiplicative
/// variables of one monomial relative to a set.
struct VariablePartition {
    VarMask mult = 0;
    int nvars = 0;

    VarMask nonmult() const {
        return ~mult & ((nvars == 64) ? ~VarMask{0} : ((VarMask{1} << nvars) - 1));
    }
    bool is_mult(int var) const { return mask_contains(mult, var); }
};

/// Pommaret: for u with class k, exactly {x_k,...,x_n} are multiplicative;
/// all variables for u = 1. Independent of any reference set.
inline VariablePartition pommaret_partition(const Monomial& u) {
    VariablePartition p;
    p.nvars = u.nvars();
    int k = u.cls();
    if (k == 0) {
        p.mult = (p.nvars == 64) ? ~VarMask{0} : ((VarMask{1} << p.nvars) - 1);
    } else {
        for (int i = k - 1; i < p.nvars; ++i) p.mult |= mask_of(i);
    }
    return p;
}

namespace detail {

/// Janet partition of every element of U at once: x_1 is multiplicative
/// for u iff deg_1(u) is maximal in U; x_i is multiplicative for u iff
/// deg_i(u) is maximal within the group of elements sharing the degrees
/// d_1..d_{i-1} of u.
inline std::vector<VarMask> janet_mult_all(const std::vector<Monomial>& U) {
    const size_t m = U.size();
    std::vector<VarMask> mult(m, 0);
    if (m == 0) return mult;
    const int n = U[0].nvars();
    std::vector<std::vector<size_t>> groups{std::vector<size_t>(m)};
    for (size_t i = 0; i < m; ++i) groups[0][i] = i;
    for (int var = 0; var < n; ++var) {
        std::vector<std::vector<size_t>> next;
        for (auto& g : groups) {
            int dmax = 0;
            for (size_t idx : g) dmax = std::max(dmax, U[idx][var]);
            // split by degree in this variable for the next round
            std::map<int, std::vector<size_t>> split;
            for (size_t idx : g) {
                if (U[idx][var] == dmax) mult[idx] |= mask_of(var);
                split[U[idx][var]].push_back(idx);
            }
            for (auto& [d, sub] : split) next.push_back(std::move(sub));
        }
        groups = std::move(next);
    }
    return mult;
}

} // namespace detail

/// Janet partition of u relative to the finite set U (which must contain u).
inline VariablePartition janet_partition(const Monomial& u,
                                         const std::vector<Monomial>& U) {
    auto it = std::find(U.begin(), U.end(), u);
    if (it == U.end())
        throw std::invalid_argument("janet_partition: u not in U");
    auto mult = detail::janet_mult_all(U);
    VariablePartition p;
    p.nvars = u.nvars();
    p.mult = mult[static_cast<size_t>(it - U.begin())];
    return p;
}

inline VariablePartition partition(const Monomial& u,
                                   const std::vector<Monomial>& U,
                                   DivisionKind kind) {
    return kind == DivisionKind::Janet ? janet_partition(u, U)
                                       : pommaret_partition(u);
}

/// u |_L w : u divides w and w/u involves only multiplicative variables
/// of u. For Janet the partition is taken relative to U.
inline bool inv_divides(const Monomial& u, const Monomial& w,
                        const std::vector<Monomial>& U, DivisionKind kind) {
    if (!u.divides(w)) return false;
    VariablePartition p = partition(u, U, kind);
    Monomial q = w / u;
    return (q.support() & ~p.mult) == 0;
}

/// Precomputed partition table for a fixed generating set; completion
/// loops rebuild one of these whenever the set changes.
class DivisionTable {
public:
    DivisionTable() = default;

    DivisionTable(DivisionKind kind, std::vector<Monomial> gens)
        : kind_(kind), gens_(std::move(gens)) {
        if (kind_ == DivisionKind::Janet) {
            mult_ = detail::janet_mult_all(gens_);
        } else {
            mult_.reserve(gens_.size());
            for (const auto& g : gens_) mult_.push_back(pommaret_partition(g).mult);
        }
    }

    DivisionKind kind() const { return kind_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    size_t size() const { return gens_.size(); }

    VarMask mult_mask(size_t i) const { return mult_[i]; }
    VarMask nonmult_mask(size_t i) const {
        int n = gens_[i].nvars();
        return ~mult_[i] & ((n == 64) ? ~VarMask{0} : ((VarMask{1} << n) - 1));
    }

    bool inv_divides(size_t i, const Monomial& w) const {
        if (!gens_[i].divides(w)) return false;
        return ((w / gens_[i]).support() & ~mult_[i]) == 0;
    }

    /// Index of an involutive divisor of w; ties resolved by smallest
    /// leading monomial, then smallest index.
    std::optional<size_t> find_divisor(const Monomial& w, const OrderSpec& ord) const {
        std::optional<size_t> best;
        for (size_t i = 0; i < gens_.size(); ++i) {
            if (!inv_divides(i, w)) continue;
            if (!best) {
                best = i;
            } else {
                auto c = mono_cmp(gens_[i], gens_[*best], ord);
                if (c == std::strong_ordering::less) best = i;
            }
        }
        return best;
    }

private:
    DivisionKind kind_ = DivisionKind::Janet;
    std::vector<Monomial> gens_;
    std::vector<VarMask> mult_;
};

/// Multiplicative variables of a module element within a set H: elements
/// are grouped by leading slot and the monomial-level division is applied
/// inside each group (Pommaret ignores the group).
inline VariablePartition module_partition(const ModuleElement& h,
                                          const std::vector<ModuleElement>& H,
                                          DivisionKind kind,
                                          const ModuleOrderSpec& mo) {
    if (h.is_zero())
        throw std::invalid_argument("module_partition: zero element");
    ModuleMonomial lead = lm_module(h, mo);
    if (kind == DivisionKind::Pommaret) return pommaret_partition(lead.mono);
    std::vector<Monomial> slot_leads;
    for (const auto& g : H) {
        if (g.is_zero())
            throw std::invalid_argument("module_partition: zero element in H");
        ModuleMonomial gl = lm_module(g, mo);
        if (gl.slot == lead.slot) slot_leads.push_back(gl.mono);
    }
    return janet_partition(lead.mono, slot_leads);
}

/// Checks the three involutive-division axioms on the concrete partition
/// of U: disjointness of cones up to involutive divisibility, containment
/// of multiplicative monoids along involutive divisibility, and growth of
/// multiplicative sets under restriction to subsets. Returns the list of
/// violations; empty means the check passed. Subset enumeration is capped.
inline std::vector<std::string> check_division_axioms(
    const std::vector<Monomial>& U, DivisionKind kind,
    size_t subset_cap = 8) {
    std::vector<std::string> bad;
    if (U.empty()) return bad;
    const int n = U[0].nvars();
    OrderSpec plain = OrderSpec::make(OrderKind::DegRevLex,
                                      std::vector<std::string>(n, "x"));
    DivisionTable tab(kind, U);

    auto in_cone = [&](size_t i, const Monomial& w) { return tab.inv_divides(i, w); };

    // Axiom 1: if the cones of u and v intersect, one involutively divides
    // the other. The componentwise max of u and v lies in the intersection
    // iff the intersection is nonempty, so the test is exact.
    for (size_t i = 0; i < U.size(); ++i) {
        for (size_t j = i + 1; j < U.size(); ++j) {
            Monomial join = lcm(U[i], U[j]);
            bool meet = in_cone(i, join) && in_cone(j, join);
            if (meet && !in_cone(i, U[j]) && !in_cone(j, U[i]))
                bad.push_back("axiom1: cones of " + mono_to_string(U[i], plain) +
                              " and " + mono_to_string(U[j], plain) +
                              " intersect without involutive divisibility");
        }
    }

    // Axiom 2: v in cone(u) implies L(v,U) contained in L(u,U).
    for (size_t i = 0; i < U.size(); ++i) {
        for (size_t j = 0; j < U.size(); ++j) {
            if (i == j) continue;
            if (in_cone(i, U[j]) && (tab.mult_mask(j) & ~tab.mult_mask(i)) != 0)
                bad.push_back("axiom2: " + mono_to_string(U[j], plain) +
                              " in cone of " + mono_to_string(U[i], plain) +
                              " but multiplicative sets not nested");
        }
    }

    // Axiom 3: restricting to a subset V containing u can only enlarge the
    // multiplicative set of u.
    if (U.size() <= subset_cap) {
        const size_t full = size_t{1} << U.size();
        for (size_t mask = 1; mask + 1 < full; ++mask) {
            std::vector<Monomial> V;
            std::vector<size_t> idx;
            for (size_t i = 0; i < U.size(); ++i)
                if ((mask >> i) & 1) {
                    V.push_back(U[i]);
                    idx.push_back(i);
                }
            DivisionTable sub(kind, V);
            for (size_t vpos = 0; vpos < idx.size(); ++vpos) {
                if ((tab.mult_mask(idx[vpos]) & ~sub.mult_mask(vpos)) != 0)
                    bad.push_back("axiom3: multiplicative set of " +
                                  mono_to_string(V[vpos], plain) +
                                  " shrank under subset restriction");
            }
        }
    }
    return bad;
}

} // namespace involib

#endif
