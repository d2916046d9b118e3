#ifndef INVOLIB_GROEBNER_HPP
#define INVOLIB_GROEBNER_HPP

#include <algorithm>
#include <atomic>
#include <cassert>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "division.hpp"
#include "errors.hpp"
#include "module_element.hpp"

namespace involib {

struct NormalFormResult {
    Polynomial remainder;
    ModuleElement quotient; // slots index into the divisor list
};

/// Full normal form by conventional division: f = sum q[i]*G[i] + r with
/// no term of r divisible by any lm(G[i]) and lm(q[i]*G[i]) <= lm(f).
inline NormalFormResult normal_form(const Polynomial& f,
                                    const std::vector<Polynomial>& G,
                                    const OrderSpec& ord) {
    NormalFormResult out;
    Polynomial h = f;
    std::vector<Term> kept;
    while (!h.is_zero()) {
        bool reduced = false;
        for (size_t i = 0; i < G.size(); ++i) {
            assert(!G[i].is_zero());
            if (!G[i].lm().divides(h.lm())) continue;
            Monomial t = h.lm() / G[i].lm();
            Rational c = h.lc() / G[i].lc();
            h = poly_sub(h, poly_mul_term(G[i], t, c), ord);
            ModuleElement step;
            step.set_coord(static_cast<int>(i), poly_term(t, c));
            out.quotient = madd(out.quotient, step, ord);
            reduced = true;
            break;
        }
        if (!reduced) {
            kept.push_back(h.lt());
            h.terms().erase(h.terms().begin());
        }
    }
    out.remainder = Polynomial::from_terms(std::move(kept), ord);
    return out;
}

struct SPair {
    size_t i, j;
    Monomial lcm_mono;
};

struct GBOptions {
    bool reduced = false;
    bool use_criteria = false;
    const std::atomic<bool>* cancel = nullptr;
};

/// Basis together with the exact transform: basis[l] = sum_i A[l][i]*input[i],
/// where transform[l] is the module element holding column l of A. When the
/// basis is not reduced, the input occupies the first positions and the
/// transform starts with an identity block.
struct GBResult {
    std::vector<Polynomial> basis;
    std::vector<ModuleElement> transform;
};

namespace detail {

inline void poll(const GBOptions& opts) {
    if (opts.cancel && opts.cancel->load(std::memory_order_relaxed))
        throw operation_cancelled();
}

/// Minimalize + tail-reduce + normalize in place, keeping transforms exact.
inline void reduce_basis(std::vector<Polynomial>& G,
                         std::vector<ModuleElement>& reps,
                         const OrderSpec& ord) {
    // drop generators whose lead is divisible by another kept lead
    std::vector<size_t> keep;
    for (size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < G.size(); ++j) {
            if (i == j) continue;
            if (!G[j].lm().divides(G[i].lm())) continue;
            if (G[j].lm() == G[i].lm() && j > i) continue; // keep first of equals
            redundant = true;
            break;
        }
        if (!redundant) keep.push_back(i);
    }
    std::vector<Polynomial> H;
    std::vector<ModuleElement> hreps;
    for (size_t i : keep) {
        H.push_back(G[i]);
        hreps.push_back(reps[i]);
    }
    // full tail reduction of each element against the others
    for (size_t i = 0; i < H.size(); ++i) {
        std::vector<Polynomial> others;
        std::vector<size_t> omap;
        for (size_t j = 0; j < H.size(); ++j)
            if (j != i) {
                others.push_back(H[j]);
                omap.push_back(j);
            }
        NormalFormResult nf = normal_form(H[i], others, ord);
        ModuleElement rep = hreps[i];
        for (const auto& [slot, q] : nf.quotient.coords())
            rep = msub(rep, mscale_poly(hreps[omap[slot]], q, ord), ord);
        Rational lc = nf.remainder.lc();
        H[i] = poly_scale(nf.remainder, 1 / lc);
        hreps[i] = mscale_term(rep, unit_monomial(ord.nvars), 1 / lc);
    }
    // canonical order: increasing leading monomial
    std::vector<size_t> perm(H.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
        return mono_less(H[a].lm(), H[b].lm(), ord);
    });
    std::vector<Polynomial> H2;
    std::vector<ModuleElement> r2;
    for (size_t i : perm) {
        H2.push_back(std::move(H[i]));
        r2.push_back(std::move(hreps[i]));
    }
    G = std::move(H2);
    reps = std::move(r2);
}

} // namespace detail

/// Buchberger's algorithm with an exact transform over the input. The
/// product and chain criteria are off by default: in oracle mode the
/// smallest possible code path wins over speed.
inline GBResult buchberger(const std::vector<Polynomial>& F, const OrderSpec& ord,
                           const GBOptions& opts = {}) {
    if (F.empty()) throw invalid_input_error("buchberger: empty input");
    for (const auto& f : F)
        if (f.is_zero()) throw invalid_input_error("buchberger: zero polynomial");

    std::vector<Polynomial> G = F;
    std::vector<ModuleElement> reps;
    for (size_t i = 0; i < F.size(); ++i)
        reps.push_back(ModuleElement::unit(static_cast<int>(i), ord.nvars));

    auto pair_less = [&](const SPair& a, const SPair& b) {
        auto c = mono_cmp(a.lcm_mono, b.lcm_mono, ord);
        if (c != std::strong_ordering::equal)
            return c == std::strong_ordering::less;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    std::vector<SPair> pairs;
    auto push_pairs_for = [&](size_t j) {
        for (size_t i = 0; i < j; ++i)
            pairs.push_back({i, j, lcm(G[i].lm(), G[j].lm())});
    };
    for (size_t j = 1; j < G.size(); ++j) push_pairs_for(j);

    auto pending = [&](size_t a, size_t b) {
        for (const auto& p : pairs)
            if ((p.i == a && p.j == b) || (p.i == b && p.j == a)) return true;
        return false;
    };

    while (!pairs.empty()) {
        detail::poll(opts);
        auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
        SPair sp = *it;
        pairs.erase(it);

        if (opts.use_criteria) {
            if (coprime(G[sp.i].lm(), G[sp.j].lm())) continue;
            bool chained = false;
            for (size_t k = 0; k < G.size() && !chained; ++k) {
                if (k == sp.i || k == sp.j) continue;
                if (G[k].lm().divides(sp.lcm_mono) && !pending(sp.i, k) &&
                    !pending(k, sp.j))
                    chained = true;
            }
            if (chained) continue;
        }

        Monomial mi = sp.lcm_mono / G[sp.i].lm();
        Monomial mj = sp.lcm_mono / G[sp.j].lm();
        Polynomial s = poly_sub(poly_mul_term(G[sp.i], mi, 1 / G[sp.i].lc()),
                                poly_mul_term(G[sp.j], mj, 1 / G[sp.j].lc()), ord);
        ModuleElement srep =
            msub(mscale_term(reps[sp.i], mi, 1 / G[sp.i].lc()),
                 mscale_term(reps[sp.j], mj, 1 / G[sp.j].lc()), ord);
        NormalFormResult nf = normal_form(s, G, ord);
        if (nf.remainder.is_zero()) continue;
        for (const auto& [slot, q] : nf.quotient.coords())
            srep = msub(srep, mscale_poly(reps[slot], q, ord), ord);
        Rational lc = nf.remainder.lc();
        G.push_back(poly_scale(nf.remainder, 1 / lc));
        reps.push_back(mscale_term(srep, unit_monomial(ord.nvars), 1 / lc));
        push_pairs_for(G.size() - 1);
    }

    if (opts.reduced) detail::reduce_basis(G, reps, ord);
    return {std::move(G), std::move(reps)};
}

inline GBResult reduced_groebner(const std::vector<Polynomial>& F,
                                 const OrderSpec& ord, bool use_criteria = true) {
    GBOptions opts;
    opts.reduced = true;
    opts.use_criteria = use_criteria;
    return buchberger(F, ord, opts);
}

inline bool is_groebner_basis(const std::vector<Polynomial>& G,
                              const OrderSpec& ord) {
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = i + 1; j < G.size(); ++j) {
            Monomial L = lcm(G[i].lm(), G[j].lm());
            Polynomial s =
                poly_sub(poly_mul_term(G[i], L / G[i].lm(), 1 / G[i].lc()),
                         poly_mul_term(G[j], L / G[j].lm(), 1 / G[j].lc()), ord);
            if (!normal_form(s, G, ord).remainder.is_zero()) return false;
        }
    return true;
}

/// Schreyer syzygies of a Groebner basis: one generator per S-pair,
/// S_ij = (1/lc_i) m_ji e_i - (1/lc_j) m_ij e_j - q with q the division
/// quotient of the S-polynomial. Under the Schreyer ordering over G the
/// lead of S_ij is m_ji e_i (i < j).
inline std::vector<ModuleElement> schreyer_syzygies(const std::vector<Polynomial>& G,
                                                    const OrderSpec& ord) {
    std::vector<ModuleElement> out;
    for (size_t i = 0; i < G.size(); ++i) {
        for (size_t j = i + 1; j < G.size(); ++j) {
            Monomial L = lcm(G[i].lm(), G[j].lm());
            Monomial mi = L / G[i].lm();
            Monomial mj = L / G[j].lm();
            Polynomial s = poly_sub(poly_mul_term(G[i], mi, 1 / G[i].lc()),
                                    poly_mul_term(G[j], mj, 1 / G[j].lc()), ord);
            NormalFormResult nf = normal_form(s, G, ord);
            if (!nf.remainder.is_zero())
                throw invalid_input_error(
                    "schreyer_syzygies: input fails the Buchberger criterion");
            ModuleElement syz;
            syz.set_coord(static_cast<int>(i), poly_term(mi, 1 / G[i].lc()));
            syz = msub(syz, mscale_term(ModuleElement::unit(static_cast<int>(j),
                                                            ord.nvars),
                                        mj, 1 / G[j].lc()), ord);
            syz = msub(syz, nf.quotient, ord);
            out.push_back(std::move(syz));
        }
    }
    return out;
}

/// Wall's method: complete F to a Groebner basis G = F*A keeping an
/// identity block over F, then map the Schreyer syzygies of G back through
/// A. The images generate syz(F); zero images are dropped.
inline std::vector<ModuleElement> wall_syzygies(const std::vector<Polynomial>& F,
                                                const OrderSpec& ord,
                                                const GBOptions& opts = {}) {
    GBOptions run = opts;
    run.reduced = false; // the identity block must survive
    GBResult gb = buchberger(F, ord, run);
    std::vector<ModuleElement> syzG = schreyer_syzygies(gb.basis, ord);
    std::vector<ModuleElement> out;
    for (const auto& s : syzG) {
        ModuleElement img;
        for (const auto& [slot, p] : s.coords())
            img = madd(img, mscale_poly(gb.transform[slot], p, ord), ord);
        if (!img.is_zero()) out.push_back(std::move(img));
    }
    return out;
}

/// Equality of ideals through their reduced Groebner bases.
inline bool ideal_equal(const std::vector<Polynomial>& F1,
                        const std::vector<Polynomial>& F2, const OrderSpec& ord,
                        bool use_criteria = true) {
    GBResult a = reduced_groebner(F1, ord, use_criteria);
    GBResult b = reduced_groebner(F2, ord, use_criteria);
    if (a.basis.size() != b.basis.size()) return false;
    for (size_t i = 0; i < a.basis.size(); ++i)
        if (a.basis[i] != b.basis[i]) return false;
    return true;
}

/// Krull dimension of P/<U> for a monomial ideal: the largest size of a
/// variable subset S such that no generator has its support inside S.
/// Returns n for U empty and -1 when 1 lies in U (zero ring).
inline int monomial_ideal_dimension(const std::vector<Monomial>& U, int n) {
    if (n > 26) throw std::invalid_argument("monomial_ideal_dimension: n too large");
    std::vector<VarMask> supports;
    supports.reserve(U.size());
    for (const auto& u : U) supports.push_back(u.support());
    int best = -1;
    for (VarMask S = 0; S < (VarMask{1} << n); ++S) {
        bool ok = true;
        for (VarMask sup : supports)
            if ((sup & ~S) == 0) {
                ok = false;
                break;
            }
        if (ok) best = std::max(best, mask_count(S));
    }
    return best;
}

/// Dimension of <F> computed on the leading ideal of a Groebner basis.
inline int ideal_dimension(const std::vector<Polynomial>& F, const OrderSpec& ord) {
    GBResult gb = reduced_groebner(F, ord);
    std::vector<Monomial> lms;
    for (const auto& g : gb.basis) lms.push_back(g.lm());
    return monomial_ideal_dimension(lms, ord.nvars);
}

// ---------------------------------------------------------------------
// Submodules of P^t

struct ModuleNormalFormResult {
    ModuleElement remainder;
};

namespace detail {

/// All module terms of a, sorted decreasing under the module ordering.
inline std::vector<std::pair<ModuleMonomial, Rational>> module_terms_sorted(
    const ModuleElement& a, const ModuleOrderSpec& mo) {
    std::vector<std::pair<ModuleMonomial, Rational>> ts;
    for (const auto& [slot, p] : a.coords())
        for (const auto& t : p.terms()) ts.push_back({{t.mono, slot}, t.coeff});
    std::sort(ts.begin(), ts.end(), [&](const auto& x, const auto& y) {
        return module_mono_less(y.first, x.first, mo);
    });
    return ts;
}

} // namespace detail

/// Full normal form in P^t: every term with a lead divisible by some
/// lm(S[i]) is eliminated.
inline ModuleNormalFormResult module_normal_form(const ModuleElement& f,
                                                 const std::vector<ModuleElement>& S,
                                                 const ModuleOrderSpec& mo) {
    std::vector<ModuleMonomial> leads;
    std::vector<Rational> lcs;
    for (const auto& s : S) {
        ModuleMonomial l = lm_module(s, mo);
        leads.push_back(l);
        lcs.push_back(module_lead_coeff(s, l));
    }
    ModuleElement h = f;
    ModuleElement r;
    while (!h.is_zero()) {
        auto ts = detail::module_terms_sorted(h, mo);
        bool reduced = false;
        for (const auto& [mm, c] : ts) {
            std::optional<size_t> div;
            for (size_t i = 0; i < S.size(); ++i)
                if (module_mono_divides(leads[i], mm)) {
                    div = i;
                    break;
                }
            if (!div) continue;
            Monomial t = mm.mono / leads[*div].mono;
            h = msub(h, mscale_term(S[*div], t, c / lcs[*div]), mo.base);
            reduced = true;
            break;
        }
        if (!reduced) {
            // everything left is irreducible
            r = madd(r, h, mo.base);
            break;
        }
    }
    return {std::move(r)};
}

/// Buchberger for submodules of P^t; pairs only form within a common
/// leading slot.
inline std::vector<ModuleElement> module_buchberger(
    const std::vector<ModuleElement>& Sin, const ModuleOrderSpec& mo,
    const GBOptions& opts = {}) {
    std::vector<ModuleElement> G;
    for (const auto& s : Sin)
        if (!s.is_zero()) G.push_back(s);
    if (G.empty()) return G;

    struct MPair {
        size_t i, j;
        ModuleMonomial lcm_mm;
    };
    auto lead = [&](size_t i) { return lm_module(G[i], mo); };
    std::vector<MPair> pairs;
    auto push_for = [&](size_t j) {
        ModuleMonomial lj = lead(j);
        for (size_t i = 0; i < j; ++i) {
            ModuleMonomial li = lead(i);
            if (li.slot != lj.slot) continue;
            pairs.push_back({i, j, {lcm(li.mono, lj.mono), li.slot}});
        }
    };
    for (size_t j = 0; j < G.size(); ++j) push_for(j);

    while (!pairs.empty()) {
        detail::poll(opts);
        auto it = std::min_element(pairs.begin(), pairs.end(),
                                   [&](const MPair& a, const MPair& b) {
                                       return module_mono_less(a.lcm_mm, b.lcm_mm, mo);
                                   });
        MPair mp = *it;
        pairs.erase(it);
        ModuleMonomial li = lead(mp.i), lj = lead(mp.j);
        Rational ci = module_lead_coeff(G[mp.i], li);
        Rational cj = module_lead_coeff(G[mp.j], lj);
        ModuleElement s =
            msub(mscale_term(G[mp.i], mp.lcm_mm.mono / li.mono, 1 / ci),
                 mscale_term(G[mp.j], mp.lcm_mm.mono / lj.mono, 1 / cj), mo.base);
        if (s.is_zero()) continue;
        ModuleElement r = module_normal_form(s, G, mo).remainder;
        if (r.is_zero()) continue;
        ModuleMonomial lr = lm_module(r, mo);
        G.push_back(mscale_term(r, unit_monomial(mo.base.nvars),
                                1 / module_lead_coeff(r, lr)));
        push_for(G.size() - 1);
    }
    return G;
}

/// Do two generating sets span the same submodule? Decided by mutual
/// normal-form reduction against each other's Groebner basis.
inline bool modules_equal(const std::vector<ModuleElement>& A,
                          const std::vector<ModuleElement>& B,
                          const ModuleOrderSpec& mo) {
    std::vector<ModuleElement> GA = module_buchberger(A, mo);
    std::vector<ModuleElement> GB = module_buchberger(B, mo);
    for (const auto& b : B) {
        if (b.is_zero()) continue;
        if (GA.empty() || !module_normal_form(b, GA, mo).remainder.is_zero())
            return false;
    }
    for (const auto& a : A) {
        if (a.is_zero()) continue;
        if (GB.empty() || !module_normal_form(a, GB, mo).remainder.is_zero())
            return false;
    }
    return true;
}

/// Equality of the monomial submodules generated by two sets of module
/// monomials (mutual divisibility).
inline bool monomial_submodules_equal(const std::vector<ModuleMonomial>& A,
                                      const std::vector<ModuleMonomial>& B) {
    auto covered_by = [](const ModuleMonomial& m,
                         const std::vector<ModuleMonomial>& S) {
        for (const auto& s : S)
            if (module_mono_divides(s, m)) return true;
        return false;
    };
    for (const auto& a : A)
        if (!covered_by(a, B)) return false;
    for (const auto& b : B)
        if (!covered_by(b, A)) return false;
    return true;
}

} // namespace involib

#endif
