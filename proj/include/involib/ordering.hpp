#ifndef INVOLIB_ORDERING_HPP
#define INVOLIB_ORDERING_HPP

#include <cassert>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "monomial.hpp"

namespace involib {

enum class OrderKind { Lex, DegLex, DegRevLex };

/// Ring context: number of variables, their print names (index 0 is the
/// greatest variable) and the monomial ordering in force. All polynomial
/// arithmetic is relative to one of these.
struct OrderSpec {
    OrderKind kind = OrderKind::DegRevLex;
    int nvars = 0;
    std::vector<std::string> var_names;

    static OrderSpec make(OrderKind kind, std::vector<std::string> names) {
        OrderSpec o;
        o.kind = kind;
        o.nvars = static_cast<int>(names.size());
        o.var_names = std::move(names);
        if (o.nvars > 64)
            throw std::invalid_argument("too many variables (limit 64)");
        return o;
    }
};

inline const char* order_kind_name(OrderKind k) {
    switch (k) {
        case OrderKind::Lex: return "lex";
        case OrderKind::DegLex: return "deglex";
        case OrderKind::DegRevLex: return "degrevlex";
    }
    return "?";
}

inline OrderKind order_kind_from_name(const std::string& s) {
    if (s == "lex") return OrderKind::Lex;
    if (s == "deglex") return OrderKind::DegLex;
    if (s == "degrevlex" || s == "grevlex") return OrderKind::DegRevLex;
    throw std::invalid_argument("unknown ordering: " + s);
}

namespace detail {

inline std::strong_ordering lex_cmp(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.nvars(); ++i) {
        if (a[i] != b[i])
            return a[i] < b[i] ? std::strong_ordering::less
                               : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

inline std::strong_ordering revlex_tiebreak(const Monomial& a, const Monomial& b) {
    // a > b iff the last nonzero entry of a-b is negative
    for (int i = a.nvars() - 1; i >= 0; --i) {
        if (a[i] != b[i])
            return a[i] > b[i] ? std::strong_ordering::less
                               : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

} // namespace detail

inline std::strong_ordering mono_cmp(const Monomial& a, const Monomial& b,
                                     const OrderSpec& ord) {
    if (a.nvars() != b.nvars() || a.nvars() != ord.nvars)
        throw std::invalid_argument("monomial dimension mismatch");
    switch (ord.kind) {
        case OrderKind::Lex:
            return detail::lex_cmp(a, b);
        case OrderKind::DegLex: {
            int da = a.total_degree(), db = b.total_degree();
            if (da != db)
                return da < db ? std::strong_ordering::less
                               : std::strong_ordering::greater;
            return detail::lex_cmp(a, b);
        }
        case OrderKind::DegRevLex: {
            int da = a.total_degree(), db = b.total_degree();
            if (da != db)
                return da < db ? std::strong_ordering::less
                               : std::strong_ordering::greater;
            return detail::revlex_tiebreak(a, b);
        }
    }
    return std::strong_ordering::equal;
}

inline bool mono_less(const Monomial& a, const Monomial& b, const OrderSpec& ord) {
    return mono_cmp(a, b, ord) == std::strong_ordering::less;
}
inline bool mono_greater(const Monomial& a, const Monomial& b, const OrderSpec& ord) {
    return mono_cmp(a, b, ord) == std::strong_ordering::greater;
}

/// Monomial of the free module P^t: a ring monomial sitting in one slot.
/// x^a e_i divides x^b e_j iff i = j and x^a | x^b.
struct ModuleMonomial {
    Monomial mono;
    int slot = 0;

    friend bool operator==(const ModuleMonomial& a, const ModuleMonomial& b) {
        return a.slot == b.slot && a.mono == b.mono;
    }
};

inline bool module_mono_divides(const ModuleMonomial& a, const ModuleMonomial& b) {
    return a.slot == b.slot && a.mono.divides(b.mono);
}

enum class ModuleOrderKind { TOP, POT, Schreyer };

/// Module ordering. The Schreyer kind compares x^a e_i against x^b e_j via
/// lm(x^a g_i) vs lm(x^b g_j), where the g_i are fixed by their leading
/// monomials in `schreyer_leads`; ties are broken in favour of the lower
/// slot (e_1 is the greatest).
struct ModuleOrderSpec {
    ModuleOrderKind kind = ModuleOrderKind::Schreyer;
    OrderSpec base;
    std::vector<Monomial> schreyer_leads;

    static ModuleOrderSpec top(OrderSpec base) {
        return {ModuleOrderKind::TOP, std::move(base), {}};
    }
    static ModuleOrderSpec pot(OrderSpec base) {
        return {ModuleOrderKind::POT, std::move(base), {}};
    }
    static ModuleOrderSpec schreyer(OrderSpec base, std::vector<Monomial> leads) {
        if (leads.empty())
            throw std::invalid_argument("Schreyer ordering needs leading monomials");
        return {ModuleOrderKind::Schreyer, std::move(base), std::move(leads)};
    }
};

inline std::strong_ordering module_mono_cmp(const ModuleMonomial& a,
                                            const ModuleMonomial& b,
                                            const ModuleOrderSpec& mo) {
    auto slot_tiebreak = [](int i, int j) {
        // lower slot is greater
        if (i == j) return std::strong_ordering::equal;
        return i < j ? std::strong_ordering::greater : std::strong_ordering::less;
    };
    switch (mo.kind) {
        case ModuleOrderKind::TOP: {
            auto c = mono_cmp(a.mono, b.mono, mo.base);
            if (c != std::strong_ordering::equal) return c;
            return slot_tiebreak(a.slot, b.slot);
        }
        case ModuleOrderKind::POT: {
            auto c = slot_tiebreak(a.slot, b.slot);
            if (c != std::strong_ordering::equal) return c;
            return mono_cmp(a.mono, b.mono, mo.base);
        }
        case ModuleOrderKind::Schreyer: {
            if (a.slot < 0 || a.slot >= static_cast<int>(mo.schreyer_leads.size()) ||
                b.slot < 0 || b.slot >= static_cast<int>(mo.schreyer_leads.size()))
                throw std::out_of_range("module monomial slot out of range");
            auto c = mono_cmp(a.mono * mo.schreyer_leads[a.slot],
                              b.mono * mo.schreyer_leads[b.slot], mo.base);
            if (c != std::strong_ordering::equal) return c;
            return slot_tiebreak(a.slot, b.slot);
        }
    }
    return std::strong_ordering::equal;
}

inline bool module_mono_less(const ModuleMonomial& a, const ModuleMonomial& b,
                             const ModuleOrderSpec& mo) {
    return module_mono_cmp(a, b, mo) == std::strong_ordering::less;
}

} // namespace involib

#endif
