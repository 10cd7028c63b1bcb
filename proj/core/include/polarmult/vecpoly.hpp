#pragma once

#include <vector>

#include "polarmult/basepoly.hpp"
#include "polarmult/errors.hpp"
#include "polarmult/monomial.hpp"

namespace polarmult {

// One term u^a * e_pos of a free-module element.
template <class F>
struct ModTerm {
    Mono mono;
    int pos = 0;
    typename F::Elem coeff;
};

// Module term order. TOP degrevlex (term over position) by default; setting
// `block_split` >= 0 turns it into the elimination order where every term in
// positions [0, block_split) dominates every term in higher positions.
struct ModOrder {
    int block_split = -1;

    template <class F>
    int cmp(const ModTerm<F>& a, const ModTerm<F>& b) const {
        if (block_split >= 0) {
            int ba = a.pos < block_split ? 0 : 1;
            int bb = b.pos < block_split ? 0 : 1;
            if (ba != bb)
                return ba < bb ? 1 : -1; // first block is greater
        }
        int c = cmp_degrevlex(a.mono, b.mono);
        if (c != 0)
            return c;
        if (a.pos != b.pos)
            return a.pos < b.pos ? 1 : -1; // lower position is greater
        return 0;
    }
    template <class F>
    bool less(const ModTerm<F>& a, const ModTerm<F>& b) const {
        return cmp<F>(a, b) < 0;
    }
};

// Element of a free module kappa[u]^p: terms sorted descending in the ambient
// order, no zero coefficients. The ambient rank is tracked by the caller.
template <class F>
struct VecPoly {
    std::vector<ModTerm<F>> terms;

    bool is_zero() const { return terms.empty(); }
    const ModTerm<F>& lead() const { return terms.front(); }
};

template <class F>
VecPoly<F> vec_from_columns(const F& f, const std::vector<BasePoly<F>>& cols, const ModOrder& ord) {
    VecPoly<F> v;
    for (int i = 0; i < static_cast<int>(cols.size()); ++i)
        for (const auto& [m, c] : cols[i].terms)
            v.terms.push_back(ModTerm<F>{m, i, c});
    std::sort(v.terms.begin(), v.terms.end(),
              [&](const ModTerm<F>& a, const ModTerm<F>& b) { return ord.template cmp<F>(a, b) > 0; });
    return v;
}

template <class F>
std::vector<BasePoly<F>> vec_to_columns(const VecPoly<F>& v, int rank) {
    std::vector<BasePoly<F>> cols(rank);
    for (const auto& t : v.terms)
        cols[t.pos].terms.emplace_back(t.mono, t.coeff);
    for (auto& c : cols)
        std::sort(c.terms.begin(), c.terms.end(),
                  [](const auto& a, const auto& b) { return cmp_degrevlex(a.first, b.first) > 0; });
    return cols;
}

template <class F>
VecPoly<F> vec_add(const F& f, const VecPoly<F>& a, const VecPoly<F>& b, const ModOrder& ord) {
    VecPoly<F> r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        int c = ord.template cmp<F>(a.terms[i], b.terms[j]);
        if (c > 0) {
            r.terms.push_back(a.terms[i++]);
        } else if (c < 0) {
            r.terms.push_back(b.terms[j++]);
        } else {
            auto s = f.add(a.terms[i].coeff, b.terms[j].coeff);
            if (!f.is_zero(s))
                r.terms.push_back(ModTerm<F>{a.terms[i].mono, a.terms[i].pos, s});
            ++i;
            ++j;
        }
    }
    for (; i < a.terms.size(); ++i)
        r.terms.push_back(a.terms[i]);
    for (; j < b.terms.size(); ++j)
        r.terms.push_back(b.terms[j]);
    return r;
}

// r := a + (m, c) * b
template <class F>
VecPoly<F> vec_axpy(const F& f, const VecPoly<F>& a, const Mono& m, const typename F::Elem& c,
                    const VecPoly<F>& b, const ModOrder& ord) {
    VecPoly<F> scaled;
    scaled.terms.reserve(b.terms.size());
    for (const auto& t : b.terms)
        scaled.terms.push_back(ModTerm<F>{t.mono * m, t.pos, f.mul(t.coeff, c)});
    // multiplying by a monomial preserves the order within each block
    return vec_add(f, a, scaled, ord);
}

template <class F>
VecPoly<F> vec_scale(const F& f, const VecPoly<F>& a, const typename F::Elem& c) {
    VecPoly<F> r;
    if (f.is_zero(c))
        return r;
    r.terms.reserve(a.terms.size());
    for (const auto& t : a.terms)
        r.terms.push_back(ModTerm<F>{t.mono, t.pos, f.mul(t.coeff, c)});
    return r;
}

template <class F>
VecPoly<F> vec_monic(const F& f, const VecPoly<F>& a) {
    if (a.is_zero())
        return a;
    return vec_scale(f, a, f.div(f.one(), a.lead().coeff));
}

template <class F>
bool vec_eq(const F& f, const VecPoly<F>& a, const VecPoly<F>& b) {
    if (a.terms.size() != b.terms.size())
        return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
        const auto& s = a.terms[i];
        const auto& t = b.terms[i];
        if (s.pos != t.pos || s.mono != t.mono || !f.eq(s.coeff, t.coeff))
            return false;
    }
    return true;
}

// total-order comparison of whole vectors, used to sort bases canonically
template <class F>
int vec_cmp(const F& f, const VecPoly<F>& a, const VecPoly<F>& b, const ModOrder& ord) {
    std::size_t n = std::min(a.terms.size(), b.terms.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = ord.template cmp<F>(a.terms[i], b.terms[i]);
        if (c != 0)
            return c;
    }
    if (a.terms.size() != b.terms.size())
        return a.terms.size() < b.terms.size() ? -1 : 1;
    return 0;
}

} // namespace polarmult
