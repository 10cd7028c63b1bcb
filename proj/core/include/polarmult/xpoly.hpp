#pragma once

#include <vector>

#include "polarmult/basepoly.hpp"
#include "polarmult/errors.hpp"

namespace polarmult {

// Element of kappa[u][x]: sparse in the graded variables x, with kappa[u]
// coefficients. Terms sorted degrevlex-descending in the x-monomial.
template <class F>
struct XTerm {
    Mono xmono;
    BasePoly<F> coeff;
};

template <class F>
struct GradedPoly {
    std::vector<XTerm<F>> terms;

    bool is_zero() const { return terms.empty(); }

    // total x-degree when x-homogeneous, -1 when zero
    int xdeg_homogeneous() const {
        if (terms.empty())
            return -1;
        int d = terms.front().xmono.deg();
        for (const auto& t : terms)
            if (t.xmono.deg() != d)
                throw InputError("element is not homogeneous in the graded variables");
        return d;
    }
    bool is_x_homogeneous() const {
        if (terms.empty())
            return true;
        int d = terms.front().xmono.deg();
        for (const auto& t : terms)
            if (t.xmono.deg() != d)
                return false;
        return true;
    }
};

template <class F>
GradedPoly<F> xpoly_add(const F& f, const GradedPoly<F>& a, const GradedPoly<F>& b) {
    GradedPoly<F> r;
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        int c = cmp_degrevlex(a.terms[i].xmono, b.terms[j].xmono);
        if (c > 0) {
            r.terms.push_back(a.terms[i++]);
        } else if (c < 0) {
            r.terms.push_back(b.terms[j++]);
        } else {
            auto s = poly_add(f, a.terms[i].coeff, b.terms[j].coeff);
            if (!s.is_zero())
                r.terms.push_back(XTerm<F>{a.terms[i].xmono, std::move(s)});
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

template <class F>
GradedPoly<F> xpoly_neg(const F& f, const GradedPoly<F>& a) {
    GradedPoly<F> r;
    r.terms.reserve(a.terms.size());
    for (const auto& t : a.terms)
        r.terms.push_back(XTerm<F>{t.xmono, poly_neg(f, t.coeff)});
    return r;
}

template <class F>
GradedPoly<F> xpoly_mul(const F& f, const GradedPoly<F>& a, const GradedPoly<F>& b) {
    GradedPoly<F> r;
    for (const auto& tb : b.terms) {
        GradedPoly<F> part;
        part.terms.reserve(a.terms.size());
        for (const auto& ta : a.terms)
            part.terms.push_back(XTerm<F>{ta.xmono * tb.xmono, poly_mul(f, ta.coeff, tb.coeff)});
        r = xpoly_add(f, r, part);
    }
    return r;
}

template <class F>
bool xpoly_eq(const F& f, const GradedPoly<F>& a, const GradedPoly<F>& b) {
    if (a.terms.size() != b.terms.size())
        return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i)
        if (a.terms[i].xmono != b.terms[i].xmono || !poly_eq(f, a.terms[i].coeff, b.terms[i].coeff))
            return false;
    return true;
}

} // namespace polarmult
