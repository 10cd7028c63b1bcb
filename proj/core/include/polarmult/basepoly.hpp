#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polarmult/monomial.hpp"

namespace polarmult {

// Sparse polynomial in the base variables u_1..u_s with exact coefficients.
// Terms are kept sorted degrevlex-descending with no zero coefficients.
template <class F>
struct BasePoly {
    using Elem = typename F::Elem;
    std::vector<std::pair<Mono, Elem>> terms;

    bool is_zero() const { return terms.empty(); }
    int min_deg() const { return terms.empty() ? -1 : terms.back().first.deg(); }
    int max_deg() const { return terms.empty() ? -1 : terms.front().first.deg(); }

    static BasePoly zero() { return {}; }
    static BasePoly constant(const F& f, const Elem& c, std::size_t nvars) {
        BasePoly p;
        if (!f.is_zero(c))
            p.terms.emplace_back(Mono(nvars), c);
        return p;
    }
    static BasePoly term(const F& f, Mono m, const Elem& c) {
        BasePoly p;
        if (!f.is_zero(c))
            p.terms.emplace_back(std::move(m), c);
        return p;
    }
};

template <class F>
BasePoly<F> poly_add(const F& f, const BasePoly<F>& a, const BasePoly<F>& b) {
    BasePoly<F> r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        int c = cmp_degrevlex(a.terms[i].first, b.terms[j].first);
        if (c > 0) {
            r.terms.push_back(a.terms[i++]);
        } else if (c < 0) {
            r.terms.push_back(b.terms[j++]);
        } else {
            auto s = f.add(a.terms[i].second, b.terms[j].second);
            if (!f.is_zero(s))
                r.terms.emplace_back(a.terms[i].first, s);
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
BasePoly<F> poly_scale(const F& f, const BasePoly<F>& a, const typename F::Elem& c) {
    BasePoly<F> r;
    if (f.is_zero(c))
        return r;
    r.terms.reserve(a.terms.size());
    for (const auto& [m, x] : a.terms)
        r.terms.emplace_back(m, f.mul(x, c));
    return r;
}

template <class F>
BasePoly<F> poly_neg(const F& f, const BasePoly<F>& a) {
    BasePoly<F> r;
    r.terms.reserve(a.terms.size());
    for (const auto& [m, x] : a.terms)
        r.terms.emplace_back(m, f.neg(x));
    return r;
}

template <class F>
BasePoly<F> poly_sub(const F& f, const BasePoly<F>& a, const BasePoly<F>& b) {
    return poly_add(f, a, poly_neg(f, b));
}

template <class F>
BasePoly<F> poly_mul_term(const F& f, const BasePoly<F>& a, const Mono& m, const typename F::Elem& c) {
    BasePoly<F> r;
    if (f.is_zero(c))
        return r;
    r.terms.reserve(a.terms.size());
    for (const auto& [am, ac] : a.terms)
        r.terms.emplace_back(am * m, f.mul(ac, c)); // order preserved: degrevlex is multiplicative
    return r;
}

template <class F>
BasePoly<F> poly_mul(const F& f, const BasePoly<F>& a, const BasePoly<F>& b) {
    BasePoly<F> r;
    for (const auto& [m, c] : b.terms)
        r = poly_add(f, r, poly_mul_term(f, a, m, c));
    return r;
}

template <class F>
bool poly_eq(const F& f, const BasePoly<F>& a, const BasePoly<F>& b) {
    if (a.terms.size() != b.terms.size())
        return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i)
        if (a.terms[i].first != b.terms[i].first || !f.eq(a.terms[i].second, b.terms[i].second))
            return false;
    return true;
}

template <class F>
std::string poly_str(const F& f, const BasePoly<F>& a, const std::vector<std::string>& names) {
    if (a.terms.empty())
        return "0";
    std::string s;
    for (const auto& [m, c] : a.terms) {
        if (!s.empty())
            s += " + ";
        s += f.str(c);
        if (!m.is_one())
            s += "*" + mono_str(m, names);
    }
    return s;
}

} // namespace polarmult
