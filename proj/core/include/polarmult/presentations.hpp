#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polarmult/errors.hpp"
#include "polarmult/groebner.hpp"
#include "polarmult/xpoly.hpp"

namespace polarmult {

// The local base ring R = kappa[u_1..u_s]_(u) together with the graded
// variable names of the ambient polynomial extension.
struct Ring {
    std::vector<std::string> base_vars; // u_1..u_s
    std::vector<std::string> poly_vars; // x_1..x_m, all of degree 1

    std::size_t s() const { return base_vars.size(); }
    std::size_t m() const { return poly_vars.size(); }

    void validate() const {
        std::vector<std::string> all = base_vars;
        all.insert(all.end(), poly_vars.begin(), poly_vars.end());
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) != all.end())
            throw InputError("variable names must be distinct");
    }
};

// B = R[x_1..x_m]/I with I generated by x-homogeneous elements. When
// `subalgebra_gens` is set, B is instead the R-subalgebra of the ambient
// (relations-free) polynomial ring generated by those degree-1 forms; this is
// how Rees algebras of embedded modules are realized.
template <class F>
struct TypedAlgebra {
    Ring ring;
    std::vector<GradedPoly<F>> relations;
    std::optional<std::vector<GradedPoly<F>>> subalgebra_gens;

    void validate() const {
        ring.validate();
        for (const auto& rel : relations)
            if (!rel.is_x_homogeneous())
                throw InputError("algebra relation is not homogeneous in the graded variables");
        if (subalgebra_gens) {
            if (!relations.empty())
                throw InputError("subalgebra presentations live inside a free ambient algebra");
            if (subalgebra_gens->empty())
                throw InputError("subalgebra generator list must be nonempty");
            for (const auto& g : *subalgebra_gens)
                if (g.xdeg_homogeneous() != 1)
                    throw InputError("subalgebra generators must have degree exactly 1");
        }
    }
};

// Finitely generated graded B-module as the cokernel of a graded matrix with
// degree shifts: generator i spans B(-shift_i); each relation column is
// x-homogeneous of a consistent total degree.
template <class F>
struct TypedModule {
    TypedAlgebra<F> algebra;
    std::vector<int> shifts;
    std::vector<std::vector<GradedPoly<F>>> columns; // each of length shifts.size()
    std::vector<int> column_degrees;                 // filled by validate()

    std::size_t ngens() const { return shifts.size(); }

    void validate() {
        algebra.validate();
        if (algebra.subalgebra_gens)
            throw InputError("modules are presented over quotient algebras, not subalgebra images");
        column_degrees.clear();
        for (std::size_t j = 0; j < columns.size(); ++j) {
            const auto& col = columns[j];
            if (col.size() != shifts.size())
                throw InputError("module relation column " + std::to_string(j) + " has wrong length");
            int coldeg = -1;
            for (std::size_t i = 0; i < col.size(); ++i) {
                if (col[i].is_zero())
                    continue;
                int d = col[i].xdeg_homogeneous() + shifts[i];
                if (coldeg == -1)
                    coldeg = d;
                else if (coldeg != d)
                    throw InputError("module relation column " + std::to_string(j) +
                                     " mixes degrees (entries must satisfy deg = coldeg - shift)");
            }
            if (coldeg == -1)
                throw InputError("module relation column " + std::to_string(j) + " is zero");
            column_degrees.push_back(coldeg);
        }
    }

    static TypedModule free_rank_one(TypedAlgebra<F> b) {
        TypedModule m;
        m.algebra = std::move(b);
        m.shifts = {0};
        m.validate();
        return m;
    }
};

// A ⊆ B generated over R by degree-1 elements of B.
template <class F>
struct TypedSubalgebra {
    std::vector<GradedPoly<F>> gens;

    void validate() const {
        if (gens.empty())
            throw InputError("subalgebra generator list must be nonempty");
        for (const auto& g : gens)
            if (g.xdeg_homogeneous() != 1)
                throw InputError("subalgebra generators must have degree exactly 1");
    }
};

// U ⊆ E ⊆ R^e given by columns over kappa[u]; both of full rank e.
template <class F>
struct TypedModulePair {
    int ambient_rank = 0;
    std::vector<std::vector<BasePoly<F>>> u_cols;
    std::vector<std::vector<BasePoly<F>>> e_cols;
};

// Renders an element of kappa[u][x] in the shared polynomial grammar. Only
// integer coefficients occur in serialized fixtures.
template <class F>
std::string xpoly_to_string(const F& f, const GradedPoly<F>& p, const Ring& ring) {
    if (p.is_zero())
        return "0";
    std::string out;
    for (const auto& t : p.terms) {
        for (const auto& [um, c] : t.coeff.terms) {
            std::string coeff = f.str(c);
            bool neg = !coeff.empty() && coeff[0] == '-';
            if (neg)
                coeff = coeff.substr(1);
            if (coeff.find('/') != std::string::npos)
                throw Error("cannot serialize a non-integer coefficient in the polynomial grammar");
            std::string mono;
            if (!um.is_one())
                mono += mono_str(um, ring.base_vars);
            if (!t.xmono.is_one()) {
                if (!mono.empty())
                    mono += "*";
                mono += mono_str(t.xmono, ring.poly_vars);
            }
            std::string term;
            if (mono.empty())
                term = coeff;
            else if (coeff == "1")
                term = mono;
            else
                term = coeff + "*" + mono;
            if (out.empty())
                out = (neg ? "-" : "") + term;
            else
                out += (neg ? " - " : " + ") + term;
        }
    }
    return out;
}

namespace pairdetail {

// determinant by cofactor expansion; matrices here are at most e x e with e small
template <class F>
BasePoly<F> det(const F& f, const std::vector<std::vector<BasePoly<F>>>& m) {
    std::size_t n = m.size();
    if (n == 0)
        return BasePoly<F>::constant(f, f.one(), 0);
    if (n == 1)
        return m[0][0];
    BasePoly<F> acc;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero())
            continue;
        std::vector<std::vector<BasePoly<F>>> sub(n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (c != j)
                    sub[r - 1].push_back(m[r][c]);
        auto part = poly_mul(f, m[0][j], det(f, sub));
        acc = (j % 2 == 0) ? poly_add(f, acc, part) : poly_sub(f, acc, part);
    }
    return acc;
}

template <class F>
bool has_rank(const F& f, const std::vector<std::vector<BasePoly<F>>>& cols, int e) {
    if (static_cast<int>(cols.size()) < e)
        return false;
    // some e x e minor is nonzero over Frac(kappa[u])
    std::vector<int> pick(static_cast<std::size_t>(e));
    auto rec = [&](auto&& self, int from, int k) -> bool {
        if (k == e) {
            std::vector<std::vector<BasePoly<F>>> minor(static_cast<std::size_t>(e));
            for (int r = 0; r < e; ++r)
                for (int c = 0; c < e; ++c)
                    minor[static_cast<std::size_t>(r)].push_back(
                        cols[static_cast<std::size_t>(pick[static_cast<std::size_t>(c)])][static_cast<std::size_t>(r)]);
            return !det(f, minor).is_zero();
        }
        for (int i = from; i < static_cast<int>(cols.size()); ++i) {
            pick[static_cast<std::size_t>(k)] = i;
            if (self(self, i + 1, k + 1))
                return true;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

} // namespace pairdetail

template <class F>
void validate_module_pair(const F& f, const TypedModulePair<F>& p, std::size_t nbase, Budget* budget = nullptr) {
    const int e = p.ambient_rank;
    if (e < 1)
        throw InputError("module pair ambient rank must be >= 1");
    for (const auto& cols : {p.u_cols, p.e_cols})
        for (const auto& c : cols)
            if (static_cast<int>(c.size()) != e)
                throw RankMismatch("module pair column has wrong length");
    if (!pairdetail::has_rank(f, p.e_cols, e))
        throw RankDeficient("E does not have full rank e");
    if (!pairdetail::has_rank(f, p.u_cols, e))
        throw RankDeficient("U does not have full rank e");
    // containment U ⊆ E by membership over kappa[u]
    ModOrder top;
    std::vector<VecPoly<F>> egens;
    for (const auto& c : p.e_cols)
        egens.push_back(vec_from_columns(f, c, top));
    auto egb = gb::buchberger(f, std::move(egens), top, budget);
    for (const auto& c : p.u_cols) {
        auto v = vec_from_columns(f, c, top);
        if (!gb::reduce_full(f, v, egb, top, budget).is_zero())
            throw NotContained("a U column does not lie in the kappa[u]-span of E");
    }
}

} // namespace polarmult
