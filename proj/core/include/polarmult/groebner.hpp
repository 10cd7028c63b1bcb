#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "polarmult/errors.hpp"
#include "polarmult/piece.hpp"
#include "polarmult/vecpoly.hpp"

namespace polarmult {

// Submodule of a free module kappa[u]^rank, optionally carrying a cached
// reduced Groebner basis (term-over-position degrevlex).
template <class F>
struct BaseSubmodule {
    int rank = 0;
    std::vector<VecPoly<F>> gens;
    std::optional<std::vector<VecPoly<F>>> basis;
};

namespace gb {

constexpr std::size_t kMaxBaseVars = 8;

// Full division: returns the remainder of v modulo `basis`; every term of the
// remainder is divisible by no leading term of the basis.
template <class F>
VecPoly<F> reduce_full(const F& f, VecPoly<F> v, const std::vector<VecPoly<F>>& basis, const ModOrder& ord,
                       Budget* budget = nullptr) {
    VecPoly<F> rem;
    while (!v.is_zero()) {
        if (budget)
            budget->charge();
        const ModTerm<F>& lt = v.lead();
        bool hit = false;
        for (const auto& g : basis) {
            if (g.is_zero())
                continue;
            const ModTerm<F>& gl = g.lead();
            if (gl.pos == lt.pos && gl.mono.divides(lt.mono)) {
                auto q = gl.mono.quotient_into(lt.mono);
                auto c = f.neg(f.div(lt.coeff, gl.coeff));
                v = vec_axpy(f, v, q, c, g, ord);
                hit = true;
                break;
            }
        }
        if (!hit) {
            rem.terms.push_back(lt);
            v.terms.erase(v.terms.begin());
        }
    }
    return rem;
}

// Buchberger completion returning the unique reduced basis for `ord`.
template <class F>
std::vector<VecPoly<F>> buchberger(const F& f, std::vector<VecPoly<F>> gens, const ModOrder& ord,
                                   Budget* budget = nullptr) {
    std::vector<VecPoly<F>> basis;
    for (auto& g : gens) {
        if (g.is_zero())
            continue;
        basis.push_back(vec_monic(f, g));
    }
    std::sort(basis.begin(), basis.end(),
              [&](const VecPoly<F>& a, const VecPoly<F>& b) { return vec_cmp(f, a, b, ord) < 0; });
    basis.erase(std::unique(basis.begin(), basis.end(),
                            [&](const VecPoly<F>& a, const VecPoly<F>& b) { return vec_eq(f, a, b); }),
                basis.end());

    struct Pair {
        int deg;
        int i, j;
        bool operator<(const Pair& o) const {
            if (deg != o.deg)
                return deg < o.deg;
            if (j != o.j)
                return j < o.j;
            return i < o.i;
        }
    };
    auto heap_cmp = [](const Pair& x, const Pair& y) { return y < x; }; // min-heap
    std::vector<Pair> queue;
    auto push_pairs = [&](int j) {
        for (int i = 0; i < j; ++i) {
            const auto& a = basis[static_cast<std::size_t>(i)].lead();
            const auto& b = basis[static_cast<std::size_t>(j)].lead();
            if (a.pos != b.pos)
                continue;
            queue.push_back(Pair{Mono::lcm(a.mono, b.mono).deg(), i, j});
            std::push_heap(queue.begin(), queue.end(), heap_cmp);
        }
    };
    for (int j = 0; j < static_cast<int>(basis.size()); ++j)
        push_pairs(j);

    while (!queue.empty()) {
        if (budget)
            budget->charge();
        std::pop_heap(queue.begin(), queue.end(), heap_cmp);
        Pair pr = queue.back();
        queue.pop_back();
        const auto& gi = basis[static_cast<std::size_t>(pr.i)];
        const auto& gj = basis[static_cast<std::size_t>(pr.j)];
        const auto& li = gi.lead();
        const auto& lj = gj.lead();
        Mono l = Mono::lcm(li.mono, lj.mono);
        VecPoly<F> s;
        s = vec_axpy(f, s, li.mono.quotient_into(l), f.one(), gi, ord);
        s = vec_axpy(f, s, lj.mono.quotient_into(l), f.neg(f.one()), gj, ord);
        s = reduce_full(f, std::move(s), basis, ord, budget);
        if (!s.is_zero()) {
            basis.push_back(vec_monic(f, s));
            push_pairs(static_cast<int>(basis.size()) - 1);
        }
    }

    // minimalize: keep, in ascending lead order, only elements whose lead is
    // not divisible by an already-kept lead (the order is degree compatible,
    // so divisibility implies order <=)
    std::sort(basis.begin(), basis.end(),
              [&](const VecPoly<F>& a, const VecPoly<F>& b) { return vec_cmp(f, a, b, ord) < 0; });
    std::vector<VecPoly<F>> minimal;
    for (const auto& g : basis) {
        bool redundant = false;
        for (const auto& kept : minimal) {
            const auto& a = kept.lead();
            const auto& b = g.lead();
            if (a.pos == b.pos && a.mono.divides(b.mono)) {
                redundant = true;
                break;
            }
        }
        if (!redundant)
            minimal.push_back(g);
    }
    // tail-reduce each element against the others
    std::vector<VecPoly<F>> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<VecPoly<F>> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i)
                others.push_back(minimal[j]);
        auto nf = reduce_full(f, minimal[i], others, ord, budget);
        if (!nf.is_zero())
            reduced.push_back(vec_monic(f, nf));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const VecPoly<F>& a, const VecPoly<F>& b) { return vec_cmp(f, a, b, ord) > 0; });
    return reduced;
}

} // namespace gb

// ---- exactlin public surface -------------------------------------------------

template <class F>
BaseSubmodule<F> groebner_basis(const F& f, BaseSubmodule<F> sub, std::size_t nbase_vars, Budget* budget = nullptr) {
    if (nbase_vars > gb::kMaxBaseVars)
        throw InputError("at most 8 base variables are supported");
    ModOrder ord;
    sub.basis = gb::buchberger(f, sub.gens, ord, budget);
    return sub;
}

template <class F>
const std::vector<VecPoly<F>>& ensure_basis(const F& f, BaseSubmodule<F>& sub, Budget* budget = nullptr) {
    if (!sub.basis)
        sub.basis = gb::buchberger(f, sub.gens, ModOrder{}, budget);
    return *sub.basis;
}

template <class F>
VecPoly<F> normal_form(const F& f, const VecPoly<F>& v, BaseSubmodule<F>& sub, Budget* budget = nullptr) {
    for (const auto& t : v.terms)
        if (t.pos >= sub.rank)
            throw RankMismatch("vector rank exceeds submodule ambient rank");
    ensure_basis(f, sub, budget);
    return gb::reduce_full(f, v, *sub.basis, ModOrder{}, budget);
}

// Generators of { w in kappa[u]^q : A w lies in the relation span of `target` }
// where A is given by `columns` (q columns inside kappa[u]^p, p = target.rank).
template <class F>
std::vector<VecPoly<F>> kernel_of_map(const F& f, const std::vector<std::vector<BasePoly<F>>>& columns,
                                      const PieceModule<F>& target, Budget* budget = nullptr) {
    const int p = target.rank;
    const int q = static_cast<int>(columns.size());
    const int t = static_cast<int>(target.relations.size());
    ModOrder elim{p};
    std::vector<VecPoly<F>> work;
    work.reserve(static_cast<std::size_t>(q + t));
    for (int j = 0; j < q; ++j) {
        if (static_cast<int>(columns[static_cast<std::size_t>(j)].size()) != p)
            throw RankMismatch("matrix column length does not match target rank");
        std::vector<BasePoly<F>> cols(static_cast<std::size_t>(p + q + t));
        for (int i = 0; i < p; ++i)
            cols[static_cast<std::size_t>(i)] = columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        cols[static_cast<std::size_t>(p + j)] = BasePoly<F>::constant(f, f.one(), target.nbase);
        work.push_back(vec_from_columns(f, cols, elim));
    }
    for (int l = 0; l < t; ++l) {
        std::vector<BasePoly<F>> cols(static_cast<std::size_t>(p + q + t));
        for (int i = 0; i < p; ++i)
            cols[static_cast<std::size_t>(i)] = target.relations[static_cast<std::size_t>(l)][static_cast<std::size_t>(i)];
        cols[static_cast<std::size_t>(p + q + l)] = BasePoly<F>::constant(f, f.one(), target.nbase);
        work.push_back(vec_from_columns(f, cols, elim));
    }
    auto basis = gb::buchberger(f, std::move(work), elim, budget);

    std::vector<VecPoly<F>> kernel;
    ModOrder top;
    for (const auto& g : basis) {
        bool pure = true;
        for (const auto& term : g.terms)
            if (term.pos < p) {
                pure = false;
                break;
            }
        if (!pure)
            continue;
        VecPoly<F> w;
        for (const auto& term : g.terms)
            if (term.pos >= p && term.pos < p + q)
                w.terms.push_back(ModTerm<F>{term.mono, term.pos - p, term.coeff});
        std::sort(w.terms.begin(), w.terms.end(),
                  [&](const ModTerm<F>& a, const ModTerm<F>& b) { return top.template cmp<F>(a, b) > 0; });
        if (!w.is_zero())
            kernel.push_back(std::move(w));
    }
    return gb::buchberger(f, std::move(kernel), top, budget);
}

// Saturation (sub :_ambient (u)^infinity): all ambient elements carried into
// `sub` by some power of the irrelevant ideal. Realized by iterating the colon
// by (u_1..u_s) until the ascending chain stabilizes.
template <class F>
std::vector<VecPoly<F>> saturate_irrelevant(const F& f, const std::vector<VecPoly<F>>& sub,
                                            const PieceModule<F>& ambient, Budget* budget = nullptr) {
    const int p = ambient.rank;
    const std::size_t s = ambient.nbase;
    ModOrder top;

    if (s == 0) {
        // m = (0): every element is annihilated into sub by m^1
        std::vector<VecPoly<F>> all;
        for (int i = 0; i < p; ++i) {
            VecPoly<F> e;
            e.terms.push_back(ModTerm<F>{Mono(s), i, f.one()});
            all.push_back(std::move(e));
        }
        return all;
    }

    auto combined_basis = [&](const std::vector<VecPoly<F>>& gens) {
        std::vector<VecPoly<F>> g = gens;
        for (const auto& rel : ambient.relations)
            g.push_back(vec_from_columns(f, rel, top));
        return gb::buchberger(f, std::move(g), top, budget);
    };

    std::vector<VecPoly<F>> cur = sub;
    auto cur_gb = combined_basis(cur);
    for (int round = 0;; ++round) {
        if (round > 512)
            throw BudgetExceeded("saturation chain failed to stabilize");
        // colon by (u): kernel of w -> (u_1 w, ..., u_s w) into (ambient/cur)^s
        PieceModule<F> target;
        target.nbase = s;
        target.rank = static_cast<int>(s) * p;
        auto emplace_block = [&](const std::vector<BasePoly<F>>& col, std::size_t block) {
            std::vector<BasePoly<F>> wide(static_cast<std::size_t>(target.rank));
            for (int i = 0; i < p; ++i)
                wide[block * p + static_cast<std::size_t>(i)] = col[static_cast<std::size_t>(i)];
            target.relations.push_back(std::move(wide));
        };
        for (std::size_t b = 0; b < s; ++b) {
            for (const auto& rel : ambient.relations)
                emplace_block(rel, b);
            for (const auto& g : cur)
                emplace_block(vec_to_columns(g, p), b);
        }
        std::vector<std::vector<BasePoly<F>>> columns(static_cast<std::size_t>(p));
        for (int j = 0; j < p; ++j) {
            std::vector<BasePoly<F>> col(static_cast<std::size_t>(target.rank));
            for (std::size_t i = 0; i < s; ++i) {
                Mono ui(s);
                ui.e[i] = 1;
                col[i * p + static_cast<std::size_t>(j)] = BasePoly<F>::term(f, ui, f.one());
            }
            columns[static_cast<std::size_t>(j)] = std::move(col);
        }
        auto next = kernel_of_map(f, columns, target, budget);

        bool grew = false;
        for (const auto& g : next)
            if (!gb::reduce_full(f, g, cur_gb, top, budget).is_zero()) {
                grew = true;
                break;
            }
        if (!grew)
            break;
        cur = next;
        cur_gb = combined_basis(cur);
    }

    // canonical generators, pruned of elements already zero in the ambient
    std::vector<VecPoly<F>> pruned;
    if (!ambient.relations.empty()) {
        std::vector<VecPoly<F>> relgens;
        for (const auto& rel : ambient.relations)
            relgens.push_back(vec_from_columns(f, rel, top));
        auto rel_gb = gb::buchberger(f, std::move(relgens), top, budget);
        for (const auto& g : cur_gb)
            if (!gb::reduce_full(f, g, rel_gb, top, budget).is_zero())
                pruned.push_back(g);
    } else {
        pruned = cur_gb;
    }
    return pruned;
}

template <class F>
bool submodules_equal(const F& f, const std::vector<VecPoly<F>>& a, const std::vector<VecPoly<F>>& b,
                      Budget* budget = nullptr) {
    ModOrder top;
    auto ga = gb::buchberger(f, a, top, budget);
    auto gc = gb::buchberger(f, b, top, budget);
    if (ga.size() != gc.size())
        return false;
    for (std::size_t i = 0; i < ga.size(); ++i)
        if (!vec_eq(f, ga[i], gc[i]))
            return false;
    return true;
}

} // namespace polarmult
