#pragma once

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "polarmult/criteria.hpp"
#include "polarmult/polar.hpp"

namespace polarmult {
namespace oracle {

// Brute-force value of length(M_v / m^{n+1} M_v): enumerates the full
// monomial frame u^a * x^mu * e_i with |a| <= n directly from the
// presentation, assembles the relation matrix over kappa and returns the
// corank. No Groebner machinery and no caches shared with the main path.
template <class F>
long long brute_hilbert(const F& f, const TypedModule<F>& mod, int v, int n) {
    using Elem = typename F::Elem;
    const std::size_t s = mod.algebra.ring.s();
    const std::size_t m = mod.algebra.ring.m();

    using ColKey = std::tuple<std::vector<int>, int, std::vector<int>>; // (umono, gen, xmono)
    std::map<ColKey, int> col_index;
    {
        // plain lexicographic enumeration, independent of the main path's order
        auto umonos = monomials_up_to(s, n);
        for (int i = 0; i < static_cast<int>(mod.shifts.size()); ++i) {
            int d = v - mod.shifts[static_cast<std::size_t>(i)];
            if (d < 0)
                continue;
            for (const auto& xm : monomials_of_degree(m, d))
                for (const auto& um : umonos) {
                    int next = static_cast<int>(col_index.size());
                    col_index.emplace(ColKey{um.e, i, xm.e}, next);
                }
        }
    }
    if (col_index.empty())
        return 0;

    using Row = std::map<int, Elem>;
    std::vector<Row> rows;
    auto add_entry = [&](Row& row, const Mono& um, int gen, const Mono& xm, const Elem& c) {
        if (um.deg() > n)
            return; // truncated away by m^{n+1}
        auto it = col_index.find(ColKey{um.e, gen, xm.e});
        if (it == col_index.end())
            throw Error("internal: oracle frame miss");
        auto& slot = row[it->second];
        slot = f.add(slot, c);
        if (f.is_zero(slot))
            row.erase(it->second);
    };

    auto umonos_n = monomials_up_to(s, n);
    // algebra relations on each generator
    for (const auto& rel : mod.algebra.relations) {
        int delta = rel.is_zero() ? 0 : rel.xdeg_homogeneous();
        for (int i = 0; i < static_cast<int>(mod.shifts.size()); ++i) {
            int rest = v - mod.shifts[static_cast<std::size_t>(i)] - delta;
            if (rest < 0)
                continue;
            for (const auto& mu : monomials_of_degree(m, rest))
                for (const auto& b : umonos_n) {
                    Row row;
                    for (const auto& t : rel.terms)
                        for (const auto& [a, c] : t.coeff.terms)
                            add_entry(row, a * b, i, t.xmono * mu, c);
                    if (!row.empty())
                        rows.push_back(std::move(row));
                }
        }
    }
    // module relation columns
    for (std::size_t j = 0; j < mod.columns.size(); ++j) {
        int rest = v - mod.column_degrees[j];
        if (rest < 0)
            continue;
        for (const auto& mu : monomials_of_degree(m, rest))
            for (const auto& b : umonos_n) {
                Row row;
                for (int i = 0; i < static_cast<int>(mod.shifts.size()); ++i)
                    for (const auto& t : mod.columns[j][static_cast<std::size_t>(i)].terms)
                        for (const auto& [a, c] : t.coeff.terms)
                            add_entry(row, a * b, i, t.xmono * mu, c);
                if (!row.empty())
                    rows.push_back(std::move(row));
            }
    }

    // Gaussian elimination pivoting on the largest column index
    std::map<int, Row> pivots;
    long long rank = 0;
    for (auto& row : rows) {
        while (!row.empty()) {
            int lead = row.rbegin()->first;
            auto it = pivots.find(lead);
            if (it == pivots.end()) {
                Elem inv = f.div(f.one(), row.rbegin()->second);
                for (auto& [c, x] : row)
                    x = f.mul(x, inv);
                pivots.emplace(lead, std::move(row));
                ++rank;
                break;
            }
            Elem c = row.rbegin()->second;
            for (const auto& [col, x] : it->second) {
                auto& slot = row[col];
                slot = f.sub(slot, f.mul(c, x));
                if (f.is_zero(slot))
                    row.erase(col);
            }
        }
    }
    return static_cast<long long>(col_index.size()) - rank;
}

// Bounded-degree membership solver: decides whether `target` is a kappa[u]
// combination of `gens` with coefficient degrees <= maxdeg. One-sided: a
// negative answer only rules out combinations within the bound.
template <class F>
bool degreewise_member(const F& f, const std::vector<BasePoly<F>>& target,
                       const std::vector<std::vector<BasePoly<F>>>& gens, int maxdeg) {
    using Elem = typename F::Elem;
    const int rank = static_cast<int>(target.size());
    std::size_t s = 0;
    for (const auto& p : target)
        if (!p.terms.empty())
            s = p.terms.front().first.nvars();
    for (const auto& g : gens)
        for (const auto& p : g)
            if (!p.terms.empty())
                s = p.terms.front().first.nvars();

    int gdeg = 0;
    for (const auto& g : gens)
        for (const auto& p : g)
            if (!p.is_zero())
                gdeg = std::max(gdeg, p.max_deg());
    int tdeg = 0;
    for (const auto& p : target)
        if (!p.is_zero())
            tdeg = std::max(tdeg, p.max_deg());
    int dmax = std::max(gdeg + maxdeg, tdeg);

    auto monos = monomials_up_to(s, dmax);
    std::map<std::vector<int>, int> midx;
    for (int i = 0; i < static_cast<int>(monos.size()); ++i)
        midx.emplace(monos[static_cast<std::size_t>(i)].e, i);
    auto col_of = [&](const Mono& mo, int pos) { return midx.at(mo.e) * rank + pos; };

    using Row = std::map<int, Elem>;
    std::map<int, Row> pivots;
    auto insert_row = [&](Row row) {
        while (!row.empty()) {
            int lead = row.rbegin()->first;
            auto it = pivots.find(lead);
            if (it == pivots.end()) {
                Elem inv = f.div(f.one(), row.rbegin()->second);
                for (auto& [c, x] : row)
                    x = f.mul(x, inv);
                pivots.emplace(lead, std::move(row));
                return;
            }
            Elem c = row.rbegin()->second;
            for (const auto& [col, x] : it->second) {
                auto& slot = row[col];
                slot = f.sub(slot, f.mul(c, x));
                if (f.is_zero(slot))
                    row.erase(col);
            }
        }
    };

    for (const auto& g : gens)
        for (const auto& b : monomials_up_to(s, maxdeg)) {
            Row row;
            for (int pos = 0; pos < rank && pos < static_cast<int>(g.size()); ++pos)
                for (const auto& [a, c] : g[static_cast<std::size_t>(pos)].terms) {
                    auto& slot = row[col_of(a * b, pos)];
                    slot = f.add(slot, c);
                    if (f.is_zero(slot))
                        row.erase(col_of(a * b, pos));
                }
            if (!row.empty())
                insert_row(std::move(row));
        }

    Row t;
    for (int pos = 0; pos < rank; ++pos)
        for (const auto& [a, c] : target[static_cast<std::size_t>(pos)].terms)
            t[col_of(a, pos)] = c;
    // reduce target by the pivots; membership iff it vanishes
    while (!t.empty()) {
        int lead = t.rbegin()->first;
        auto it = pivots.find(lead);
        if (it == pivots.end())
            return false;
        Elem c = t.rbegin()->second;
        for (const auto& [col, x] : it->second) {
            auto& slot = t[col];
            slot = f.sub(slot, f.mul(c, x));
            if (f.is_zero(slot))
                t.erase(col);
        }
    }
    return true;
}

// ---- monomial combinatorics ----------------------------------------------

// Minimal primes of a monomial ideal are generated by variables: enumerate the
// inclusion-minimal hitting sets of the generator supports.
inline std::vector<std::set<int>> minimal_variable_covers(const std::vector<std::set<int>>& supports, int nvars) {
    std::vector<std::set<int>> covers;
    std::vector<int> pick;
    auto hits_all = [&](const std::set<int>& cand) {
        for (const auto& sup : supports) {
            bool hit = false;
            for (int v : sup)
                if (cand.count(v)) {
                    hit = true;
                    break;
                }
            if (!hit)
                return false;
        }
        return true;
    };
    for (std::uint32_t mask = 0; mask < (1u << nvars); ++mask) {
        std::set<int> cand;
        for (int i = 0; i < nvars; ++i)
            if (mask & (1u << i))
                cand.insert(i);
        if (!hits_all(cand))
            continue;
        bool minimal = true;
        for (int drop : cand) {
            std::set<int> smaller = cand;
            smaller.erase(drop);
            if (hits_all(smaller)) {
                minimal = false;
                break;
            }
        }
        if (minimal)
            covers.push_back(std::move(cand));
    }
    return covers;
}

// length of (kappa[vars in S]/J)_(S) where J is generated by the S-parts of the
// monomial gens; finite because S is a minimal cover.
inline long long local_monomial_length(const std::vector<Mono>& gens, const std::set<int>& svars) {
    auto spart = [&](const Mono& g) {
        Mono r(g.e.size());
        for (int v : svars)
            r.e[static_cast<std::size_t>(v)] = g.e[static_cast<std::size_t>(v)];
        return r;
    };
    std::vector<Mono> j;
    for (const auto& g : gens)
        j.push_back(spart(g));
    std::set<std::vector<int>> standard;
    std::vector<Mono> frontier{Mono(gens.empty() ? 0 : gens.front().e.size())};
    if (gens.empty())
        return 1;
    while (!frontier.empty()) {
        Mono cur = frontier.back();
        frontier.pop_back();
        bool in_ideal = false;
        for (const auto& g : j)
            if (g.divides(cur)) {
                in_ideal = true;
                break;
            }
        if (in_ideal || standard.count(cur.e))
            continue;
        standard.insert(cur.e);
        if (standard.size() > 100000)
            throw BudgetExceeded("monomial length enumeration exploded (prime not minimal?)");
        for (int v : svars) {
            Mono next = cur;
            next.e[static_cast<std::size_t>(v)] += 1;
            frontier.push_back(next);
        }
    }
    return static_cast<long long>(standard.size());
}

// ---- property suites ---------------------------------------------------------

struct PropertyFailure {
    std::string description;
    std::string serialized_instance; // re-runnable CLI input document
};

struct PropertyReport {
    std::string property;
    int instances = 0;
    std::vector<PropertyFailure> failures;
    bool ok() const { return failures.empty(); }
};

// cor_associative_polar for a monomial algebra B: m_r^i(B) equals the sum of
// length * m_r^i(B/p) over the minimal primes of dimension r+1.
template <class F>
bool associativity_check(const F& f, const TypedAlgebra<F>& algebra, const FitOptions& opts, Budget* budget,
                         std::string* why = nullptr) {
    const Ring& ring = algebra.ring;
    const int s = static_cast<int>(ring.s());
    const int nall = s + static_cast<int>(ring.m());

    // relations must be x-monomials with monomial u-coefficients
    std::vector<Mono> gens; // in the combined variables (u first, then x)
    std::vector<std::set<int>> supports;
    for (const auto& rel : algebra.relations) {
        if (rel.terms.size() != 1 || rel.terms.front().coeff.terms.size() != 1)
            throw NotMonomial("associativity oracle needs monomial relations");
        Mono combined(static_cast<std::size_t>(nall));
        const auto& um = rel.terms.front().coeff.terms.front().first;
        const auto& xm = rel.terms.front().xmono;
        for (int i = 0; i < s; ++i)
            combined.e[static_cast<std::size_t>(i)] = um.e[static_cast<std::size_t>(i)];
        for (int i = 0; i < static_cast<int>(ring.m()); ++i)
            combined.e[static_cast<std::size_t>(s + i)] = xm.e[static_cast<std::size_t>(i)];
        std::set<int> sup;
        for (int i = 0; i < nall; ++i)
            if (combined.e[static_cast<std::size_t>(i)] > 0)
                sup.insert(i);
        gens.push_back(combined);
        supports.push_back(std::move(sup));
    }

    ModulePieces<F> host(f, TypedModule<F>::free_rank_one(algebra), budget);
    auto lhs = polar_vector(host, opts);
    const int r = lhs.r;

    std::vector<long long> rhs(static_cast<std::size_t>(r) + 1, 0);
    auto covers = algebra.relations.empty() ? std::vector<std::set<int>>{{}} : minimal_variable_covers(supports, nall);
    for (const auto& cover : covers) {
        int dim_bp = nall - static_cast<int>(cover.size());
        if (dim_bp != r + 1)
            continue;
        long long len = local_monomial_length(gens, cover);
        // B/p is the polynomial ring on the surviving variables
        TypedAlgebra<F> quo;
        std::vector<int> keep_x;
        for (int i = 0; i < s; ++i)
            if (!cover.count(i))
                quo.ring.base_vars.push_back(ring.base_vars[static_cast<std::size_t>(i)]);
        for (int i = 0; i < static_cast<int>(ring.m()); ++i)
            if (!cover.count(s + i))
                quo.ring.poly_vars.push_back(ring.poly_vars[static_cast<std::size_t>(i)]);
        if (quo.ring.poly_vars.empty())
            continue; // empty projective support contributes zero
        ModulePieces<F> qhost(f, TypedModule<F>::free_rank_one(quo), budget);
        PolarVector pv;
        try {
            pv = polar_vector(qhost, opts, r);
        } catch (const EmptySupport&) {
            continue;
        }
        for (int i = 0; i <= r; ++i)
            rhs[static_cast<std::size_t>(i)] += len * pv.values[static_cast<std::size_t>(i)];
    }
    if (lhs.values != rhs) {
        if (why) {
            *why = "associativity mismatch: lhs " + lhs.str() + " rhs (";
            for (std::size_t i = 0; i < rhs.size(); ++i)
                *why += (i ? "," : "") + std::to_string(rhs[i]);
            *why += ")";
        }
        return false;
    }
    return true;
}

// m-adic order of an x-homogeneous b: largest k with b in m^k B_alpha.
template <class F>
int madic_order(const F& f, ModulePieces<F>& mp, const GradedPoly<F>& b, Budget* budget, int cap = 64) {
    int alpha = b.xdeg_homogeneous();
    auto col = mp.expand_in_frame(0, b, Mono(mp.m()), alpha);
    VecPoly<F> w;
    if (col)
        w = vec_from_columns(f, *col, ModOrder{});
    int beta = 0;
    for (int k = 1; k <= cap; ++k) {
        std::vector<VecPoly<F>> gens;
        int rank = static_cast<int>(mp.frame(alpha).size());
        for (const auto& um : monomials_of_degree(mp.s(), k))
            for (int l = 0; l < rank; ++l) {
                VecPoly<F> g;
                g.terms.push_back(ModTerm<F>{um, l, f.one()});
                gens.push_back(std::move(g));
            }
        for (const auto& rb : mp.relation_basis(alpha))
            gens.push_back(rb);
        ModOrder top;
        auto basis = gb::buchberger(f, std::move(gens), top, budget);
        if (!gb::reduce_full(f, w, basis, top, budget).is_zero())
            return beta;
        beta = k;
    }
    throw BudgetExceeded("m-adic order scan cap hit (is b zero in B?)");
}

// thm_hypersurface_sect for one pair (M, b): entrywise inequality
//   m_{r-1}^i(M/bM) >= alpha m_r^i(M) + beta m_r^{i+1}(M) + m_{r-1}^i(N),
// with equality exactly when b is a G-parameter on M.
struct HypersurfaceOutcome {
    bool inequality = false;
    bool equality = false;
    int alpha = 0;
    int beta = 0;
    std::vector<long long> lhs, rhs;
};

template <class F>
HypersurfaceOutcome hypersurface_check(const F& f, const TypedModule<F>& mod, const GradedPoly<F>& b,
                                       const FitOptions& opts, Budget* budget) {
    HypersurfaceOutcome out;
    ModulePieces<F> mp(f, mod, budget);
    auto pv = polar_vector(mp, opts);
    const int r = pv.r;
    if (r == 0)
        throw InvalidDepth("hypersurface section needs r >= 1");
    out.alpha = b.xdeg_homogeneous();
    out.beta = madic_order(f, mp, b, budget);

    auto quotient = quotient_by_element(mod, b);
    ModulePieces<F> qp(f, quotient, budget);
    auto lhs = polar_vector(qp, opts, r - 1);

    std::map<int, PieceModule<F>> colon_pieces;
    std::map<int, std::vector<long long>> colon_dims;
    auto nv = polar_from_cells(
        [&](int v, int n) {
            auto it = colon_pieces.find(v);
            if (it == colon_pieces.end())
                it = colon_pieces.emplace(v, colon_element_piece(mp, b, v)).first;
            auto& row = colon_dims[v];
            if (n >= static_cast<int>(row.size()))
                row = truncated_dims(f, it->second, std::max(n, 2 * n), budget);
            return row[static_cast<std::size_t>(n)];
        },
        opts, r - 1, "polar vector of (0 : b)");

    out.lhs = lhs.values;
    out.rhs.assign(static_cast<std::size_t>(r), 0);
    bool ok = true, eq = true;
    for (int i = 0; i <= r - 1; ++i) {
        long long rhs = static_cast<long long>(out.alpha) * pv.values[static_cast<std::size_t>(i)] +
                        static_cast<long long>(out.beta) * pv.values[static_cast<std::size_t>(i + 1)] +
                        nv.values[static_cast<std::size_t>(i)];
        out.rhs[static_cast<std::size_t>(i)] = rhs;
        if (lhs.values[static_cast<std::size_t>(i)] < rhs)
            ok = false;
        if (lhs.values[static_cast<std::size_t>(i)] != rhs)
            eq = false;
    }
    out.inequality = ok;
    out.equality = eq;
    return out;
}

} // namespace oracle
} // namespace polarmult
