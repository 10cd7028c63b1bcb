#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "polarmult/basepoly.hpp"
#include "polarmult/errors.hpp"
#include "polarmult/monomial.hpp"

namespace polarmult {

// A finitely generated kappa[u]-module, given as the cokernel of a relation
// matrix on a distinguished monomial frame: kappa[u]^rank / <relation columns>.
template <class F>
struct PieceModule {
    std::size_t nbase = 0; // number of base variables s
    int rank = 0;
    std::vector<std::vector<BasePoly<F>>> relations; // columns, each of length `rank`
    std::vector<std::string> frame_labels;           // optional, for reports

    static PieceModule free_module(std::size_t s, int rank) {
        PieceModule p;
        p.nbase = s;
        p.rank = rank;
        return p;
    }
};

// kappa-dimensions of Q/(u)^{n+1}Q for all 0 <= n <= nmax in one sweep.
//
// Modulo (u)^{n+1} the relation span is generated by the truncations of
// u^b * C_j with |b| <= nmax, so one echelonization with pivots on the
// lowest-degree column (columns ordered degree-ascending) yields every
// truncated dimension: H(n) = #cols(deg<=n) - #pivots(deg<=n).
template <class F>
std::vector<long long> truncated_dims(const F& f, const PieceModule<F>& q, int nmax, Budget* budget = nullptr) {
    using Elem = typename F::Elem;
    const std::size_t s = q.nbase;
    const int p = q.rank;
    if (nmax < 0)
        return {};

    auto monos = monomials_up_to(s, nmax); // (deg asc, degrevlex desc)
    std::map<std::vector<int>, int> mono_idx;
    for (int i = 0; i < static_cast<int>(monos.size()); ++i)
        mono_idx.emplace(monos[i].e, i);

    const long long ncols = static_cast<long long>(monos.size()) * p;
    auto col_of = [&](int midx, int pos) { return static_cast<long long>(midx) * p + pos; };
    auto col_deg = [&](long long col) { return monos[static_cast<std::size_t>(col / p)].deg(); };

    using Row = std::vector<std::pair<long long, Elem>>; // ascending by column id
    std::vector<Row> pivot_rows;
    std::map<long long, int> pivot_of_col;
    std::vector<long long> pivots_by_deg(static_cast<std::size_t>(nmax) + 1, 0);

    auto reduce_insert = [&](Row row) {
        while (!row.empty()) {
            if (budget)
                budget->charge();
            long long lead = row.front().first;
            auto it = pivot_of_col.find(lead);
            if (it == pivot_of_col.end()) {
                // normalize pivot to 1
                Elem inv = f.div(f.one(), row.front().second);
                for (auto& [c, v] : row)
                    v = f.mul(v, inv);
                pivot_of_col.emplace(lead, static_cast<int>(pivot_rows.size()));
                pivots_by_deg[static_cast<std::size_t>(col_deg(lead))] += 1;
                pivot_rows.push_back(std::move(row));
                return;
            }
            const Row& pr = pivot_rows[static_cast<std::size_t>(it->second)];
            Elem c = row.front().second; // pivot row is monic
            Row out;
            out.reserve(row.size() + pr.size());
            std::size_t i = 0, j = 0;
            while (i < row.size() && j < pr.size()) {
                if (row[i].first < pr[j].first) {
                    out.push_back(row[i++]);
                } else if (row[i].first > pr[j].first) {
                    out.emplace_back(pr[j].first, f.neg(f.mul(c, pr[j].second)));
                    ++j;
                } else {
                    Elem v = f.sub(row[i].second, f.mul(c, pr[j].second));
                    if (!f.is_zero(v))
                        out.emplace_back(row[i].first, v);
                    ++i;
                    ++j;
                }
            }
            for (; i < row.size(); ++i)
                out.push_back(row[i]);
            for (; j < pr.size(); ++j)
                out.emplace_back(pr[j].first, f.neg(f.mul(c, pr[j].second)));
            row = std::move(out);
        }
    };

    for (const auto& colvec : q.relations) {
        for (const auto& b : monos) {
            Row row;
            for (int pos = 0; pos < p; ++pos) {
                for (const auto& [a, cf] : colvec[static_cast<std::size_t>(pos)].terms) {
                    Mono ab = a * b;
                    if (ab.deg() > nmax)
                        continue;
                    row.emplace_back(col_of(mono_idx.at(ab.e), pos), cf);
                }
            }
            if (row.empty())
                continue;
            std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            reduce_insert(std::move(row));
        }
    }

    // column counts per degree
    std::vector<long long> cols_by_deg(static_cast<std::size_t>(nmax) + 1, 0);
    for (const auto& m : monos)
        cols_by_deg[static_cast<std::size_t>(m.deg())] += p;

    std::vector<long long> h(static_cast<std::size_t>(nmax) + 1, 0);
    long long acc = 0;
    for (int n = 0; n <= nmax; ++n) {
        acc += cols_by_deg[static_cast<std::size_t>(n)] - pivots_by_deg[static_cast<std::size_t>(n)];
        h[static_cast<std::size_t>(n)] = acc;
    }
    (void)ncols;
    return h;
}

// dim_kappa of Q/(u)^{n+1}Q
template <class F>
long long truncated_dimension(const F& f, const PieceModule<F>& q, int n, Budget* budget = nullptr) {
    if (q.nbase == 0)
        return truncated_dims(f, q, 0, budget).at(0);
    return truncated_dims(f, q, n, budget).at(static_cast<std::size_t>(n));
}

// Total kappa-dimension of a module known to be m-power torsion; by Nakayama
// the truncated dimensions stabilize exactly when they stop growing.
template <class F>
long long torsion_total_dimension(const F& f, const PieceModule<F>& q, Budget* budget = nullptr) {
    if (q.nbase == 0)
        return truncated_dimension(f, q, 0, budget);
    int n = 1;
    for (;;) {
        auto h = truncated_dims(f, q, n, budget);
        if (h[static_cast<std::size_t>(n)] == h[static_cast<std::size_t>(n - 1)])
            return h[static_cast<std::size_t>(n)];
        n = n * 2;
        if (n > 4096)
            throw BudgetExceeded("torsion dimension did not stabilize (module not m-power torsion?)");
    }
}

} // namespace polarmult
