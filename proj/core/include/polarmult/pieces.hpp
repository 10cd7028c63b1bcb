#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "polarmult/groebner.hpp"
#include "polarmult/presentations.hpp"

namespace polarmult {

// Extraction of graded pieces M_v as concrete kappa[u]-modules, memoized per
// degree. The frame of M_v is the list of pairs (generator, x-monomial of
// degree v - shift); relations are all x-monomial multiples of the algebra
// relations and of the module relation columns landing in degree v.
template <class F>
class ModulePieces {
  public:
    struct FrameEntry {
        int gen;
        Mono xmono;
    };

    ModulePieces(const F& f, TypedModule<F> mod, Budget* budget = nullptr)
        : f_(f), mod_(std::move(mod)), budget_(budget) {
        mod_.validate();
        min_shift_ = 0;
        if (!mod_.shifts.empty())
            min_shift_ = *std::min_element(mod_.shifts.begin(), mod_.shifts.end());
    }

    const F& field() const { return f_; }
    const TypedModule<F>& presentation() const { return mod_; }
    std::size_t s() const { return mod_.algebra.ring.s(); }
    std::size_t m() const { return mod_.algebra.ring.m(); }
    int min_shift() const { return min_shift_; }
    Budget* budget() const { return budget_; }

    const std::vector<FrameEntry>& frame(int v) {
        auto it = frames_.find(v);
        if (it != frames_.end())
            return it->second;
        std::vector<FrameEntry> fr;
        for (int i = 0; i < static_cast<int>(mod_.shifts.size()); ++i) {
            int d = v - mod_.shifts[static_cast<std::size_t>(i)];
            if (d < 0)
                continue;
            for (auto& mu : monomials_of_degree(m(), d))
                fr.push_back(FrameEntry{i, std::move(mu)});
        }
        return frames_.emplace(v, std::move(fr)).first->second;
    }

    int frame_index(int v, int gen, const Mono& xm) {
        auto& idx = frame_index_map(v);
        auto it = idx.find(std::make_pair(gen, xm.e));
        if (it == idx.end())
            return -1;
        return it->second;
    }

    const PieceModule<F>& piece(int v) {
        auto it = pieces_.find(v);
        if (it != pieces_.end())
            return it->second;
        PieceModule<F> p;
        p.nbase = s();
        p.rank = static_cast<int>(frame(v).size());
        for (const auto& fe : frame(v))
            p.frame_labels.push_back("g" + std::to_string(fe.gen) + "*" +
                                     mono_str(fe.xmono, mod_.algebra.ring.poly_vars));
        // algebra relations, expanded per generator
        for (const auto& rel : mod_.algebra.relations) {
            int delta = rel.xdeg_homogeneous();
            for (int i = 0; i < static_cast<int>(mod_.shifts.size()); ++i) {
                int rest = v - mod_.shifts[static_cast<std::size_t>(i)] - delta;
                if (rest < 0)
                    continue;
                for (const auto& mu : monomials_of_degree(m(), rest)) {
                    auto col = expand_in_frame(i, rel, mu, v);
                    if (col)
                        p.relations.push_back(std::move(*col));
                }
            }
        }
        // module relation columns
        for (std::size_t j = 0; j < mod_.columns.size(); ++j) {
            int coldeg = mod_.column_degrees[j];
            int rest = v - coldeg;
            if (rest < 0)
                continue;
            for (const auto& mu : monomials_of_degree(m(), rest)) {
                std::vector<BasePoly<F>> col(frame(v).size());
                bool nonzero = false;
                for (int i = 0; i < static_cast<int>(mod_.shifts.size()); ++i) {
                    const auto& entry = mod_.columns[j][static_cast<std::size_t>(i)];
                    for (const auto& t : entry.terms) {
                        int pos = frame_index(v, i, t.xmono * mu);
                        if (pos < 0)
                            throw Error("internal: frame index missing during piece extraction");
                        col[static_cast<std::size_t>(pos)] =
                            poly_add(f_, col[static_cast<std::size_t>(pos)], t.coeff);
                        nonzero = true;
                    }
                }
                if (nonzero)
                    p.relations.push_back(std::move(col));
            }
        }
        return pieces_.emplace(v, std::move(p)).first->second;
    }

    // truncated dimension H(v, n) = length(M_v / m^{n+1} M_v), cached per v
    long long cell(int v, int n) {
        auto& row = dim_rows_[v];
        if (n >= static_cast<int>(row.size())) {
            int upto = std::max(n, static_cast<int>(row.size()) * 2);
            row = truncated_dims(f_, piece(v), upto, budget_);
        }
        return row[static_cast<std::size_t>(n)];
    }

    // coordinates of (x-monomial mu) * b placed on generator `gen`, inside frame(v)
    std::optional<std::vector<BasePoly<F>>> expand_in_frame(int gen, const GradedPoly<F>& b, const Mono& mu, int v) {
        std::vector<BasePoly<F>> col(frame(v).size());
        bool nonzero = false;
        for (const auto& t : b.terms) {
            int pos = frame_index(v, gen, t.xmono * mu);
            if (pos < 0)
                throw Error("internal: frame index missing during expansion");
            col[static_cast<std::size_t>(pos)] = poly_add(f_, col[static_cast<std::size_t>(pos)], t.coeff);
            nonzero = true;
        }
        if (!nonzero)
            return std::nullopt;
        return col;
    }

    // multiplication by an x-homogeneous b of degree alpha as a matrix from
    // frame(v) coordinates into frame(v + alpha) coordinates
    std::vector<std::vector<BasePoly<F>>> multiplication_matrix(const GradedPoly<F>& b, int v) {
        int alpha = b.xdeg_homogeneous();
        if (alpha < 0)
            alpha = 0; // zero map
        std::vector<std::vector<BasePoly<F>>> cols;
        for (const auto& fe : frame(v)) {
            auto col = expand_in_frame(fe.gen, b, fe.xmono, v + alpha);
            if (col)
                cols.push_back(std::move(*col));
            else
                cols.emplace_back(frame(v + alpha).size());
        }
        return cols;
    }

    // product of a degree-1 form with a submodule element of frame(v-1)
    VecPoly<F> step_by_form(const GradedPoly<F>& g, const VecPoly<F>& w, int v) {
        ModOrder top;
        VecPoly<F> out;
        auto wcols = vec_to_columns(w, static_cast<int>(frame(v - 1).size()));
        std::vector<BasePoly<F>> cols(frame(v).size());
        for (std::size_t pos = 0; pos < wcols.size(); ++pos) {
            if (wcols[pos].is_zero())
                continue;
            const auto& fe = frame(v - 1)[pos];
            for (const auto& t : g.terms) {
                int tgt = frame_index(v, fe.gen, fe.xmono * t.xmono);
                if (tgt < 0)
                    throw Error("internal: frame index missing during filtration step");
                cols[static_cast<std::size_t>(tgt)] =
                    poly_add(f_, cols[static_cast<std::size_t>(tgt)], poly_mul(f_, t.coeff, wcols[pos]));
            }
        }
        return vec_from_columns(f_, cols, top);
    }

    // reduced basis of the relation span of piece(v), memoized
    const std::vector<VecPoly<F>>& relation_basis(int v) {
        auto it = relbases_.find(v);
        if (it != relbases_.end())
            return it->second;
        ModOrder top;
        std::vector<VecPoly<F>> gens;
        for (const auto& col : piece(v).relations)
            gens.push_back(vec_from_columns(f_, col, top));
        auto basis = gb::buchberger(f_, std::move(gens), top, budget_);
        return relbases_.emplace(v, std::move(basis)).first->second;
    }

  private:
    using FrameKey = std::pair<int, std::vector<int>>;

    std::map<FrameKey, int>& frame_index_map(int v) {
        auto it = frame_maps_.find(v);
        if (it != frame_maps_.end())
            return it->second;
        std::map<FrameKey, int> idx;
        const auto& fr = frame(v);
        for (int i = 0; i < static_cast<int>(fr.size()); ++i)
            idx.emplace(std::make_pair(fr[static_cast<std::size_t>(i)].gen,
                                       fr[static_cast<std::size_t>(i)].xmono.e),
                        i);
        return frame_maps_.emplace(v, std::move(idx)).first->second;
    }

    const F& f_;
    TypedModule<F> mod_;
    Budget* budget_;
    int min_shift_ = 0;
    std::map<int, std::vector<FrameEntry>> frames_;
    std::map<int, std::map<FrameKey, int>> frame_maps_;
    std::map<int, PieceModule<F>> pieces_;
    std::map<int, std::vector<long long>> dim_rows_;
    std::map<int, std::vector<VecPoly<F>>> relbases_;
};

// Presentation of (span(top) + Rel) / (span(bottom) + Rel) as an abstract
// kappa[u]-module: frame = the given top generators, relations = all their
// combinations landing in span(bottom) + Rel.
template <class F>
PieceModule<F> quotient_piece(const F& f, const std::vector<VecPoly<F>>& top, const std::vector<VecPoly<F>>& bottom,
                              const PieceModule<F>& ambient, Budget* budget = nullptr, bool check_contained = false) {
    if (check_contained && !bottom.empty()) {
        ModOrder topord;
        std::vector<VecPoly<F>> gens = top;
        for (const auto& col : ambient.relations)
            gens.push_back(vec_from_columns(f, col, topord));
        auto basis = gb::buchberger(f, std::move(gens), topord, budget);
        for (const auto& b : bottom)
            if (!gb::reduce_full(f, b, basis, topord, budget).is_zero())
                throw NotContained("bottom submodule is not contained in the top submodule");
    }
    PieceModule<F> out;
    out.nbase = ambient.nbase;
    out.rank = static_cast<int>(top.size());
    if (top.empty())
        return out;
    PieceModule<F> target = ambient;
    for (const auto& b : bottom)
        target.relations.push_back(vec_to_columns(b, ambient.rank));
    std::vector<std::vector<BasePoly<F>>> cols;
    cols.reserve(top.size());
    for (const auto& g : top)
        cols.push_back(vec_to_columns(g, ambient.rank));
    for (auto& k : kernel_of_map(f, cols, target, budget))
        out.relations.push_back(vec_to_columns(k, out.rank));
    return out;
}

// Presentation of the submodule spanned by `gens` (+ ambient relations) as an
// abstract module.
template <class F>
PieceModule<F> submodule_piece(const F& f, const std::vector<VecPoly<F>>& gens, const PieceModule<F>& ambient,
                               Budget* budget = nullptr) {
    return quotient_piece<F>(f, gens, {}, ambient, budget);
}

// Degree-v piece of (0 :_M b) presented as an abstract module: the kernel of
// multiplication b : M_v -> M_{v+alpha}.
template <class F>
PieceModule<F> colon_element_piece(ModulePieces<F>& mp, const GradedPoly<F>& b, int v) {
    const F& f = mp.field();
    int alpha = b.is_zero() ? 0 : b.xdeg_homogeneous();
    auto cols = mp.multiplication_matrix(b, v);
    auto ker = kernel_of_map(f, cols, mp.piece(v + alpha), mp.budget());
    // elements of the ambient relation span are already zero in M_v
    std::vector<VecPoly<F>> pruned;
    ModOrder top;
    const auto& relbasis = mp.relation_basis(v);
    for (const auto& g : ker)
        if (!gb::reduce_full(f, g, relbasis, top, mp.budget()).is_zero())
            pruned.push_back(g);
    return quotient_piece<F>(f, pruned, {}, mp.piece(v), mp.budget());
}

// Degree-v piece of H^0_m(M) = (0 :_M m^infty), presented as an abstract module.
template <class F>
PieceModule<F> torsion_piece(ModulePieces<F>& mp, int v) {
    const F& f = mp.field();
    auto sat = saturate_irrelevant<F>(f, {}, mp.piece(v), mp.budget());
    return quotient_piece<F>(f, sat, {}, mp.piece(v), mp.budget());
}

// M/bM for an x-homogeneous b: append columns b * generator_i.
template <class F>
TypedModule<F> quotient_by_element(const TypedModule<F>& mod, const GradedPoly<F>& b) {
    TypedModule<F> out = mod;
    for (std::size_t i = 0; i < mod.shifts.size(); ++i) {
        std::vector<GradedPoly<F>> col(mod.shifts.size());
        col[i] = b;
        out.columns.push_back(std::move(col));
    }
    out.validate();
    return out;
}

// The descending filtration [I^k M]_v = A_k M_{v-k} determined by degree-1
// forms, with per-(k, v) generator sets, quotient summand presentations and
// truncated dimensions, all memoized. Hosts both flavors:
//   - quotient flavor: host is the actual module, level 0 is the whole piece;
//   - subalgebra (Rees) flavor: host is the rank-1 free module over the free
//     ambient algebra and level 0 is generated by products of `level_forms`.
template <class F>
class Filtration {
  public:
    Filtration(ModulePieces<F>& host, std::vector<GradedPoly<F>> forms,
               std::optional<std::vector<GradedPoly<F>>> level_forms = std::nullopt)
        : host_(host), f_(host.field()), forms_(std::move(forms)), level_forms_(std::move(level_forms)) {
        for (const auto& g : forms_)
            if (g.xdeg_homogeneous() != 1)
                throw InputError("filtration forms must have degree exactly 1");
        if (level_forms_)
            for (const auto& g : *level_forms_)
                if (g.xdeg_homogeneous() != 1)
                    throw InputError("algebra generator forms must have degree exactly 1");
    }

    ModulePieces<F>& host() { return host_; }

    // pruned generators of [A_k B_{v-k}] inside frame(v) (ambient relations implicit)
    const std::vector<VecPoly<F>>& power_gens(int k, int v) {
        auto key = std::make_pair(k, v);
        auto it = gens_.find(key);
        if (it != gens_.end())
            return it->second;
        std::vector<VecPoly<F>> out;
        if (k < 0 || v < 0 || k > v) {
            // empty
        } else if (k == 0 && !level_forms_) {
            ModOrder top;
            int rank = static_cast<int>(host_.frame(v).size());
            for (int i = 0; i < rank; ++i) {
                VecPoly<F> e;
                e.terms.push_back(ModTerm<F>{Mono(host_.s()), i, f_.one()});
                out.push_back(std::move(e));
            }
        } else if (k == 0 && v == 0) {
            ModOrder top;
            int rank = static_cast<int>(host_.frame(0).size());
            for (int i = 0; i < rank; ++i) {
                VecPoly<F> e;
                e.terms.push_back(ModTerm<F>{Mono(host_.s()), i, f_.one()});
                out.push_back(std::move(e));
            }
        } else {
            const auto& forms = (k == 0) ? *level_forms_ : forms_;
            const auto& prev = power_gens(k == 0 ? 0 : k - 1, v - 1);
            for (const auto& g : forms)
                for (const auto& w : prev) {
                    auto prod = host_.step_by_form(g, w, v);
                    if (!prod.is_zero())
                        out.push_back(std::move(prod));
                }
            out = prune(std::move(out), v);
        }
        return gens_.emplace(key, std::move(out)).first->second;
    }

    // reduced basis of power(k, v) + ambient relations, for membership tests
    const std::vector<VecPoly<F>>& power_basis(int k, int v) {
        auto key = std::make_pair(k, v);
        auto it = bases_.find(key);
        if (it != bases_.end())
            return it->second;
        ModOrder top;
        std::vector<VecPoly<F>> gens = power_gens(k, v);
        for (const auto& b : host_.relation_basis(v))
            gens.push_back(b);
        auto basis = gb::buchberger(f_, std::move(gens), top, host_.budget());
        return bases_.emplace(key, std::move(basis)).first->second;
    }

    bool member(const VecPoly<F>& w, int k, int v) {
        ModOrder top;
        return gb::reduce_full(f_, w, power_basis(k, v), top, host_.budget()).is_zero();
    }

    // presentation of the filtration quotient A_k B_{v-k} / A_{k+1} B_{v-k-1}
    const PieceModule<F>& summand_piece(int k, int v) {
        auto key = std::make_pair(k, v);
        auto it = summands_.find(key);
        if (it != summands_.end())
            return it->second;
        PieceModule<F> p;
        if (k == 0 && !level_forms_) {
            // whole piece over the next level: frame stays, relations grow
            p = host_.piece(v);
            for (const auto& g : power_gens(1, v))
                p.relations.push_back(vec_to_columns(g, p.rank));
        } else {
            p = quotient_piece<F>(f_, power_gens(k, v), power_gens(k + 1, v), host_.piece(v), host_.budget());
        }
        return summands_.emplace(key, std::move(p)).first->second;
    }

    long long summand_cell(int k, int v, int n) {
        auto key = std::make_pair(k, v);
        auto& row = summand_dims_[key];
        if (n >= static_cast<int>(row.size())) {
            int upto = std::max(n, static_cast<int>(row.size()) * 2);
            row = truncated_dims(f_, summand_piece(k, v), upto, host_.budget());
        }
        return row[static_cast<std::size_t>(n)];
    }

    int kmax(int v) const { return std::max(0, v - host_.min_shift()); }

    // H of gr_I(M) = sum of all filtration summands in degree v
    long long gr_cell(int v, int n) {
        long long total = 0;
        for (int k = 0; k <= kmax(v); ++k)
            total += summand_cell(k, v, n);
        return total;
    }

    // H of G/B_t G: only summands with B-part degree < t survive
    long long trunc_cell(int t, int v, int n) {
        long long total = 0;
        for (int k = std::max(0, v - t + 1); k <= kmax(v); ++k)
            total += summand_cell(k, v, n);
        return total;
    }

    // H of the degree-v piece of the image algebra A (equivalently G/B_1 G)
    long long image_cell(int v, int n) { return trunc_cell(1, v, n); }

    const PieceModule<F>& image_piece(int v) { return summand_piece(kmax(v), v); }

  private:
    std::vector<VecPoly<F>> prune(std::vector<VecPoly<F>> gens, int v) {
        ModOrder top;
        for (const auto& b : host_.relation_basis(v))
            gens.push_back(b);
        auto basis = gb::buchberger(f_, std::move(gens), top, host_.budget());
        std::vector<VecPoly<F>> kept;
        const auto& relbasis = host_.relation_basis(v);
        for (const auto& g : basis)
            if (!gb::reduce_full(f_, g, relbasis, top, host_.budget()).is_zero())
                kept.push_back(g);
        return kept;
    }

    ModulePieces<F>& host_;
    const F& f_;
    std::vector<GradedPoly<F>> forms_;
    std::optional<std::vector<GradedPoly<F>>> level_forms_;
    std::map<std::pair<int, int>, std::vector<VecPoly<F>>> gens_;
    std::map<std::pair<int, int>, std::vector<VecPoly<F>>> bases_;
    std::map<std::pair<int, int>, PieceModule<F>> summands_;
    std::map<std::pair<int, int>, std::vector<long long>> summand_dims_;
};

} // namespace polarmult
