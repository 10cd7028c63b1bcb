#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polarmult/polar.hpp"

namespace polarmult {

struct Assumptions {
    bool equidimensional_B = false;
};

struct CriteriaCaps {
    int t_cap = 10;     // truncation levels tried for thm_criteria(b)
    int power_cap = 8;  // N in the direct radical-membership certificate
    int scan_cap = 8;   // k (resp. v) in the direct reduction scans
};

struct Verdict {
    enum class Outcome { Holds, Fails, Inconclusive };
    Outcome outcome = Outcome::Inconclusive;
    std::string rule;
    std::vector<std::pair<std::string, PolarVector>> vectors;
    std::vector<std::string> assumptions_used;
    std::optional<int> certificate; // N / t / v of the direct certificate, when found
    std::string detail;

    static const char* outcome_str(Outcome o) {
        switch (o) {
        case Outcome::Holds: return "Holds";
        case Outcome::Fails: return "Fails";
        default: return "Inconclusive";
        }
    }
};

struct VanishingProfile {
    int i_min = 0; // r - dim Proj(B/mB)
    int i_max = 0; // dim R = s

    bool admits(const PolarVector& pv) const {
        for (int i = 0; i <= pv.r; ++i)
            if ((i > i_max || i < i_min) && pv.values[static_cast<std::size_t>(i)] != 0)
                return false;
        return true;
    }
};

namespace detail {

template <class F>
std::vector<GradedPoly<F>> variable_forms(const F& f, const Ring& ring) {
    std::vector<GradedPoly<F>> forms;
    for (std::size_t i = 0; i < ring.m(); ++i) {
        Mono xm(ring.m());
        xm.e[i] = 1;
        GradedPoly<F> g;
        g.terms.push_back(XTerm<F>{xm, BasePoly<F>::constant(f, f.one(), ring.s())});
        forms.push_back(std::move(g));
    }
    return forms;
}

// x-degree observed in a presentation, for the default window origin
template <class F>
int observed_degree(const TypedModule<F>& mod) {
    int d = 1;
    for (const auto& rel : mod.algebra.relations)
        if (!rel.is_zero())
            d = std::max(d, rel.xdeg_homogeneous());
    for (int dd : mod.column_degrees)
        d = std::max(d, dd);
    for (int sh : mod.shifts)
        d = std::max(d, sh);
    return d;
}

} // namespace detail

// lem_vanish: the polar vector of an algebra B vanishes outside the band
// [r - dim Proj(B/mB), dim R].
template <class F>
VanishingProfile vanishing_profile(ModulePieces<F>& host, int r, const FitOptions& opts) {
    auto fiber = fitted_sequence([&](int v) { return host.cell(v, 0); }, std::max(4, opts.observed_degree + 2),
                                 opts.vmax, opts.w, opts.margin, "dim Proj(B/mB)");
    VanishingProfile prof;
    prof.i_max = static_cast<int>(host.s());
    prof.i_min = r - fiber.degree;
    return prof;
}

// Verdict engine for a homogeneous inclusion A ⊆ B of standard graded
// R-algebras. Also hosts the Rees-algebra flavor used by the module criteria:
// there B = R(E) is the image subalgebra of a free algebra generated by
// `generator_forms` and the ambient carries no relations.
template <class F>
class InclusionEngine {
  public:
    // quotient flavor: B = R[x]/I, A generated by degree-1 elements of B
    InclusionEngine(const F& f, TypedAlgebra<F> algebra, TypedSubalgebra<F> sub, Budget* budget = nullptr)
        : f_(f), budget_(budget) {
        algebra.validate();
        sub.validate();
        a_forms_ = sub.gens;
        b_forms_ = detail::variable_forms(f_, algebra.ring);
        host_ = std::make_unique<ModulePieces<F>>(f_, TypedModule<F>::free_rank_one(std::move(algebra)), budget_);
        filt_ = std::make_unique<Filtration<F>>(*host_, a_forms_);
        obs_deg_ = detail::observed_degree(host_->presentation());
    }

    // Rees flavor: A = R(U) ⊆ B = R(E) inside free R[z_1..z_e]
    InclusionEngine(const F& f, Ring free_ring, std::vector<GradedPoly<F>> u_forms,
                    std::vector<GradedPoly<F>> e_forms, Budget* budget = nullptr)
        : f_(f), budget_(budget) {
        TypedAlgebra<F> free_alg;
        free_alg.ring = std::move(free_ring);
        a_forms_ = std::move(u_forms);
        b_forms_ = std::move(e_forms);
        host_ = std::make_unique<ModulePieces<F>>(f_, TypedModule<F>::free_rank_one(std::move(free_alg)), budget_);
        filt_ = std::make_unique<Filtration<F>>(*host_, a_forms_, b_forms_);
        b_filt_ = std::make_unique<Filtration<F>>(*host_, b_forms_);
        rees_ = true;
    }

    ModulePieces<F>& host() { return *host_; }
    Filtration<F>& filtration() { return *filt_; }
    bool rees_flavor() const { return rees_; }

    FitOptions tuned(FitOptions opts) const {
        opts.observed_degree = std::max(opts.observed_degree, obs_deg_);
        return opts;
    }

    // polar vector of B itself
    const PolarVector& polar_B(const FitOptions& opts) {
        if (!polar_b_) {
            auto o = tuned(opts);
            if (rees_)
                polar_b_ = polar_from_cells([&](int v, int n) { return b_filt_->image_cell(v, n); }, o,
                                            rees_r_override_, "polar vector of R(E)");
            else
                polar_b_ = polar_vector(*host_, o);
        }
        return *polar_b_;
    }

    void set_rees_r(int r) { rees_r_override_ = r; }

    PolarVector relative(const FitOptions& opts) { return relative_polar(*filt_, polar_B(opts).r, tuned(opts)); }
    PolarVector truncated(int t, const FitOptions& opts) {
        return truncated_relative(*filt_, t, polar_B(opts).r, tuned(opts));
    }
    PolarVector image(const FitOptions& opts) { return image_polar(*filt_, polar_B(opts).r, tuned(opts)); }

    // direct radical-membership certificate: every B-generator g has some
    // power g^N inside A_1 B_{N-1}
    std::optional<int> integral_certificate(int power_cap) {
        int worst = 0;
        for (const auto& g : b_forms_) {
            bool found = false;
            GradedPoly<F> p = g;
            for (int n = 1; n <= power_cap; ++n) {
                if (n > 1)
                    p = xpoly_mul(f_, p, g);
                auto col = host_->expand_in_frame(0, p, Mono(host_->m()), n);
                VecPoly<F> w;
                if (col)
                    w = vec_from_columns(f_, *col, ModOrder{});
                if (filt_->member(w, 1, n)) {
                    worst = std::max(worst, n);
                    found = true;
                    break;
                }
            }
            if (!found)
                return std::nullopt;
        }
        return worst;
    }

    // stabilization of the truncated vectors over 3 consecutive levels
    struct Stabilization {
        std::optional<PolarVector> vec;
        int t = 0;
        std::vector<PolarVector> trail;
    };
    Stabilization stabilized_truncation(const FitOptions& opts, int t_cap) {
        Stabilization st;
        for (int t = 1; t <= t_cap; ++t) {
            st.trail.push_back(truncated(t, opts));
            std::size_t n = st.trail.size();
            if (n >= 3 && st.trail[n - 1].values == st.trail[n - 2].values &&
                st.trail[n - 2].values == st.trail[n - 3].values) {
                st.vec = st.trail[n - 1];
                st.t = t - 2;
                return st;
            }
        }
        return st;
    }

    Verdict check_integral(const Assumptions& asm_, const FitOptions& opts, const CriteriaCaps& caps) {
        Verdict v;
        if (asm_.equidimensional_B)
            v.assumptions_used.push_back("B equidimensional (asserted)");
        auto rel = relative(opts);
        auto pb = polar_B(opts);
        v.vectors.emplace_back("relative", rel);
        v.vectors.emplace_back("polar_B", pb);
        v.detail = "(c)-comparison m(A,B) vs m(B): " + rel.str() + " vs " + pb.str() +
                   (rel.values == pb.values ? " (equal; necessary for integrality)" : " (unequal)");

        auto cert = integral_certificate(caps.power_cap);
        auto st = stabilized_truncation(opts, caps.t_cap);
        if (st.vec)
            v.vectors.emplace_back("truncated_stable_t" + std::to_string(st.t), *st.vec);

        if (cert) {
            v.outcome = Verdict::Outcome::Holds;
            v.rule = "direct certificate: x_i^N in A_1 B_{N-1} for all generators (B_+ inside rad(A_+B))";
            v.certificate = cert;
            return v;
        }
        if (st.vec) {
            if (st.vec->values == rel.values) {
                if (asm_.equidimensional_B) {
                    v.outcome = Verdict::Outcome::Holds;
                    v.rule = "m(A,B) = m(G/B_tG) stabilized; (b) => (a) under asserted equidimensionality";
                } else {
                    v.outcome = Verdict::Outcome::Inconclusive;
                    v.rule = "equality (b) observed; (b) => (a) needs B equidimensional, which was not asserted";
                }
            } else {
                v.outcome = Verdict::Outcome::Fails;
                v.rule = "m(A,B) != m(G/B_tG) at stabilized t; contrapositive of (a) => (b), no assumptions needed";
            }
            return v;
        }
        v.outcome = Verdict::Outcome::Inconclusive;
        v.rule = "truncated vectors did not stabilize within t_cap";
        return v;
    }

    Verdict check_birational(const Assumptions& asm_, const FitOptions& opts, const CriteriaCaps& caps) {
        (void)caps;
        Verdict v;
        if (asm_.equidimensional_B)
            v.assumptions_used.push_back("B equidimensional (asserted)");
        auto rel = relative(opts);
        auto img = image(opts);
        v.vectors.emplace_back("relative", rel);
        v.vectors.emplace_back("polar_A_image", img);
        if (rel.values != img.values) {
            v.outcome = Verdict::Outcome::Fails;
            v.rule = "m(A,B) != m(A); contrapositive of thm_criteria(iv) forward direction, no assumptions needed";
        } else if (asm_.equidimensional_B) {
            v.outcome = Verdict::Outcome::Holds;
            v.rule = "m(A,B) = m(A); converse of thm_criteria(iv) under asserted equidimensionality";
        } else {
            v.outcome = Verdict::Outcome::Inconclusive;
            v.rule = "m(A,B) = m(A) observed; the converse needs B equidimensional, which was not asserted";
        }
        return v;
    }

  private:
    const F& f_;
    Budget* budget_;
    std::vector<GradedPoly<F>> a_forms_;
    std::vector<GradedPoly<F>> b_forms_;
    std::unique_ptr<ModulePieces<F>> host_;
    std::unique_ptr<Filtration<F>> filt_;
    std::unique_ptr<Filtration<F>> b_filt_; // Rees flavor: filtration generated by B's forms
    std::optional<PolarVector> polar_b_;
    std::optional<int> rees_r_override_;
    bool rees_ = false;
    int obs_deg_ = 1;
};

// thm_reduction_ideals: I ⊆ J ideals generated by degree-1 elements, acting on M.
template <class F>
class IdealPairEngine {
  public:
    IdealPairEngine(const F& f, TypedModule<F> mod, TypedSubalgebra<F> ideal_i, TypedSubalgebra<F> ideal_j,
                    Budget* budget = nullptr)
        : f_(f), budget_(budget) {
        mod.validate();
        ideal_i.validate();
        ideal_j.validate();
        i_forms_ = ideal_i.gens;
        j_forms_ = ideal_j.gens;
        host_ = std::make_unique<ModulePieces<F>>(f_, std::move(mod), budget_);
        algebra_host_ = std::make_unique<ModulePieces<F>>(
            f_, TypedModule<F>::free_rank_one(host_->presentation().algebra), budget_);
        filt_i_ = std::make_unique<Filtration<F>>(*host_, i_forms_);
        filt_j_ = std::make_unique<Filtration<F>>(*host_, j_forms_);
        j_on_b_ = std::make_unique<Filtration<F>>(*algebra_host_, j_forms_);
        obs_deg_ = detail::observed_degree(host_->presentation());
        check_containment();
    }

    ModulePieces<F>& host() { return *host_; }
    Filtration<F>& filtration_I() { return *filt_i_; }
    Filtration<F>& filtration_J() { return *filt_j_; }

    FitOptions tuned(FitOptions opts) const {
        opts.observed_degree = std::max(opts.observed_degree, obs_deg_);
        return opts;
    }

    PolarVector polar_I(const FitOptions& opts) {
        return polar_wrt_linear_ideal(*filt_i_, polar_M(opts).r, tuned(opts));
    }
    PolarVector polar_J(const FitOptions& opts) {
        return polar_wrt_linear_ideal(*filt_j_, polar_M(opts).r, tuned(opts));
    }
    const PolarVector& polar_M(const FitOptions& opts) {
        if (!polar_m_)
            polar_m_ = polar_vector(*host_, tuned(opts));
        return *polar_m_;
    }

    // I * J^k M = J^{k+1} M, checked degreewise up to the generation bound
    std::optional<int> reduction_certificate(int scan_cap) {
        ModOrder top;
        int max_shift = 0;
        for (int sh : host_->presentation().shifts)
            max_shift = std::max(max_shift, sh);
        for (int k = 0; k <= scan_cap; ++k) {
            bool all = true;
            int vbound = max_shift + k + 1;
            for (int v = 0; v <= vbound && all; ++v) {
                // gens of I * J^k M in degree v
                std::vector<VecPoly<F>> mixed;
                if (v >= 1)
                    for (const auto& g : i_forms_)
                        for (const auto& w : filt_j_->power_gens(k, v - 1)) {
                            auto prod = host_->step_by_form(g, w, v);
                            if (!prod.is_zero())
                                mixed.push_back(std::move(prod));
                        }
                for (const auto& b : host_->relation_basis(v))
                    mixed.push_back(b);
                auto basis = gb::buchberger(f_, std::move(mixed), top, budget_);
                for (const auto& g : filt_j_->power_gens(k + 1, v))
                    if (!gb::reduce_full(f_, g, basis, top, budget_).is_zero()) {
                        all = false;
                        break;
                    }
            }
            if (all)
                return k;
        }
        return std::nullopt;
    }

    Verdict check_reduction(const FitOptions& opts, const CriteriaCaps& caps) {
        Verdict v;
        auto pi = polar_I(opts);
        auto pj = polar_J(opts);
        v.vectors.emplace_back("polar_I_M", pi);
        v.vectors.emplace_back("polar_J_M", pj);
        auto cert = reduction_certificate(caps.scan_cap);
        if (cert) {
            v.outcome = Verdict::Outcome::Holds;
            v.rule = "direct scan: I*J^k M = J^{k+1} M at k = " + std::to_string(*cert);
            v.certificate = cert;
            return v;
        }
        if (pi.values != pj.values) {
            v.outcome = Verdict::Outcome::Fails;
            v.rule = "m(I,M) != m(J,M); contrapositive of thm_reduction_ideals, no assumptions needed";
            return v;
        }
        v.outcome = Verdict::Outcome::Inconclusive;
        v.rule = "vectors agree but no reduction exponent found within the scan cap; the theorem only states "
                 "the forward implication";
        return v;
    }

  private:
    void check_containment() {
        for (const auto& g : i_forms_) {
            auto col = algebra_host_->expand_in_frame(0, g, Mono(algebra_host_->m()), 1);
            VecPoly<F> w;
            if (col)
                w = vec_from_columns(f_, *col, ModOrder{});
            if (!j_on_b_->member(w, 1, 1))
                throw NotContained("an I generator does not lie in J");
        }
    }

    const F& f_;
    Budget* budget_;
    std::vector<GradedPoly<F>> i_forms_;
    std::vector<GradedPoly<F>> j_forms_;
    std::unique_ptr<ModulePieces<F>> host_;
    std::unique_ptr<ModulePieces<F>> algebra_host_;
    std::unique_ptr<Filtration<F>> filt_i_;
    std::unique_ptr<Filtration<F>> filt_j_;
    std::unique_ptr<Filtration<F>> j_on_b_;
    std::optional<PolarVector> polar_m_;
    int obs_deg_ = 1;
};

// §5: mixed Buchsbaum-Rim multiplicities of U ⊆ E ⊆ R^e via the SUV
// realization of the Rees algebras inside R[z_1..z_e].
template <class F>
class ModulePairEngine {
  public:
    ModulePairEngine(const F& f, std::vector<std::string> base_vars, TypedModulePair<F> pair,
                     Budget* budget = nullptr)
        : f_(f), budget_(budget), pair_(std::move(pair)) {
        validate_module_pair(f_, pair_, base_vars.size(), budget_);
        ring_.base_vars = std::move(base_vars);
        for (int i = 0; i < pair_.ambient_rank; ++i) {
            std::string name = "z" + std::to_string(i + 1);
            while (std::find(ring_.base_vars.begin(), ring_.base_vars.end(), name) != ring_.base_vars.end())
                name += "_";
            ring_.poly_vars.push_back(name);
        }
        ring_.validate();
        u_forms_ = make_forms(pair_.u_cols);
        e_forms_ = make_forms(pair_.e_cols);
        r_ = static_cast<int>(ring_.s()) + pair_.ambient_rank - 1;
        engine_ = std::make_unique<InclusionEngine<F>>(f_, ring_, u_forms_, e_forms_, budget_);
        engine_->set_rees_r(r_);
    }

    int r() const { return r_; }
    InclusionEngine<F>& inclusion() { return *engine_; }

    PolarVector br_E(const FitOptions& opts) { return engine_->polar_B(opts); }

    PolarVector br_U(const FitOptions& opts) {
        if (!u_engine_) {
            u_engine_ = std::make_unique<InclusionEngine<F>>(f_, ring_, u_forms_, u_forms_, budget_);
            u_engine_->set_rees_r(r_);
        }
        return u_engine_->polar_B(opts);
    }

    PolarVector br_relative(const FitOptions& opts) { return engine_->relative(opts); }

    // E^{v+1} = U E^v piece-for-piece; success at one v propagates upward
    std::optional<int> reduction_certificate(int scan_cap) {
        ModOrder top;
        auto& filt = engine_->filtration();
        for (int v = 0; v <= scan_cap; ++v) {
            auto basis = filt.power_basis(1, v + 1);
            bool ok = true;
            for (const auto& g : filt.power_gens(0, v + 1))
                if (!gb::reduce_full(f_, g, basis, top, budget_).is_zero()) {
                    ok = false;
                    break;
                }
            if (ok)
                return v;
        }
        return std::nullopt;
    }

    Verdict check_reduction(const FitOptions& opts, const CriteriaCaps& caps) {
        Verdict v;
        v.assumptions_used.push_back("R = kappa[u]_(u) equidimensional and universally catenary (by construction)");
        auto bre = br_E(opts);
        auto brue = br_relative(opts);
        v.vectors.emplace_back("br_U_E", brue);
        v.vectors.emplace_back("br_E", bre);
        auto cert = reduction_certificate(caps.scan_cap);
        if (cert)
            v.certificate = cert;
        if (brue.values == bre.values) {
            v.outcome = Verdict::Outcome::Holds;
            v.rule = "br_i(U,E) = br_i(E) for all i; thm_reduction_mod (b) => (a)";
            if (cert)
                v.detail = "direct scan certificate: E^{v+1} = U E^v at v = " + std::to_string(*cert);
        } else {
            v.outcome = Verdict::Outcome::Fails;
            v.rule = "br_i(U,E) != br_i(E); thm_reduction_mod (a) => (b) contrapositive";
            if (cert)
                v.detail = "WARNING: direct scan certified a reduction but the vectors differ";
        }
        return v;
    }

  private:
    std::vector<GradedPoly<F>> make_forms(const std::vector<std::vector<BasePoly<F>>>& cols) {
        std::vector<GradedPoly<F>> forms;
        for (const auto& c : cols) {
            GradedPoly<F> g;
            for (int i = 0; i < pair_.ambient_rank; ++i) {
                if (c[static_cast<std::size_t>(i)].is_zero())
                    continue;
                Mono zm(ring_.m());
                zm.e[static_cast<std::size_t>(i)] = 1;
                GradedPoly<F> term;
                term.terms.push_back(XTerm<F>{zm, c[static_cast<std::size_t>(i)]});
                g = xpoly_add(f_, g, term);
            }
            if (g.is_zero())
                throw InputError("module pair column is zero");
            forms.push_back(std::move(g));
        }
        return forms;
    }

    const F& f_;
    Budget* budget_;
    TypedModulePair<F> pair_;
    Ring ring_;
    std::vector<GradedPoly<F>> u_forms_;
    std::vector<GradedPoly<F>> e_forms_;
    int r_ = 0;
    std::unique_ptr<InclusionEngine<F>> engine_;
    std::unique_ptr<InclusionEngine<F>> u_engine_;
};

} // namespace polarmult
