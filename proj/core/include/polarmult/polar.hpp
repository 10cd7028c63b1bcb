#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "polarmult/hilbert.hpp"
#include "polarmult/pieces.hpp"

namespace polarmult {

// Polar multiplicity vector (m_r^0, ..., m_r^r) with fit diagnostics.
struct PolarVector {
    int r = 0;
    std::vector<long long> values;
    std::string route = "hilbert-fit"; // or "sv-route"
    Window window;
    bool margin_verified = false;
    int growths = 0;

    bool operator==(const PolarVector& o) const { return r == o.r && values == o.values; }
    bool entries_equal(const PolarVector& o) const { return r == o.r && values == o.values; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(values[i]);
        }
        return s + ")";
    }
};

// Fit the bivariate Hilbert function given by `cell` and read the polar vector
// off the top coefficients: m_r^i = e(r-i, i). With an override r exceeding the
// fit degree every degree-r coefficient vanishes and the vector is zero.
inline PolarVector polar_from_cells(const CellFn& cell, const FitOptions& opts, std::optional<int> r_override,
                                    const std::string& what) {
    auto fit = fitted_cells(cell, opts, what);
    PolarVector out;
    out.window = fit.window;
    out.margin_verified = fit.margin_verified;
    out.growths = fit.growths;
    if (fit.degree < 0 && !r_override)
        throw EmptySupport("module has empty projective support and no prescribed r: " + what);
    int r = r_override ? *r_override : fit.degree;
    if (fit.degree > r)
        throw Unstable("fit degree " + std::to_string(fit.degree) + " exceeds the prescribed r = " +
                       std::to_string(r) + " for " + what);
    out.r = r;
    out.values.assign(static_cast<std::size_t>(r) + 1, 0);
    if (fit.degree == r)
        for (int i = 0; i <= r; ++i)
            out.values[static_cast<std::size_t>(i)] = fit.mixed_coefficient(r - i, i);
    return out;
}

template <class F>
PolarVector polar_vector(ModulePieces<F>& mp, const FitOptions& opts, std::optional<int> r_override = std::nullopt) {
    return polar_from_cells([&](int v, int n) { return mp.cell(v, n); }, opts, r_override, "polar vector");
}

// m_r^i(I, M) via the graded pieces of gr_I(M); r comes from the host module.
template <class F>
PolarVector polar_wrt_linear_ideal(Filtration<F>& filt, int r, const FitOptions& opts) {
    return polar_from_cells([&](int v, int n) { return filt.gr_cell(v, n); }, opts, r, "polar vector of gr_I(M)");
}

template <class F>
PolarVector relative_polar(Filtration<F>& filt, int r, const FitOptions& opts) {
    return polar_from_cells([&](int v, int n) { return filt.gr_cell(v, n); }, opts, r, "relative polar vector");
}

template <class F>
PolarVector truncated_relative(Filtration<F>& filt, int t, int r, const FitOptions& opts) {
    if (t < 1)
        throw InputError("truncation level t must be >= 1");
    return polar_from_cells([&](int v, int n) { return filt.trunc_cell(t, v, n); }, opts, r,
                            "truncated relative polar vector (t=" + std::to_string(t) + ")");
}

// Polar vector of the image algebra of A inside B (pieces A_v B_0).
template <class F>
PolarVector image_polar(Filtration<F>& filt, int r, const FitOptions& opts) {
    return polar_from_cells([&](int v, int n) { return filt.image_cell(v, n); }, opts, r,
                            "polar vector of the image algebra");
}

// j_d(M) = e_d(H^0_m(M)): the degree-(d-1) normalized leading coefficient of
// v -> dim_kappa H^0_m(M)_v.
template <class F>
long long j_multiplicity(const F& f, const std::function<PieceModule<F>(int)>& piece_at, int d,
                         const FitOptions& opts, Budget* budget = nullptr) {
    if (d < 0)
        throw InvalidDepth("j-multiplicity dimension must be nonnegative");
    auto torsion_dim = [&](int v) -> long long {
        auto amb = piece_at(v);
        auto sat = saturate_irrelevant<F>(f, {}, amb, budget);
        auto pres = quotient_piece<F>(f, sat, {}, amb, budget);
        return torsion_total_dimension(f, pres, budget);
    };
    int origin = std::max(4, opts.observed_degree + 2);
    if (d == 0) {
        // e_0 is only defined through a zero-dimensional H^0; report 0 when the
        // sampled torsion vanishes identically
        for (int v = origin; v < origin + opts.w; ++v)
            if (torsion_dim(v) != 0)
                throw InvalidDepth("j_0 requested but H^0_m(M) is nonzero");
        return 0;
    }
    return univariate_multiplicity(torsion_dim, d - 1, origin, opts.vmax, opts.w, opts.margin, "j-multiplicity");
}

template <class F>
long long j_multiplicity(ModulePieces<F>& mp, int d, const FitOptions& opts) {
    return j_multiplicity<F>(mp.field(), [&](int v) { return mp.piece(v); }, d, opts, mp.budget());
}

// prop_gen_polar(ii): compares m_r^r with e_r(M_{v*}) for several large v*.
struct TopPolarReport {
    bool agrees = false;
    long long m_top = 0;
    std::vector<long long> sampled;
};

template <class F>
TopPolarReport top_polar_check(ModulePieces<F>& mp, const PolarVector& pv, const FitOptions& opts) {
    TopPolarReport rep;
    rep.m_top = pv.values.empty() ? 0 : pv.values.back();
    rep.agrees = true;
    int vstar0 = std::max(4, opts.observed_degree + 2) + opts.w - 1;
    for (int k = 0; k < 3; ++k) {
        int vstar = vstar0 + k;
        long long ed = univariate_multiplicity([&](int n) { return mp.cell(vstar, n); }, pv.r, 0, opts.nmax + opts.w,
                                               opts.w, opts.margin, "e_r(M_v)");
        rep.sampled.push_back(ed);
        if (ed != rep.m_top)
            rep.agrees = false;
    }
    return rep;
}

// Deterministic small-integer sampling shared by all "general element" draws.
class GeneralRng {
  public:
    explicit GeneralRng(std::uint64_t seed) : eng_(seed) {}
    int coefficient() { return static_cast<int>(eng_() % 35) - 17; }
    std::vector<int> nonzero_tuple(std::size_t n) {
        for (;;) {
            std::vector<int> c(n);
            bool any = false;
            for (auto& x : c) {
                x = coefficient();
                any = any || x != 0;
            }
            if (any)
                return c;
        }
    }

  private:
    std::mt19937_64 eng_;
};

struct GeneralCut {
    std::vector<int> coefficients; // y = sum c_i x_i
    PolarVector cut_vector;        // polar of M/yM at r-1
    bool matches = false;
    int resamples = 0;
};

// prop_gen_polar(iii): cut by a general y in B_1 and compare vectors.
template <class F>
GeneralCut general_linear_cut(ModulePieces<F>& mp, const PolarVector& pv, std::uint64_t seed, const FitOptions& opts,
                              int max_resample = 5) {
    if (pv.r == 0)
        throw InvalidDepth("general_linear_cut needs r >= 1 (no cut possible at r = 0)");
    const F& f = mp.field();
    const auto& ring = mp.presentation().algebra.ring;
    GeneralRng rng(seed);
    GeneralCut out;
    for (int attempt = 0; attempt < max_resample; ++attempt) {
        auto coeffs = rng.nonzero_tuple(ring.m());
        GradedPoly<F> y;
        for (std::size_t i = 0; i < ring.m(); ++i) {
            if (coeffs[i] == 0)
                continue;
            Mono xm(ring.m());
            xm.e[i] = 1;
            GradedPoly<F> term;
            term.terms.push_back(XTerm<F>{xm, BasePoly<F>::constant(f, f.from_int(coeffs[i]), ring.s())});
            y = xpoly_add(f, y, term);
        }
        auto quot = quotient_by_element(mp.presentation(), y);
        ModulePieces<F> cutp(f, quot, mp.budget());
        auto cut = polar_vector(cutp, opts, pv.r - 1);
        bool match = true;
        for (int i = 0; i <= pv.r - 1; ++i)
            if (cut.values[static_cast<std::size_t>(i)] != pv.values[static_cast<std::size_t>(i)])
                match = false;
        out.coefficients = coeffs;
        out.cut_vector = cut;
        out.matches = match;
        out.resamples = attempt;
        if (match)
            return out;
    }
    throw GenericityFailure("general linear cut disagreed with prop_gen_polar(iii) for " +
                            std::to_string(max_resample) + " independent samples");
}

} // namespace polarmult
