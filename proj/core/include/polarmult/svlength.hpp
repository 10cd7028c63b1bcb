#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polarmult/polar.hpp"

namespace polarmult {

// A seeded sequence of general elements of m = (u_1..u_s), each a kappa-linear
// combination with small integer coefficients.
template <class F>
struct GeneralSequence {
    std::uint64_t seed = 0;
    std::vector<std::vector<int>> coefficients;
    std::vector<BasePoly<F>> elements;
};

template <class F>
GeneralSequence<F> sample_general(const F& f, std::size_t s, std::uint64_t seed, int count) {
    if (s == 0)
        throw NoBaseVariables("general elements of m require at least one base variable");
    GeneralSequence<F> seq;
    seq.seed = seed;
    GeneralRng rng(seed);
    for (int t = 0; t < count; ++t) {
        auto c = rng.nonzero_tuple(s);
        BasePoly<F> x;
        for (std::size_t i = 0; i < s; ++i) {
            if (c[i] == 0)
                continue;
            Mono m(s);
            m.e[i] = 1;
            x = poly_add(f, x, BasePoly<F>::term(f, m, f.from_int(c[i])));
        }
        seq.coefficients.push_back(std::move(c));
        seq.elements.push_back(std::move(x));
    }
    return seq;
}

// Degreewise presentation of the chain module
//   Q_i = M / ((x_1..x_{i-1})M :_M m^infty + x_i M),
// with Q_0 = M (the convention N_{-1} = 0, x_0 = 0).
template <class F>
class ChainStage {
  public:
    ChainStage(ModulePieces<F>& host, const GeneralSequence<F>& seq, int i)
        : host_(host), f_(host.field()), seq_(seq), index_(i) {}

    int index() const { return index_; }

    PieceModule<F> piece(int v) {
        PieceModule<F> p = host_.piece(v);
        if (index_ == 0)
            return p;
        // saturation of (x_1..x_{i-1}) M_v
        std::vector<VecPoly<F>> gens;
        for (int j = 0; j < index_ - 1; ++j)
            append_multiples(gens, seq_.elements[static_cast<std::size_t>(j)], v);
        auto sat = saturate_irrelevant<F>(f_, gens, p, host_.budget());
        for (const auto& g : sat)
            p.relations.push_back(vec_to_columns(g, p.rank));
        // plus x_i M_v
        std::vector<VecPoly<F>> xi;
        append_multiples(xi, seq_.elements[static_cast<std::size_t>(index_ - 1)], v);
        for (const auto& g : xi)
            p.relations.push_back(vec_to_columns(g, p.rank));
        return p;
    }

  private:
    void append_multiples(std::vector<VecPoly<F>>& out, const BasePoly<F>& x, int v) {
        int rank = static_cast<int>(host_.frame(v).size());
        for (int l = 0; l < rank; ++l) {
            VecPoly<F> g;
            for (const auto& [m, c] : x.terms)
                g.terms.push_back(ModTerm<F>{m, l, c});
            if (!g.is_zero())
                out.push_back(std::move(g));
        }
    }

    ModulePieces<F>& host_;
    const F& f_;
    const GeneralSequence<F>& seq_;
    int index_;
};

// Length-formula vector for one fixed general sequence: m^i = j_{r-i+1}(Q_i).
template <class F>
PolarVector sv_vector_raw(ModulePieces<F>& mp, const GeneralSequence<F>& seq, int r, const FitOptions& opts) {
    PolarVector out;
    out.r = r;
    out.route = "sv-route";
    out.values.assign(static_cast<std::size_t>(r) + 1, 0);
    for (int i = 0; i <= r; ++i) {
        ChainStage<F> stage(mp, seq, i);
        out.values[static_cast<std::size_t>(i)] =
            j_multiplicity<F>(mp.field(), [&](int v) { return stage.piece(v); }, r - i + 1, opts, mp.budget());
    }
    return out;
}

struct SvOutcome {
    PolarVector vector;
    std::uint64_t seed_used = 0;
    int resamples = 0;
    bool delegated = false; // s = 0: no general elements exist, hilbert route reused
};

// The sv-route vector, cross-checked against the hilbert-route vector and
// resampled on disagreement (detection-based genericity).
template <class F>
SvOutcome length_formula_vector(ModulePieces<F>& mp, std::uint64_t seed, const PolarVector& hilbert_vec,
                                const FitOptions& opts, int max_resample = 5) {
    SvOutcome out;
    if (mp.s() == 0) {
        out.vector = hilbert_vec;
        out.vector.route = "sv-route (delegated: m = 0)";
        out.delegated = true;
        out.seed_used = seed;
        return out;
    }
    std::uint64_t cur = seed;
    for (int attempt = 0; attempt < max_resample; ++attempt) {
        auto seq = sample_general(mp.field(), mp.s(), cur, hilbert_vec.r);
        auto vec = sv_vector_raw(mp, seq, hilbert_vec.r, opts);
        if (vec.values == hilbert_vec.values) {
            out.vector = vec;
            out.seed_used = cur;
            out.resamples = attempt;
            return out;
        }
        cur = cur * 6364136223846793005ULL + 1442695040888963407ULL; // fresh derived seed
    }
    throw GenericityFailure("sv-route vector disagreed with the hilbert route for " + std::to_string(max_resample) +
                            " seeds");
}

struct CrossValidation {
    struct PerSeed {
        std::uint64_t seed;
        PolarVector sv;
        bool agrees;
    };
    PolarVector hilbert;
    std::vector<PerSeed> runs;
    bool all_agree = true;
};

// Per-seed comparison of the two routes (raw, no resampling): the executable
// content of the deformation-to-the-normal-cone equality at degree level.
template <class F>
CrossValidation cross_validate(ModulePieces<F>& mp, const std::vector<std::uint64_t>& seeds, const FitOptions& opts) {
    CrossValidation cv;
    cv.hilbert = polar_vector(mp, opts);
    for (auto seed : seeds) {
        if (mp.s() == 0) {
            cv.runs.push_back({seed, cv.hilbert, true});
            continue;
        }
        auto seq = sample_general(mp.field(), mp.s(), seed, cv.hilbert.r);
        auto sv = sv_vector_raw(mp, seq, cv.hilbert.r, opts);
        bool ok = sv.values == cv.hilbert.values;
        cv.all_agree = cv.all_agree && ok;
        cv.runs.push_back({seed, std::move(sv), ok});
    }
    return cv;
}

} // namespace polarmult
