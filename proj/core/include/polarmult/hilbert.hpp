#pragma once

#include <functional>
#include <string>
#include <vector>

#include "polarmult/errors.hpp"

namespace polarmult {

// Window of the bivariate Hilbert grid. The fit runs on the leading
// (w - margin)^2 subgrid; the trailing L-shaped band of width `margin` holds
// the verification values.
struct Window {
    int v0 = 4;
    int n0 = 4;
    int w = 8;
    int margin = 3;

    int fit_width() const { return w - margin; }
    int vmaxcell() const { return v0 + w - 1; }
    int nmaxcell() const { return n0 + w - 1; }
};

struct FitOptions {
    int vmax = 12;
    int nmax = 12;
    int w = 8;
    int margin = 3;
    int observed_degree = 0; // max x-degree seen in the input presentation
    int v0_override = -1;
    int n0_override = -1;

    Window initial_window() const {
        Window win;
        win.v0 = v0_override >= 0 ? v0_override : std::max(4, observed_degree + 2);
        win.n0 = n0_override >= 0 ? n0_override : std::max(4, observed_degree + 2);
        win.w = w;
        win.margin = margin;
        return win;
    }
};

struct HilbertTable {
    Window win;
    std::vector<std::vector<long long>> grid; // grid[a][b] = H(v0+a, n0+b)
};

struct BivariateFit {
    int degree = -1; // total degree; -1 encodes the zero polynomial
    // c[i][j] = coefficient of binom(v - v0, i) * binom(n - n0, j)
    std::vector<std::vector<long long>> coeff;
    Window window;
    bool margin_verified = false;
    int growths = 0;

    long long eval(int v, int n) const {
        long long acc = 0;
        for (int i = 0; i < static_cast<int>(coeff.size()); ++i)
            for (int j = 0; j < static_cast<int>(coeff[static_cast<std::size_t>(i)].size()); ++j) {
                long long ci = coeff[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (ci == 0)
                    continue;
                acc += ci * binom(v - window.v0, i) * binom(n - window.n0, j);
            }
        return acc;
    }

    // e(i, j) = i! j! [v^i n^j] of the degree-r part; in the binomial basis this
    // is just the top difference coefficient.
    long long mixed_coefficient(int i, int j) const {
        if (degree < 0 || i + j != degree)
            return 0;
        if (i >= static_cast<int>(coeff.size()) || j >= static_cast<int>(coeff[static_cast<std::size_t>(i)].size()))
            return 0;
        return coeff[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }

    static long long binom(long long a, int k) {
        if (k < 0)
            return 0;
        long long r = 1;
        for (int t = 0; t < k; ++t)
            r = r * (a - t) / (t + 1);
        return r;
    }
};

using CellFn = std::function<long long(int, int)>;

inline HilbertTable hilbert_table_from_cells(const CellFn& cell, const Window& win) {
    HilbertTable t;
    t.win = win;
    t.grid.assign(static_cast<std::size_t>(win.w), std::vector<long long>(static_cast<std::size_t>(win.w), 0));
    for (int a = 0; a < win.w; ++a)
        for (int b = 0; b < win.w; ++b) {
            long long h = cell(win.v0 + a, win.n0 + b);
            if (h < 0)
                throw Error("internal: negative Hilbert value");
            if (b > 0 && h < t.grid[static_cast<std::size_t>(a)][static_cast<std::size_t>(b - 1)])
                throw Error("internal: Hilbert function decreasing in n");
            t.grid[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = h;
        }
    return t;
}

enum class FitStatus { ok, capacity, mismatch };

struct FitAttempt {
    FitStatus status = FitStatus::mismatch;
    BivariateFit fit;
    std::string note;
};

// Exact interpolation by forward differences in the binomial basis. Declares
// the total degree as the largest order with a nonvanishing difference on the
// fit subgrid, requires all differences of the next order to vanish there, and
// verifies the interpolant on every cell of the stored w x w grid.
inline FitAttempt fit_bivariate(const HilbertTable& t) {
    const Window& win = t.win;
    const int w = win.w;
    const int W = win.fit_width();
    FitAttempt out;
    if (W < 2) {
        out.status = FitStatus::capacity;
        out.note = "fit width below 2";
        return out;
    }

    // diff[i][j][a][b] = Delta_v^i Delta_n^j H(v0+a, n0+b)
    std::vector<std::vector<std::vector<std::vector<long long>>>> diff(
        static_cast<std::size_t>(w), std::vector<std::vector<std::vector<long long>>>(static_cast<std::size_t>(w)));
    diff[0][0].assign(static_cast<std::size_t>(w), std::vector<long long>(static_cast<std::size_t>(w), 0));
    for (int a = 0; a < w; ++a)
        for (int b = 0; b < w; ++b)
            diff[0][0][static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                t.grid[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    for (int i = 0; i < w; ++i)
        for (int j = 0; j < w; ++j) {
            if (i == 0 && j == 0)
                continue;
            int rows = w - i, cols = w - j;
            if (rows <= 0 || cols <= 0)
                continue;
            diff[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].assign(
                static_cast<std::size_t>(rows), std::vector<long long>(static_cast<std::size_t>(cols), 0));
            for (int a = 0; a < rows; ++a)
                for (int b = 0; b < cols; ++b) {
                    long long v;
                    if (i > 0)
                        v = diff[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)][static_cast<std::size_t>(a + 1)]
                                [static_cast<std::size_t>(b)] -
                            diff[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)][static_cast<std::size_t>(a)]
                                [static_cast<std::size_t>(b)];
                    else
                        v = diff[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(a)]
                                [static_cast<std::size_t>(b + 1)] -
                            diff[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(a)]
                                [static_cast<std::size_t>(b)];
                    diff[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(a)]
                        [static_cast<std::size_t>(b)] = v;
                }
        }

    auto order_nonzero_on_subgrid = [&](int i, int j) {
        if (i > W - 1 || j > W - 1)
            return false;
        for (int a = 0; a + i <= W - 1; ++a)
            for (int b = 0; b + j <= W - 1; ++b)
                if (diff[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(a)]
                        [static_cast<std::size_t>(b)] != 0)
                    return true;
        return false;
    };

    int degree = -1;
    for (int i = 0; i <= W - 1; ++i)
        for (int j = 0; j <= W - 1; ++j)
            if (order_nonzero_on_subgrid(i, j))
                degree = std::max(degree, i + j);

    if (degree > W - 2) {
        out.status = FitStatus::capacity;
        out.note = "window too narrow for total degree " + std::to_string(degree);
        return out;
    }
    for (int i = 0; i <= std::min(W - 1, degree + 1); ++i) {
        int j = degree + 1 - i;
        if (j < 0 || j > W - 1)
            continue;
        if (order_nonzero_on_subgrid(i, j)) {
            out.status = FitStatus::mismatch;
            out.note = "differences of order " + std::to_string(degree + 1) + " do not vanish";
            return out;
        }
    }

    BivariateFit fit;
    fit.degree = degree;
    fit.window = win;
    if (degree >= 0) {
        fit.coeff.assign(static_cast<std::size_t>(degree) + 1,
                         std::vector<long long>(static_cast<std::size_t>(degree) + 1, 0));
        for (int i = 0; i <= degree; ++i)
            for (int j = 0; i + j <= degree; ++j)
                fit.coeff[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    diff[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][0][0];
    }
    for (int a = 0; a < w; ++a)
        for (int b = 0; b < w; ++b)
            if (fit.eval(win.v0 + a, win.n0 + b) != t.grid[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) {
                out.status = FitStatus::mismatch;
                out.note = "interpolant fails on the margin band";
                return out;
            }
    for (int i = 0; i <= degree; ++i)
        if (fit.mixed_coefficient(i, degree - i) < 0) {
            out.status = FitStatus::mismatch;
            out.note = "negative top coefficient (window before stabilization)";
            return out;
        }
    fit.margin_verified = true;
    out.status = FitStatus::ok;
    out.fit = std::move(fit);
    return out;
}

// Fill-and-fit with automatic window growth: origin doubling on instability,
// width growth when the degree hits the window capacity. Throws Unstable once
// the caps are exceeded.
inline BivariateFit fitted_cells(const CellFn& cell, const FitOptions& opts, const std::string& what) {
    Window win = opts.initial_window();
    int growths = 0;
    std::string last_note = "window caps too small for the initial window";
    for (;;) {
        if (win.vmaxcell() > opts.vmax || win.nmaxcell() > opts.nmax) {
            throw Unstable("unstable fit for " + what + ": " + last_note + " (needs v<=" +
                               std::to_string(win.vmaxcell()) + ", n<=" + std::to_string(win.nmaxcell()) +
                               ", caps vmax=" + std::to_string(opts.vmax) + ", nmax=" + std::to_string(opts.nmax) + ")",
                           win.v0, win.n0, win.w);
        }
        auto table = hilbert_table_from_cells(cell, win);
        auto attempt = fit_bivariate(table);
        if (attempt.status == FitStatus::ok) {
            attempt.fit.growths = growths;
            return attempt.fit;
        }
        last_note = attempt.note;
        ++growths;
        if (attempt.status == FitStatus::capacity)
            win.w += 4;
        else {
            win.v0 *= 2;
            win.n0 *= 2;
        }
    }
}

// ---- univariate fits ---------------------------------------------------------

struct UnivariateFit {
    int degree = -1;
    std::vector<long long> coeff; // binomial basis at origin
    int origin = 0;
    int w = 8;
    int margin = 3;

    long long eval(long long x) const {
        long long acc = 0;
        for (int i = 0; i < static_cast<int>(coeff.size()); ++i)
            acc += coeff[static_cast<std::size_t>(i)] * BivariateFit::binom(x - origin, i);
        return acc;
    }
};

using SeqFn = std::function<long long(int)>;

inline UnivariateFit fitted_sequence(const SeqFn& seq, int origin, int cap, int w, int margin,
                                     const std::string& what) {
    for (;;) {
        if (origin + w - 1 > cap)
            throw Unstable("unstable univariate fit for " + what, origin, origin, w);
        int W = w - margin;
        if (W < 2)
            throw Unstable("univariate window too narrow for " + what, origin, origin, w);
        std::vector<long long> vals(static_cast<std::size_t>(w));
        for (int a = 0; a < w; ++a)
            vals[static_cast<std::size_t>(a)] = seq(origin + a);
        // forward differences
        std::vector<std::vector<long long>> diff{vals};
        for (int o = 1; o < w; ++o) {
            std::vector<long long> next(static_cast<std::size_t>(w - o));
            for (int a = 0; a < w - o; ++a)
                next[static_cast<std::size_t>(a)] = diff[static_cast<std::size_t>(o - 1)][static_cast<std::size_t>(a + 1)] -
                                                    diff[static_cast<std::size_t>(o - 1)][static_cast<std::size_t>(a)];
            diff.push_back(std::move(next));
        }
        int degree = -1;
        for (int o = 0; o <= W - 1; ++o)
            for (int a = 0; a + o <= W - 1; ++a)
                if (diff[static_cast<std::size_t>(o)][static_cast<std::size_t>(a)] != 0)
                    degree = std::max(degree, o);
        bool ok = degree <= W - 2;
        if (ok && degree + 1 <= W - 1)
            for (int a = 0; ok && a + degree + 1 <= W - 1; ++a)
                if (diff[static_cast<std::size_t>(degree + 1)][static_cast<std::size_t>(a)] != 0)
                    ok = false;
        UnivariateFit fit;
        fit.degree = degree;
        fit.origin = origin;
        fit.w = w;
        fit.margin = margin;
        for (int o = 0; o <= degree; ++o)
            fit.coeff.push_back(diff[static_cast<std::size_t>(o)][0]);
        if (ok)
            for (int a = 0; a < w; ++a)
                if (fit.eval(origin + a) != vals[static_cast<std::size_t>(a)]) {
                    ok = false;
                    break;
                }
        if (ok)
            return fit;
        origin *= 2;
    }
}

// e_d from a length sequence: d! times the leading coefficient when the fitted
// degree equals d, zero when it is smaller, Unstable when it is larger.
inline long long univariate_multiplicity(const SeqFn& seq, int d, int origin, int cap, int w, int margin,
                                         const std::string& what) {
    auto fit = fitted_sequence(seq, origin, cap, w, margin, what);
    if (fit.degree > d)
        throw Unstable("sequence for " + what + " has degree " + std::to_string(fit.degree) +
                       " exceeding the prescribed dimension " + std::to_string(d));
    if (fit.degree < d)
        return 0;
    return fit.coeff[static_cast<std::size_t>(d)];
}

} // namespace polarmult
