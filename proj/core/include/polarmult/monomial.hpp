#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace polarmult {

// Exponent vector in a fixed number of variables. Used both for the base
// variables u_1..u_s and for the graded variables x_1..x_m.
struct Mono {
    std::vector<int> e;

    Mono() = default;
    explicit Mono(std::size_t nvars) : e(nvars, 0) {}
    explicit Mono(std::vector<int> exps) : e(std::move(exps)) {}

    int deg() const { return std::accumulate(e.begin(), e.end(), 0); }
    std::size_t nvars() const { return e.size(); }
    bool is_one() const {
        return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    }

    friend Mono operator*(const Mono& a, const Mono& b) {
        Mono r(a.e.size());
        for (std::size_t i = 0; i < a.e.size(); ++i)
            r.e[i] = a.e[i] + b.e[i];
        return r;
    }

    bool divides(const Mono& b) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > b.e[i])
                return false;
        return true;
    }
    // quotient b / *this, valid when divides(b)
    Mono quotient_into(const Mono& b) const {
        Mono r(e.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            r.e[i] = b.e[i] - e[i];
        return r;
    }
    static Mono lcm(const Mono& a, const Mono& b) {
        Mono r(a.e.size());
        for (std::size_t i = 0; i < a.e.size(); ++i)
            r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }

    bool operator==(const Mono& o) const { return e == o.e; }
    bool operator!=(const Mono& o) const { return e != o.e; }
};

// Graded reverse lexicographic: higher total degree wins; on equal degree the
// monomial whose last nonzero entry of the difference is negative wins.
inline int cmp_degrevlex(const Mono& a, const Mono& b) {
    int da = a.deg(), db = b.deg();
    if (da != db)
        return da < db ? -1 : 1;
    for (std::size_t i = a.e.size(); i-- > 0;) {
        int d = a.e[i] - b.e[i];
        if (d != 0)
            return d > 0 ? -1 : 1;
    }
    return 0;
}

inline bool degrevlex_less(const Mono& a, const Mono& b) { return cmp_degrevlex(a, b) < 0; }

// All monomials of exact degree d in nvars variables, degrevlex-descending.
inline std::vector<Mono> monomials_of_degree(std::size_t nvars, int d) {
    std::vector<Mono> out;
    if (d < 0)
        return out;
    if (nvars == 0) {
        if (d == 0)
            out.emplace_back(std::size_t{0});
        return out;
    }
    Mono cur(nvars);
    // depth-first over exponent choices
    auto rec = [&](auto&& self, std::size_t var, int rem) -> void {
        if (var + 1 == nvars) {
            cur.e[var] = rem;
            out.push_back(cur);
            return;
        }
        for (int k = rem; k >= 0; --k) {
            cur.e[var] = k;
            self(self, var + 1, rem - k);
        }
        cur.e[var] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), [](const Mono& a, const Mono& b) { return cmp_degrevlex(a, b) > 0; });
    return out;
}

// All monomials of degree <= n, ordered by (degree asc, degrevlex desc).
inline std::vector<Mono> monomials_up_to(std::size_t nvars, int n) {
    std::vector<Mono> out;
    for (int d = 0; d <= n; ++d) {
        auto layer = monomials_of_degree(nvars, d);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    if (nvars == 0 && n < 0)
        out.clear();
    return out;
}

inline std::string mono_str(const Mono& m, const std::vector<std::string>& names) {
    std::string s;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
        if (m.e[i] == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += names[i];
        if (m.e[i] > 1)
            s += "^" + std::to_string(m.e[i]);
    }
    return s.empty() ? "1" : s;
}

} // namespace polarmult
