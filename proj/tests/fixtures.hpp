#pragma once

// Shared fixture builders for the test suites.

#include <string>
#include <vector>

#include "polarmult/field.hpp"
#include "polarmult/parse.hpp"
#include "polarmult/pieces.hpp"
#include "polarmult/presentations.hpp"

namespace fixtures {

using namespace polarmult;

template <class F>
TypedAlgebra<F> algebra(const F& f, std::vector<std::string> uvars, std::vector<std::string> xvars,
                        const std::vector<std::string>& rels = {}) {
    TypedAlgebra<F> b;
    b.ring.base_vars = std::move(uvars);
    b.ring.poly_vars = std::move(xvars);
    PolyParser<F> parser(f, b.ring.base_vars, b.ring.poly_vars);
    for (const auto& r : rels)
        b.relations.push_back(parser.parse(r));
    b.validate();
    return b;
}

template <class F>
TypedModule<F> module_over(const F& f, TypedAlgebra<F> b, std::vector<int> shifts,
                           const std::vector<std::vector<std::string>>& columns = {}) {
    TypedModule<F> m;
    m.algebra = std::move(b);
    m.shifts = std::move(shifts);
    PolyParser<F> parser(f, m.algebra.ring.base_vars, m.algebra.ring.poly_vars);
    for (const auto& col : columns) {
        std::vector<GradedPoly<F>> c;
        for (const auto& e : col)
            c.push_back(parser.parse(e));
        m.columns.push_back(std::move(c));
    }
    m.validate();
    return m;
}

template <class F>
GradedPoly<F> xp(const F& f, const TypedAlgebra<F>& b, const std::string& src) {
    PolyParser<F> parser(f, b.ring.base_vars, b.ring.poly_vars);
    return parser.parse(src);
}

template <class F>
std::vector<GradedPoly<F>> xps(const F& f, const TypedAlgebra<F>& b, const std::vector<std::string>& srcs) {
    std::vector<GradedPoly<F>> out;
    for (const auto& s : srcs)
        out.push_back(xp(f, b, s));
    return out;
}

} // namespace fixtures
