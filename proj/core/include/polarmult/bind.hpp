#pragma once

#include "polarmult/parse.hpp"
#include "polarmult/presentations.hpp"
#include "polarmult/problem.hpp"

namespace polarmult {

// Typed view of a problem: everything parsed and validated over a bound field.
template <class F>
struct BoundProblem {
    Ring ring;
    TypedAlgebra<F> algebra;
    TypedModule<F> module; // the given module, or B itself when none was given
    bool module_given = false;
    std::optional<TypedSubalgebra<F>> subalgebra;
    std::optional<TypedSubalgebra<F>> ideal_I;
    std::optional<TypedSubalgebra<F>> ideal_J;
    std::optional<TypedModulePair<F>> pair;
};

template <class F>
BoundProblem<F> bind_problem(const F& f, const ProblemDescription& p) {
    BoundProblem<F> b;
    b.ring.base_vars = p.base_vars;
    b.ring.poly_vars = p.poly_vars;
    b.ring.validate();
    PolyParser<F> parser(f, p.base_vars, p.poly_vars);

    b.algebra.ring = b.ring;
    for (const auto& r : p.relations) {
        auto rel = parser.parse(r);
        if (rel.is_zero())
            throw InputError("zero relation '" + r + "'");
        b.algebra.relations.push_back(std::move(rel));
    }
    b.algebra.validate();

    if (p.module) {
        b.module.algebra = b.algebra;
        b.module.shifts = p.module->shifts;
        for (const auto& col : p.module->columns) {
            std::vector<GradedPoly<F>> c;
            for (const auto& e : col)
                c.push_back(parser.parse(e));
            b.module.columns.push_back(std::move(c));
        }
        b.module.validate();
        b.module_given = true;
    } else {
        b.module = TypedModule<F>::free_rank_one(b.algebra);
    }

    if (!p.subalgebra_gens.empty()) {
        TypedSubalgebra<F> a;
        for (const auto& g : p.subalgebra_gens)
            a.gens.push_back(parser.parse(g));
        a.validate();
        b.subalgebra = std::move(a);
    }

    if (p.ideal_gens) {
        TypedSubalgebra<F> i, j;
        for (const auto& g : p.ideal_gens->I)
            i.gens.push_back(parser.parse(g));
        for (const auto& g : p.ideal_gens->J)
            j.gens.push_back(parser.parse(g));
        i.validate();
        j.validate();
        b.ideal_I = std::move(i);
        b.ideal_J = std::move(j);
    }

    if (p.module_pair) {
        TypedModulePair<F> mp;
        mp.ambient_rank = p.module_pair->ambient_rank;
        PolyParser<F> base_parser(f, p.base_vars, {});
        for (const auto& col : p.module_pair->U) {
            std::vector<BasePoly<F>> c;
            for (const auto& e : col)
                c.push_back(base_parser.parse_base(e));
            mp.u_cols.push_back(std::move(c));
        }
        for (const auto& col : p.module_pair->E) {
            std::vector<BasePoly<F>> c;
            for (const auto& e : col)
                c.push_back(base_parser.parse_base(e));
            mp.e_cols.push_back(std::move(c));
        }
        b.pair = std::move(mp);
    }
    return b;
}

} // namespace polarmult
