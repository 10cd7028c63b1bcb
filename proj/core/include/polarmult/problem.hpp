#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polarmult/errors.hpp"
#include "polarmult/field.hpp"

namespace polarmult {

// String-level experiment description, the single input document of the CLI.
// Polynomials stay unparsed until a coefficient field is bound.
struct ProblemDescription {
    FieldDescriptor field;
    std::vector<std::string> base_vars;
    std::vector<std::string> poly_vars;
    std::vector<std::string> relations;

    struct ModuleDesc {
        std::vector<int> shifts;
        std::vector<std::vector<std::string>> columns; // each column: one entry per generator
        bool operator==(const ModuleDesc&) const = default;
    };
    std::optional<ModuleDesc> module;

    std::vector<std::string> subalgebra_gens;

    struct IdealPairDesc {
        std::vector<std::string> I;
        std::vector<std::string> J;
        bool operator==(const IdealPairDesc&) const = default;
    };
    std::optional<IdealPairDesc> ideal_gens;

    struct ModulePairDesc {
        int ambient_rank = 1;
        std::vector<std::vector<std::string>> U; // columns in kappa[u]^e
        std::vector<std::vector<std::string>> E;
        bool operator==(const ModulePairDesc&) const = default;
    };
    std::optional<ModulePairDesc> module_pair;

    struct AssumptionsDesc {
        bool equidimensional_B = false;
        bool operator==(const AssumptionsDesc&) const = default;
    };
    AssumptionsDesc assumptions;

    struct OptionsDesc {
        int vmax = 12;
        int nmax = 12;
        int margin = 3;
        std::uint64_t seed = 0;
        int t_cap = 10;
        int n_power_cap = 8;
        std::uint64_t budget = Budget::kDefaultLimit;
        bool operator==(const OptionsDesc&) const = default;
    };
    OptionsDesc options;

    bool operator==(const ProblemDescription& o) const {
        return field.kind == o.field.kind && field.characteristic == o.field.characteristic &&
               base_vars == o.base_vars && poly_vars == o.poly_vars && relations == o.relations &&
               module == o.module && subalgebra_gens == o.subalgebra_gens && ideal_gens == o.ideal_gens &&
               module_pair == o.module_pair && assumptions == o.assumptions && options == o.options;
    }
};

// JSON binding (implemented in problem.cpp). `problem_to_json` emits the
// canonical form whose re-parse is identical.
ProblemDescription problem_from_json(const std::string& text);
std::string problem_to_json(const ProblemDescription& p);

} // namespace polarmult
