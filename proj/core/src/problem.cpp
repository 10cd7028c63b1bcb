#include "polarmult/problem.hpp"

#include <json.hpp>

namespace polarmult {

using json = nlohmann::ordered_json;

namespace {

std::vector<std::string> string_list(const json& j, const std::string& key) {
    std::vector<std::string> out;
    if (!j.contains(key))
        return out;
    if (!j.at(key).is_array())
        throw InputError("field '" + key + "' must be an array of strings");
    for (const auto& e : j.at(key)) {
        if (!e.is_string())
            throw InputError("field '" + key + "' must contain strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

std::vector<std::vector<std::string>> column_list(const json& j, const std::string& what) {
    std::vector<std::vector<std::string>> out;
    if (!j.is_array())
        throw InputError(what + " must be an array of columns");
    for (const auto& col : j) {
        if (!col.is_array())
            throw InputError(what + " columns must be arrays of strings");
        std::vector<std::string> c;
        for (const auto& e : col)
            c.push_back(e.get<std::string>());
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace

ProblemDescription problem_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("invalid JSON input: ") + e.what());
    }
    if (!j.is_object())
        throw InputError("input document must be a JSON object");

    ProblemDescription p;
    if (j.contains("field")) {
        const auto& fj = j.at("field");
        std::string kind = fj.value("kind", "rational");
        if (kind == "rational") {
            p.field.kind = FieldDescriptor::Kind::rational;
        } else if (kind == "prime") {
            p.field.kind = FieldDescriptor::Kind::prime;
            if (!fj.contains("characteristic"))
                throw InputError("prime field needs a 'characteristic'");
            p.field.characteristic = fj.at("characteristic").get<std::uint64_t>();
        } else {
            throw InputError("field kind must be 'rational' or 'prime'");
        }
    }
    p.field.validate();
    p.base_vars = string_list(j, "base_vars");
    p.poly_vars = string_list(j, "poly_vars");
    p.relations = string_list(j, "relations");

    if (j.contains("module")) {
        const auto& mj = j.at("module");
        ProblemDescription::ModuleDesc md;
        if (mj.contains("shifts"))
            for (const auto& e : mj.at("shifts"))
                md.shifts.push_back(e.get<int>());
        if (mj.contains("gens")) {
            int g = mj.at("gens").get<int>();
            if (md.shifts.empty())
                md.shifts.assign(static_cast<std::size_t>(g), 0);
            else if (g != static_cast<int>(md.shifts.size()))
                throw InputError("module 'gens' disagrees with the length of 'shifts'");
        }
        if (md.shifts.empty())
            throw InputError("module needs 'gens' or 'shifts'");
        if (mj.contains("columns"))
            md.columns = column_list(mj.at("columns"), "module relation");
        for (const auto& c : md.columns)
            if (c.size() != md.shifts.size())
                throw InputError("module relation column length must equal the generator count");
        p.module = std::move(md);
    }

    p.subalgebra_gens = string_list(j, "subalgebra_gens");

    if (j.contains("ideal_gens")) {
        const auto& ij = j.at("ideal_gens");
        ProblemDescription::IdealPairDesc ip;
        ip.I = string_list(ij, "I");
        ip.J = string_list(ij, "J");
        p.ideal_gens = std::move(ip);
    }

    if (j.contains("module_pair")) {
        const auto& pj = j.at("module_pair");
        ProblemDescription::ModulePairDesc mp;
        mp.ambient_rank = pj.value("ambient_rank", 1);
        if (pj.contains("U"))
            mp.U = column_list(pj.at("U"), "module pair U");
        if (pj.contains("E"))
            mp.E = column_list(pj.at("E"), "module pair E");
        for (const auto& cols : {&mp.U, &mp.E})
            for (const auto& c : *cols)
                if (static_cast<int>(c.size()) != mp.ambient_rank)
                    throw InputError("module pair column length must equal ambient_rank");
        p.module_pair = std::move(mp);
    }

    if (j.contains("assumptions"))
        p.assumptions.equidimensional_B = j.at("assumptions").value("equidimensional_B", false);

    if (j.contains("options")) {
        const auto& oj = j.at("options");
        p.options.vmax = oj.value("vmax", p.options.vmax);
        p.options.nmax = oj.value("nmax", p.options.nmax);
        p.options.margin = oj.value("margin", p.options.margin);
        p.options.seed = oj.value("seed", p.options.seed);
        p.options.t_cap = oj.value("t_cap", p.options.t_cap);
        p.options.n_power_cap = oj.value("n_power_cap", p.options.n_power_cap);
        p.options.budget = oj.value("budget", p.options.budget);
    }
    return p;
}

std::string problem_to_json(const ProblemDescription& p) {
    json j;
    j["field"] = json::object();
    j["field"]["kind"] = p.field.kind == FieldDescriptor::Kind::prime ? "prime" : "rational";
    if (p.field.kind == FieldDescriptor::Kind::prime)
        j["field"]["characteristic"] = p.field.characteristic;
    j["base_vars"] = p.base_vars;
    j["poly_vars"] = p.poly_vars;
    j["relations"] = p.relations;
    if (p.module) {
        j["module"] = json::object();
        j["module"]["gens"] = p.module->shifts.size();
        j["module"]["shifts"] = p.module->shifts;
        j["module"]["columns"] = p.module->columns;
    }
    if (!p.subalgebra_gens.empty())
        j["subalgebra_gens"] = p.subalgebra_gens;
    if (p.ideal_gens) {
        j["ideal_gens"] = json::object();
        j["ideal_gens"]["I"] = p.ideal_gens->I;
        j["ideal_gens"]["J"] = p.ideal_gens->J;
    }
    if (p.module_pair) {
        j["module_pair"] = json::object();
        j["module_pair"]["ambient_rank"] = p.module_pair->ambient_rank;
        j["module_pair"]["U"] = p.module_pair->U;
        j["module_pair"]["E"] = p.module_pair->E;
    }
    j["assumptions"] = json::object();
    j["assumptions"]["equidimensional_B"] = p.assumptions.equidimensional_B;
    j["options"] = json::object();
    j["options"]["vmax"] = p.options.vmax;
    j["options"]["nmax"] = p.options.nmax;
    j["options"]["margin"] = p.options.margin;
    j["options"]["seed"] = p.options.seed;
    j["options"]["t_cap"] = p.options.t_cap;
    j["options"]["n_power_cap"] = p.options.n_power_cap;
    j["options"]["budget"] = p.options.budget;
    return j.dump(2);
}

} // namespace polarmult
