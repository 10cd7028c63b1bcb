#include "polarmult/runner.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "polarmult/bind.hpp"
#include "polarmult/criteria.hpp"
#include "polarmult/oracle.hpp"
#include "polarmult/svlength.hpp"

namespace polarmult {

using json = nlohmann::ordered_json;

namespace {

json vector_json(const PolarVector& pv) { return json(pv.values); }

json window_json(const Window& w) {
    json j;
    j["v0"] = w.v0;
    j["n0"] = w.n0;
    j["w"] = w.w;
    j["margin"] = w.margin;
    return j;
}

json verdict_json(const Verdict& v) {
    json j;
    j["outcome"] = Verdict::outcome_str(v.outcome);
    j["rule"] = v.rule;
    if (v.certificate)
        j["certificate"] = *v.certificate;
    if (!v.detail.empty())
        j["detail"] = v.detail;
    return j;
}

FitOptions fit_options(const ProblemDescription& p) {
    FitOptions o;
    o.vmax = p.options.vmax;
    o.nmax = p.options.nmax;
    o.margin = p.options.margin;
    return o;
}

CriteriaCaps criteria_caps(const ProblemDescription& p) {
    CriteriaCaps c;
    c.t_cap = p.options.t_cap;
    c.power_cap = p.options.n_power_cap;
    c.scan_cap = p.options.n_power_cap;
    return c;
}

struct CommandOutput {
    json report = json::object();
    int exit_code = 0;
};

template <class F>
CommandOutput exec_command(const F& f, const std::string& cmd, const ProblemDescription& p) {
    CommandOutput out;
    json& rep = out.report;
    rep["command"] = cmd;
    Budget budget(p.options.budget);
    FitOptions opts = fit_options(p);
    CriteriaCaps caps = criteria_caps(p);
    Assumptions asum{p.assumptions.equidimensional_B};

    json vectors = json::object();
    std::optional<int> r_out;
    std::optional<Window> window;
    bool margin_ok = true;
    std::vector<std::uint64_t> seeds{p.options.seed};
    std::optional<Verdict> verdict;
    json extra = json::object();

    auto note_vec = [&](const std::string& name, const PolarVector& pv) {
        vectors[name] = vector_json(pv);
        if (!window) {
            window = pv.window;
            margin_ok = pv.margin_verified;
        }
    };

    auto bound = bind_problem(f, p);

    if (cmd == "polar") {
        ModulePieces<F> mp(f, bound.module, &budget);
        opts.observed_degree = detail::observed_degree(bound.module);
        auto pv = polar_vector(mp, opts);
        r_out = pv.r;
        note_vec("polar", pv);
    } else if (cmd == "polar-ideal") {
        if (!bound.ideal_I)
            throw InputError("polar-ideal needs ideal_gens.I");
        ModulePieces<F> mp(f, bound.module, &budget);
        opts.observed_degree = detail::observed_degree(bound.module);
        Filtration<F> filt(mp, bound.ideal_I->gens);
        auto pm = polar_vector(mp, opts);
        auto pi = polar_wrt_linear_ideal(filt, pm.r, opts);
        r_out = pm.r;
        note_vec("polar_ideal", pi);
        note_vec("polar_module", pm);
    } else if (cmd == "relative") {
        if (!bound.subalgebra)
            throw InputError("relative needs subalgebra_gens");
        InclusionEngine<F> eng(f, bound.algebra, *bound.subalgebra, &budget);
        auto pb = eng.polar_B(opts);
        auto rel = eng.relative(opts);
        r_out = pb.r;
        note_vec("relative", rel);
        note_vec("polar_B", pb);
    } else if (cmd == "check-integral" || cmd == "check-birational") {
        if (!bound.subalgebra)
            throw InputError(cmd + " needs subalgebra_gens");
        InclusionEngine<F> eng(f, bound.algebra, *bound.subalgebra, &budget);
        verdict = cmd == "check-integral" ? eng.check_integral(asum, opts, caps)
                                          : eng.check_birational(asum, opts, caps);
        r_out = eng.polar_B(opts).r;
        for (const auto& [name, pv] : verdict->vectors)
            note_vec(name, pv);
    } else if (cmd == "check-reduction-ideal") {
        if (!bound.ideal_I || !bound.ideal_J)
            throw InputError("check-reduction-ideal needs ideal_gens.I and ideal_gens.J");
        IdealPairEngine<F> eng(f, bound.module, *bound.ideal_I, *bound.ideal_J, &budget);
        verdict = eng.check_reduction(opts, caps);
        r_out = eng.polar_M(opts).r;
        for (const auto& [name, pv] : verdict->vectors)
            note_vec(name, pv);
    } else if (cmd == "br") {
        if (!bound.pair)
            throw InputError("br needs module_pair");
        ModulePairEngine<F> eng(f, p.base_vars, *bound.pair, &budget);
        auto bre = eng.br_E(opts);
        r_out = eng.r();
        note_vec("br_E", bre);
        if (!bound.pair->u_cols.empty())
            note_vec("br_U", eng.br_U(opts));
        extra["note"] = "br_U vs br_E carries no verdict (open question in the source theory)";
    } else if (cmd == "check-reduction-module") {
        if (!bound.pair)
            throw InputError("check-reduction-module needs module_pair");
        ModulePairEngine<F> eng(f, p.base_vars, *bound.pair, &budget);
        verdict = eng.check_reduction(opts, caps);
        r_out = eng.r();
        for (const auto& [name, pv] : verdict->vectors)
            note_vec(name, pv);
    } else if (cmd == "sv") {
        ModulePieces<F> mp(f, bound.module, &budget);
        opts.observed_degree = detail::observed_degree(bound.module);
        seeds = {p.options.seed, p.options.seed + 1, p.options.seed + 2};
        auto cv = cross_validate(mp, seeds, opts);
        r_out = cv.hilbert.r;
        note_vec("hilbert", cv.hilbert);
        json runs = json::array();
        for (const auto& run : cv.runs) {
            json rj;
            rj["seed"] = run.seed;
            rj["vector"] = vector_json(run.sv);
            rj["agrees"] = run.agrees;
            runs.push_back(rj);
        }
        extra["sv_runs"] = runs;
        extra["all_agree"] = cv.all_agree;
    } else if (cmd == "selftest") {
        // small fixed sanity suite; details in the test trees
        json checks = json::array();
        bool all = true;
        auto check = [&](const std::string& name, bool ok) {
            json c;
            c["name"] = name;
            c["ok"] = ok;
            checks.push_back(c);
            all = all && ok;
        };
        {
            ProblemDescription q;
            q.base_vars = {"u"};
            q.poly_vars = {"x"};
            auto bq = bind_problem(f, q);
            ModulePieces<F> mp(f, bq.module, &budget);
            auto pv = polar_vector(mp, opts);
            check("polar(R[x]) = (0,1)", pv.values == std::vector<long long>{0, 1});
            check("oracle cell match", oracle::brute_hilbert(f, bq.module, 5, 2) == mp.cell(5, 2));
        }
        {
            ProblemDescription q;
            q.base_vars = {"u"};
            q.poly_vars = {"x"};
            q.subalgebra_gens = {"u*x"};
            auto bq = bind_problem(f, q);
            InclusionEngine<F> eng(f, bq.algebra, *bq.subalgebra, &budget);
            auto rel = eng.relative(opts);
            check("relative({u*x}, R[x]) = (1,1)", rel.values == std::vector<long long>{1, 1});
            auto v = eng.check_integral(asum, opts, caps);
            check("check-integral({u*x}, R[x]) Fails", v.outcome == Verdict::Outcome::Fails);
        }
        extra["checks"] = checks;
        if (!all)
            out.exit_code = 1;
    } else {
        throw InputError("unknown command '" + cmd + "'");
    }

    rep["r"] = r_out ? json(*r_out) : json(nullptr);
    rep["vectors"] = vectors;
    if (verdict) {
        rep["verdict"] = verdict_json(*verdict);
        if (verdict->outcome == Verdict::Outcome::Inconclusive)
            out.exit_code = 1;
    } else {
        rep["verdict"] = nullptr;
    }
    json assumptions = json::array();
    if (verdict)
        for (const auto& a : verdict->assumptions_used)
            assumptions.push_back(a);
    else if (p.assumptions.equidimensional_B)
        assumptions.push_back("B equidimensional (asserted)");
    rep["assumptions_used"] = assumptions;
    rep["window"] = window ? window_json(*window) : json(nullptr);
    rep["margin_verified"] = margin_ok;
    rep["seeds"] = seeds;
    for (auto& [k, v] : extra.items())
        rep[k] = v;
    return out;
}

std::string human_summary(const json& rep) {
    std::ostringstream os;
    os << "command: " << rep.value("command", std::string{}) << "\n";
    if (rep.contains("error")) {
        os << "error: " << rep["error"].value("message", std::string{}) << "\n";
        return os.str();
    }
    if (rep.contains("r") && !rep["r"].is_null())
        os << "r: " << rep["r"].dump() << "\n";
    if (rep.contains("vectors"))
        for (auto& [name, vec] : rep["vectors"].items())
            os << name << ": " << vec.dump() << "\n";
    if (rep.contains("verdict") && !rep["verdict"].is_null()) {
        os << "verdict: " << rep["verdict"].value("outcome", std::string{}) << "\n";
        os << "rule: " << rep["verdict"].value("rule", std::string{}) << "\n";
    }
    if (rep.contains("all_agree"))
        os << "two-route agreement: " << (rep["all_agree"].get<bool>() ? "yes" : "NO") << "\n";
    if (rep.contains("checks"))
        for (auto& c : rep["checks"])
            os << (c["ok"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>() << "\n";
    return os.str();
}

} // namespace

RunResult run_command(const std::string& command, const ProblemDescription& problem, bool with_timings) {
    RunResult res;
    auto t0 = std::chrono::steady_clock::now();
    json rep;
    try {
        CommandOutput out;
        if (problem.field.kind == FieldDescriptor::Kind::prime) {
            PrimeField f(problem.field.characteristic);
            out = exec_command(f, command, problem);
        } else {
            RationalField f;
            out = exec_command(f, command, problem);
        }
        rep = std::move(out.report);
        res.exit_code = out.exit_code;
    } catch (const BudgetExceeded& e) {
        rep["command"] = command;
        rep["error"] = {{"type", "BudgetExceeded"}, {"message", e.what()}};
        res.exit_code = 3;
    } catch (const Unstable& e) {
        rep["command"] = command;
        rep["error"] = {{"type", "Unstable"}, {"message", e.what()}};
        if (e.suggest_w > 0)
            rep["error"]["suggested_window"] = {{"v0", e.suggest_v0}, {"n0", e.suggest_n0}, {"w", e.suggest_w}};
        res.exit_code = 1;
    } catch (const GenericityFailure& e) {
        rep["command"] = command;
        rep["error"] = {{"type", "GenericityFailure"}, {"message", e.what()}};
        res.exit_code = 1;
    } catch (const ParseError& e) {
        rep["command"] = command;
        rep["error"] = {{"type", "ParseError"}, {"message", e.what()}, {"line", e.line}, {"col", e.col},
                        {"token", e.token}};
        res.exit_code = 2;
    } catch (const InputError& e) {
        rep["command"] = command;
        rep["error"] = {{"type", "InputError"}, {"message", e.what()}};
        res.exit_code = 2;
    } catch (const Error& e) {
        rep["command"] = command;
        rep["error"] = {{"type", "Error"}, {"message", e.what()}};
        res.exit_code = 2;
    }

    if (with_timings) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
        rep["timings"] = {{"total_ms", ms.count()}};
    }
    rep["input_echo"] = json::parse(problem_to_json(problem));
    res.json_report = rep.dump(2) + "\n";
    res.human = human_summary(rep);
    return res;
}

} // namespace polarmult
