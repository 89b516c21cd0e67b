#include "camina/pipeline.hpp"

#include "camina/error.hpp"

#include <iomanip>
#include <sstream>

namespace camina {

const std::vector<std::string>& command_names()
{
    static const std::vector<std::string> names{"info",        "camina",      "scheme",     "ac-check",    "terwilliger",
                                                "idempotents", "wedderburn", "verify-all", "synth-class3"};
    return names;
}

FiniteGroup load_input(const std::string& input, std::uint64_t seed)
{
    const auto colon = input.find(':');
    if (colon == std::string::npos)
        throw ValidationError("input must be builtin:<spec> or table:<path>, got '" + input + "'");
    const std::string kind = input.substr(0, colon);
    const std::string rest = input.substr(colon + 1);
    if (kind == "builtin")
        return make_builtin(rest);
    if (kind == "table")
        return load_cayley_table_file(rest, seed);
    throw ValidationError("unknown input kind '" + kind + "'");
}

namespace {

struct Run {
    const RunConfig& cfg;
    Json& rep;
    std::ostringstream sum;
    bool failed = false;

    void line(const std::string& name, const std::string& value)
    {
        sum << std::left << std::setw(38) << name << value << "\n";
    }
    void flag(const std::string& name, bool ok)
    {
        line(name, ok ? "pass" : "FAIL");
        failed = failed || !ok;
    }
    void report(const std::string& title, const VerificationReport& r)
    {
        sum << title << "\n" << summary_table(r);
        failed = failed || !r.all_pass();
    }
};

bool profile_consistent(const CaminaProfile& p)
{
    if (!p.is_nonabelian_camina_p_group)
        return true;
    bool ok = p.center_in_derived && p.center_elementary_abelian;
    if (p.shapes_checked)
        ok = ok && p.outer_shape && p.middle_shape && p.inner_shape;
    if (p.nilpotency_class.value_or(0) == 3)
        ok = ok && p.n_param_valid;
    return ok;
}

void cmd_info(Run& r, const FiniteGroup& g)
{
    auto conj = conjugacy_classes(g);
    auto prof = camina_profile(g);
    r.rep["order"] = g.order();
    r.rep["class_sizes"] = class_sizes_json(conj);
    if (g.has_labels())
        r.rep["labels"] = g.labels();
    r.rep["center_order"] = prof.center_order;
    r.rep["derived_order"] = prof.derived_order;
    r.rep["profile"] = to_json(prof);
    r.rep["classification_family"] = to_string(classification_family(g));
    r.line("order", std::to_string(g.order()));
    r.line("classes", std::to_string(conj.size()));
    r.line("center / derived", std::to_string(prof.center_order) + " / " + std::to_string(prof.derived_order));
    r.line("family", to_string(classification_family(g)));
}

void cmd_camina(Run& r, const FiniteGroup& g)
{
    auto prof = camina_profile(g);
    r.rep["profile"] = to_json(prof);
    r.line("is_camina", prof.is_camina ? "true" : "false");
    r.line("nonabelian Camina p-group", prof.is_nonabelian_camina_p_group ? "true" : "false");
    r.flag("profile invariants", profile_consistent(prof));
    Subgroup d = derived_subgroup(g);
    if (d.size() > 1) {
        auto pair = is_camina_pair(g, d);
        r.rep["camina_pair_derived"] = to_json(pair);
        r.line("(G, G') Camina pair", pair.decision ? "true" : "false");
        r.flag("pair conditions agree", pair.agree());
    }
    if (prof.is_camina && d.size() > 1) {
        try {
            Json q = Json::array();
            bool all = true;
            for (const auto& nsub : normal_subgroups_within(g, d)) {
                if (nsub.size() == 1)
                    continue;
                bool c = is_camina(quotient(g, nsub).group);
                all = all && c;
                q.push_back(Json{{"normal_subgroup_order", nsub.size()}, {"quotient_is_camina", c}});
            }
            r.rep["quotient_closure"] = Json{{"checked", q}, {"all_camina", all}};
            r.flag("quotients by N <= G' are Camina", all);
        } catch (const ScopeError& e) {
            r.rep["quotient_closure"] = Json{{"skipped", e.what()}};
            r.line("quotients by N <= G' are Camina", "skipped");
        }
    }
}

void cmd_scheme(Run& r, const GroupScheme& s, bool check_classification)
{
    auto t = intersection_numbers(s);
    auto ac = is_almost_commutative(t);
    r.rep["scheme"] = scheme_json(s, t, ac);
    r.line("classes (d+1)", std::to_string(s.class_count()));
    r.line("nonzero triples", std::to_string(t.nonzero_triples()));
    r.line("almost commutative", ac.almost_commutative ? "true" : "false");
    if (check_classification) {
        AcFamily fam = classification_family(s.group);
        bool agrees = ac.almost_commutative == (fam != AcFamily::None);
        r.rep["classification_family"] = to_string(fam);
        r.rep["classification_agrees"] = agrees;
        r.line("classification family", to_string(fam));
        r.flag("classification agrees", agrees);
    }
}

TerwilligerContext scoped_context(const GroupScheme& s)
{
    auto ctx = TerwilligerContext::build(s);
    if (!ctx.camina_scope())
        throw ScopeError("command requires a nonabelian Camina p-group of nilpotency class 2 or 3");
    return ctx;
}

void cmd_terwilliger(Run& r, const TerwilligerContext& ctx)
{
    r.rep["p"] = ctx.prime();
    r.rep["k"] = ctx.k();
    r.rep["n"] = ctx.n_param();
    r.rep["nilpotency_class"] = ctx.nil_class();
    r.rep["ordering"] = ordering_json(ctx);
    const std::size_t triples = dim_by_triples(ctx);
    const std::size_t formula = ctx.nil_class() == 2 ? class2_dimension_formula(ctx.prime(), ctx.n_param(), ctx.k())
                                                     : class3_dimension_formula(ctx.prime(), ctx.n_param(), ctx.k());
    Json dims{{"triples", triples}, {"formula", formula}};
    r.line("dim T (triples)", std::to_string(triples));
    r.flag("dimension formula", triples == formula);
    const bool closure = r.cfg.closure == ClosureMode::Always ||
                         (r.cfg.closure == ClosureMode::Auto && ctx.size() <= WedderburnOptions{}.closure_order_limit);
    if (closure) {
        const std::size_t c = dim_by_closure(ctx);
        dims["closure"] = c;
        r.flag("closure dimension = triples", c == triples);
    } else {
        dims["closure"] = nullptr;
        r.line("closure dimension", "skipped");
    }
    r.rep["dimensions"] = dims;
    auto blocks = verify_block_lemmas(ctx);
    auto powers = verify_power_product_lemmas(ctx);
    auto kron = verify_kronecker_decompositions(ctx);
    r.rep["block_lemmas"] = to_json(blocks);
    r.rep["power_product_lemmas"] = to_json(powers);
    r.rep["kronecker"] = to_json(kron);
    r.report("block lemmas", blocks);
    r.report("power/product lemmas", powers);
    r.report("kronecker forms", kron);
}

WedderburnOptions options(const RunConfig& cfg)
{
    WedderburnOptions o;
    o.closure = cfg.closure;
    return o;
}

void wedderburn_lines(Run& r, const WedderburnReport& w)
{
    r.line("dim T", std::to_string(w.dim_T));
    r.line("dim V", std::to_string(w.dim_primary));
    r.line("one-dimensional ideals", std::to_string(w.one_dim_ideal_count));
    for (const auto& [name, ok] : w.checks)
        r.flag("  " + name, ok);
}

void cmd_idempotents(Run& r, const TerwilligerContext& ctx)
{
    auto inv = inventory(ctx);
    auto w = wedderburn_report(ctx, inv, options(r.cfg));
    r.rep["inventory"] = inventory_json(ctx, inv, r.cfg.include_matrices);
    if (r.cfg.include_matrices)
        r.rep["primary_idempotent"] = to_json(primary_idempotent(ctx, inv));
    r.rep["wedderburn"] = to_json(w);
    r.line("inventory size", std::to_string(inv.size()));
    wedderburn_lines(r, w);
}

void cmd_wedderburn(Run& r, const TerwilligerContext& ctx)
{
    auto w = wedderburn_report(ctx, options(r.cfg));
    r.rep["wedderburn"] = to_json(w);
    wedderburn_lines(r, w);
}

void cmd_verify_all(Run& r, const FiniteGroup& g)
{
    Json stages = Json::array();
    std::optional<std::string> first;
    auto stage = [&](const std::string& name, bool ok, Json detail) {
        stages.push_back(Json{{"stage", name}, {"pass", ok}, {"detail", std::move(detail)}});
        r.flag(name, ok);
        if (!ok && !first)
            first = name;
    };
    auto prof = camina_profile(g);
    stage("camina_profile", profile_consistent(prof), to_json(prof));
    if (!prof.is_nonabelian_camina_p_group) {
        r.rep["stages"] = stages;
        throw ScopeError("verify-all requires a nonabelian Camina p-group");
    }
    GroupScheme s = build_scheme(g);
    stage("scheme", true, Json{{"classes", class_sizes_json(s.conj)}, {"d", s.d}});
    auto t = intersection_numbers(s);
    auto ac = is_almost_commutative(t);
    AcFamily fam = classification_family(g);
    stage("ac_check", ac.almost_commutative && fam == AcFamily::CaminaPGroup, scheme_json(s, t, ac));
    auto ctx = TerwilligerContext::build(s);
    if (!ctx.camina_scope()) {
        r.rep["stages"] = stages;
        throw ScopeError("verify-all requires nilpotency class 2 or 3 with elementary abelian central quotients");
    }
    auto blocks = verify_block_lemmas(ctx);
    stage("block_lemmas", blocks.all_pass(), to_json(blocks)["summary"]);
    auto powers = verify_power_product_lemmas(ctx);
    stage("power_product_lemmas", powers.all_pass(), to_json(powers)["summary"]);
    auto kron = verify_kronecker_decompositions(ctx);
    stage("kronecker", kron.all_pass(), to_json(kron)["summary"]);
    auto inv = inventory(ctx);
    auto w = wedderburn_report(ctx, inv, options(r.cfg));
    stage("idempotents", w.details.all_pass(), to_json(w.details)["summary"]);
    bool counts = std::all_of(w.checks.begin(), w.checks.end(), [](const auto& kv) { return kv.second; });
    Json wj = to_json(w);
    stage("wedderburn", counts, wj);
    r.rep["stages"] = stages;
    r.rep["first_failure"] = first ? Json(*first) : Json(nullptr);
    r.rep["dim_T"] = w.dim_T;
    r.rep["dim_primary"] = w.dim_primary;
    r.rep["count"] = w.one_dim_ideal_count;
    r.line("dim T / dim V / count",
           std::to_string(w.dim_T) + " / " + std::to_string(w.dim_primary) + " / " + std::to_string(w.one_dim_ideal_count));
}

void cmd_synth(Run& r)
{
    const auto& c = r.cfg;
    auto s = synth_class3_context(c.synth_p, c.synth_n, c.synth_k, c.synth_twisted);
    auto rep = synth_class3_report(s);
    r.rep["synthetic"] = synthetic_json(s, rep);
    r.line("block size", std::to_string(s.outer.size()));
    r.line("X / Y per outer block", std::to_string(rep.x_count) + " / " + std::to_string(rep.y_count));
    r.report("lemmas", rep.lemmas);
    r.report("idempotents", rep.idempotents);
}

Json error_json(const char* type, const std::string& msg, long row = -1, long col = -1)
{
    Json e{{"type", type}, {"message", msg}};
    if (row >= 0)
        e["row"] = row;
    if (col >= 0)
        e["col"] = col;
    return e;
}

} // namespace

RunResult run(const RunConfig& cfg)
{
    RunResult res;
    Json& rep = res.report;
    rep["schema"] = kSchemaVersion;
    rep["command"] = cfg.command;
    rep["input"] = cfg.command == "synth-class3" ? Json(nullptr) : Json(cfg.input);
    rep["seed"] = cfg.seed;
    Run r{cfg, rep, {}, false};
    try {
        const auto& names = command_names();
        if (std::find(names.begin(), names.end(), cfg.command) == names.end())
            throw ValidationError("unknown command '" + cfg.command + "'");
        if (cfg.command == "synth-class3") {
            cmd_synth(r);
        } else {
            if (cfg.input.empty())
                throw ValidationError("--input is required");
            FiniteGroup g = load_input(cfg.input, cfg.seed);
            rep["order"] = g.order();
            if (cfg.command == "info") {
                cmd_info(r, g);
            } else if (cfg.command == "camina") {
                cmd_camina(r, g);
            } else if (cfg.command == "verify-all") {
                cmd_verify_all(r, g);
            } else {
                GroupScheme s = build_scheme(g);
                if (cfg.command == "scheme" || cfg.command == "ac-check")
                    cmd_scheme(r, s, cfg.command == "ac-check");
                else {
                    auto ctx = scoped_context(s);
                    if (cfg.command == "terwilliger")
                        cmd_terwilliger(r, ctx);
                    else if (cfg.command == "idempotents")
                        cmd_idempotents(r, ctx);
                    else
                        cmd_wedderburn(r, ctx);
                }
            }
        }
        res.exit_code = r.failed ? kExitVerificationFailure : kExitOk;
        rep["status"] = r.failed ? "verification_failure" : "pass";
    } catch (const ValidationError& e) {
        rep["error"] = error_json("validation", e.what(), e.row(), e.col());
        res.exit_code = kExitInputError;
    } catch (const ScopeError& e) {
        rep["error"] = error_json("out_of_scope", e.what());
        res.exit_code = kExitInputError;
    } catch (const PreconditionError& e) {
        rep["error"] = error_json("precondition", e.what());
        res.exit_code = kExitInputError;
    } catch (const InvariantError& e) {
        rep["error"] = error_json("invariant", e.what());
        res.exit_code = kExitVerificationFailure;
    } catch (const Error& e) {
        rep["error"] = error_json("error", e.what());
        res.exit_code = kExitInputError;
    }
    if (rep.contains("error")) {
        rep["status"] = res.exit_code == kExitInputError ? "input_error" : "verification_failure";
        r.sum << "error: " << rep["error"]["message"].get<std::string>() << "\n";
    }
    res.summary = r.sum.str();
    return res;
}

} // namespace camina
