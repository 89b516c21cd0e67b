// Acceptance run: one PASS/FAIL/SKIPPED line per criterion, exit 1 on any FAIL.
#include "camina/idempotents.hpp"
#include "camina/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#ifndef CAMINA_FIXTURE_DIR
#define CAMINA_FIXTURE_DIR "fixtures"
#endif

using namespace camina;

namespace {

enum class Outcome { Pass, Fail, Skipped };

struct Fixture {
    std::string name;
    FiniteGroup group;
};

std::vector<Fixture> class2_fixtures()
{
    return {{"quaternion8", quaternion_group()},
            {"dihedral(8)", dihedral_group(8)},
            {"extraspecial_exp_p(3)", extraspecial_exp_p_group(3)},
            {"heisenberg(2,2)", heisenberg_group(2, 2)}};
}

TerwilligerContext context(const FiniteGroup& g) { return TerwilligerContext::build(build_scheme(g)); }

double seconds_since(std::chrono::steady_clock::time_point t)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

struct Runner {
    int failures = 0;
    std::string note;

    void run(int id, const std::string& title, const std::function<Outcome(std::string&)>& body, double limit = 0)
    {
        note.clear();
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = body(note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
            o = Outcome::Fail;
        }
        const double dt = seconds_since(t0);
        if (o == Outcome::Pass && limit > 0 && dt > limit) {
            note = "exceeded " + std::to_string(limit) + " s";
            o = Outcome::Fail;
        }
        const char* tag = o == Outcome::Pass ? "PASS" : o == Outcome::Fail ? "FAIL" : "SKIPPED";
        if (o == Outcome::Fail)
            ++failures;
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f s", dt);
        std::cout << "criterion " << id << " " << tag << "  " << title << " (" << buf << ")";
        if (!note.empty())
            std::cout << " -- " << note;
        std::cout << std::endl;
    }
};

bool expect(bool cond, std::string& note, const std::string& what)
{
    if (!cond && note.empty())
        note = what;
    return cond;
}

Outcome from(bool ok) { return ok ? Outcome::Pass : Outcome::Fail; }

Outcome dimension_formula(std::string& note)
{
    struct Case {
        FiniteGroup g;
        unsigned p, n, k;
        std::size_t dim;
        const char* name;
    };
    bool ok = true;
    for (auto& c : std::vector<Case>{{quaternion_group(), 2, 3, 1, 28, "Q8"},
                                     {dihedral_group(8), 2, 3, 1, 28, "D8"},
                                     {extraspecial_exp_p_group(3), 3, 3, 1, 137, "E27"}}) {
        auto t0 = std::chrono::steady_clock::now();
        auto ctx = context(c.g);
        const std::string n = c.name;
        ok &= expect(ctx.prime() == c.p && ctx.n_param() == c.n && ctx.k() == c.k, note, n + ": parameters");
        ok &= expect(dim_by_closure(ctx) == c.dim, note, n + ": closure");
        ok &= expect(dim_by_triples(ctx) == c.dim, note, n + ": triples");
        ok &= expect(class2_dimension_formula(c.p, c.n, c.k) == c.dim, note, n + ": formula");
        ok &= expect(seconds_since(t0) < 10.0, note, n + ": slower than 10 s");
    }
    return from(ok);
}

Outcome wedderburn_counts(std::string& note)
{
    struct Case {
        FiniteGroup g;
        std::size_t count, primary;
        const char* name;
    };
    bool ok = true;
    for (auto& c : std::vector<Case>{{quaternion_group(), 3, 25, "Q8"},
                                     {dihedral_group(8), 3, 25, "D8"},
                                     {extraspecial_exp_p_group(3), 16, 121, "E27"}}) {
        auto w = wedderburn_report(context(c.g));
        const std::string n = c.name;
        ok &= expect(w.one_dim_ideal_count == c.count, note, n + ": count");
        ok &= expect(w.dim_primary == c.primary, note, n + ": dim V");
        ok &= expect(w.dim_T == w.dim_primary + w.one_dim_ideal_count, note, n + ": dim_T != dim_V + count");
        ok &= expect(w.all_pass(), note, n + ": report check failed");
    }
    return from(ok);
}

Outcome idempotent_suite(std::string& note)
{
    bool ok = true;
    for (const auto& f : class2_fixtures()) {
        auto ctx = context(f.group);
        const unsigned p = ctx.prime();
        const std::size_t n = ctx.size();
        auto inv = inventory(ctx);
        ok &= expect(inv.size() == expected_inventory_size(ctx), note, f.name + ": inventory size");
        auto basis = closure_basis(ctx, block_closure(ctx));
        std::vector<CycloMatrix> full;
        for (const auto& e : inv)
            full.push_back(embed(ctx, e));
        const CycloMatrix zero(n, n, p);
        for (std::size_t a = 0; a < full.size(); ++a) {
            const std::string who = f.name + " " + inv[a].label.to_string();
            ok &= expect(full[a] * full[a] == full[a], note, who + ": not idempotent");
            ok &= expect(verify_centrality(ctx, full[a]).central, note, who + ": not central");
            ok &= expect(ideal_dimension(full[a], basis) == 1, note, who + ": ideal dimension");
            for (std::size_t b = a + 1; b < full.size(); ++b) {
                ok &= expect(full[a] * full[b] == zero && full[b] * full[a] == zero, note, who + ": product");
                ok &= expect(inner_product(full[a], full[b]).is_zero(), note, who + ": inner product");
            }
        }
        for (std::size_t i = 0; i < ctx.class_count(); ++i) {
            auto fam = families_for(ctx, i);
            if (fam.empty() || fam.front() != Family::W)
                continue;
            const std::vector<unsigned> zero_label(ctx.k(), 0);
            CycloMatrix sum = build_W(ctx, i, zero_label);
            for (std::size_t a = 0; a < inv.size(); ++a)
                if (inv[a].label.class_index == i)
                    sum += full[a];
            ok &= expect(sum == ctx.dual_idempotent(i), note, f.name + ": W sum on class " + std::to_string(i));
        }
    }
    return from(ok);
}

Outcome resolution_of_identity(std::string& note)
{
    bool ok = true;
    for (const auto& f : class2_fixtures()) {
        auto ctx = context(f.group);
        auto ev = primary_idempotent(ctx, inventory(ctx));
        ok &= expect(ev * ev == ev, note, f.name + ": e_V not idempotent");
        ok &= expect(verify_centrality(ctx, ev).central, note, f.name + ": e_V not central");
        ok &= expect(ev.trace() == CycloScalar(ctx.prime(), Rational(static_cast<long>(ctx.class_count()))), note,
                     f.name + ": trace");
    }
    ok &= expect(context(quaternion_group()).class_count() == 5, note, "Q8 class count");
    ok &= expect(context(extraspecial_exp_p_group(3)).class_count() == 11, note, "E27 class count");
    return from(ok);
}

struct SynthCase {
    unsigned p, n, k;
};
const std::vector<SynthCase> kSynth{{2, 2, 1}, {2, 2, 2}, {3, 2, 1}};

Outcome structure_lemmas(std::string& note)
{
    bool ok = true;
    for (const auto& f : class2_fixtures()) {
        auto ctx = context(f.group);
        ok &= expect(verify_block_lemmas(ctx).all_pass(), note, f.name + ": block lemmas");
        ok &= expect(verify_power_product_lemmas(ctx).all_pass(), note, f.name + ": power/product");
        ok &= expect(verify_kronecker_decompositions(ctx).all_pass(), note, f.name + ": kronecker");
    }
    for (auto c : kSynth) {
        auto rep = synth_class3_report(synth_class3_context(c.p, c.n, c.k));
        ok &= expect(rep.lemmas.all_pass() && !rep.lemmas.entries.empty(), note, "synthetic lemmas");
    }
    return from(ok);
}

Outcome class3_idempotents(std::string& note)
{
    bool ok = true;
    for (auto c : kSynth) {
        auto s = synth_class3_context(c.p, c.n, c.k);
        const std::string name = "synthetic(" + std::to_string(c.p) + "," + std::to_string(c.n) + "," +
                                 std::to_string(c.k) + ")";
        const std::size_t m = s.outer.size();
        auto members = block_inventory(s.outer);
        std::size_t xs = 0, ys = 0;
        CycloMatrix sum_x = w_block(s.outer, std::vector<unsigned>(c.k, 0));
        for (const auto& e : members) {
            ok &= expect(e.block * e.block == e.block, note, name + " " + e.label.to_string() + ": idempotent");
            if (e.label.family == Family::X) {
                ++xs;
                sum_x += e.block;
            } else {
                ++ys;
                ok &= expect(e.block.trace() == CycloScalar(c.p, Rational(1)), note, name + ": trace Y");
            }
        }
        const CycloMatrix zero(m, m, c.p);
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = 0; b < members.size(); ++b)
                if (a != b)
                    ok &= expect(members[a].block * members[b].block == zero, note, name + ": cross product");
        ok &= expect(sum_x == identity(m, c.p), note, name + ": sum of X");
        ok &= expect(xs == int_pow(c.p, c.k) - 1 && ys == int_pow(c.p, c.n) - 1, note, name + ": counts");
        ok &= expect(synth_class3_report(s).idempotents.all_pass(), note, name + ": report");
    }
    return from(ok);
}

Outcome class3_fixture(std::string& note)
{
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    const fs::path dir = CAMINA_FIXTURE_DIR;
    if (fs::is_directory(dir))
        for (const auto& e : fs::directory_iterator(dir)) {
            const std::string name = e.path().filename().string();
            if (name.rfind("camina_class3_", 0) == 0 && e.path().extension() == ".tbl")
                files.push_back(e.path());
        }
    if (files.empty()) {
        note = "no class-3 Camina fixture in " + dir.string();
        return Outcome::Skipped;
    }
    std::sort(files.begin(), files.end());
    bool ok = true;
    for (const auto& f : files) {
        RunConfig cfg;
        cfg.command = "verify-all";
        cfg.input = "table:" + f.string();
        cfg.closure = ClosureMode::Never;
        auto r = run(cfg);
        const std::string name = f.filename().string();
        if (!expect(r.exit_code == kExitOk, note, name + ": verify-all exit " + std::to_string(r.exit_code)))
            return Outcome::Fail;
        auto ctx = context(load_input(cfg.input));
        const unsigned p = ctx.prime(), n = ctx.n_param(), k = ctx.k();
        const std::size_t pk = int_pow(p, k), pn = int_pow(p, n), p2n = int_pow(p, 2 * n);
        const std::size_t count = (pk - 1) * (pn - 1) + (p2n - 1) * (pk - 1) + (p2n - 1) * (pn - 1);
        ok &= expect(ctx.nil_class() == 3, note, name + ": not class 3");
        ok &= expect(r.report["dim_T"] == class3_dimension_formula(p, n, k), note, name + ": dimension formula");
        ok &= expect(r.report["count"] == count, note, name + ": decomposition count");
    }
    return from(ok);
}

Outcome camina_predicates(std::string& note)
{
    bool ok = true;
    ok &= expect(is_camina(quaternion_group()), note, "Q8");
    ok &= expect(is_camina(dihedral_group(8)), note, "D8");
    ok &= expect(is_camina(dihedral_group(6)), note, "S3");
    ok &= expect(is_camina(extraspecial_exp_p_group(3)), note, "E27");
    ok &= expect(!is_camina(dihedral_group(12)), note, "D12");
    std::vector<FiniteGroup> sweep{quaternion_group(),  dihedral_group(8), dihedral_group(6),
                                   extraspecial_exp_p_group(3), dihedral_group(12), dihedral_group(16),
                                   cyclic_group(6), elementary_abelian_group(2, 3)};
    for (const auto& g : sweep) {
        for (const auto& k : normal_subgroups_within(g, whole_group(g)))
            if (k.size() > 1)
                ok &= expect(is_camina_pair(g, k).agree(), note, "pair conditions disagree");
        if (!is_camina(g))
            continue;
        for (const auto& nsub : normal_subgroups_within(g, derived_subgroup(g)))
            if (nsub.size() < g.order())
                ok &= expect(is_camina(quotient(g, nsub).group), note, "quotient not Camina");
    }
    return from(ok);
}

Outcome galois_stability(std::string& note)
{
    auto ctx = context(extraspecial_exp_p_group(3));
    auto inv = inventory(ctx);
    std::vector<CycloMatrix> full;
    for (const auto& e : inv)
        full.push_back(embed(ctx, e));
    bool ok = true;
    for (unsigned t : {1u, 2u}) {
        auto perm = galois_permutation(inv, t);
        ok &= expect(perm.has_value(), note, "t=" + std::to_string(t) + ": image outside inventory");
        std::vector<CycloMatrix> image;
        for (const auto& m : full)
            image.push_back(m.galois(t));
        ok &= expect(same_matrix_set(full, image), note, "t=" + std::to_string(t) + ": not a permutation");
    }
    return from(ok);
}

} // namespace

int main()
{
    Runner r;
    r.run(1, "class-2 dimension formula", dimension_formula, 30);
    r.run(2, "Wedderburn counts", wedderburn_counts);
    r.run(3, "idempotent suite on class-2 fixtures", idempotent_suite, 60);
    r.run(4, "resolution of identity", resolution_of_identity);
    r.run(5, "block lemmas and Kronecker forms", structure_lemmas);
    r.run(6, "class-3 block idempotents (synthetic)", class3_idempotents, 120);
    r.run(7, "class-3 group end to end", class3_fixture);
    r.run(8, "Camina predicates", camina_predicates);
    r.run(9, "Galois stability", galois_stability);
    return r.failures == 0 ? 0 : 1;
}
