#include "camina/error.hpp"
#include "camina/idempotents.hpp"

#include <doctest.h>

using namespace camina;

namespace {

TerwilligerContext context(const FiniteGroup& g, std::optional<CentralGenerators> gens = std::nullopt)
{
    return TerwilligerContext::build(build_scheme(g), std::move(gens));
}

CycloMatrix sum_embedded(const TerwilligerContext& ctx, const std::vector<Idempotent>& inv)
{
    CycloMatrix s(ctx.size(), ctx.size(), ctx.prime());
    for (const auto& e : inv)
        s += embed(ctx, e);
    return s;
}

} // namespace

TEST_CASE("Q8 idempotent blocks")
{
    auto ctx = context(quaternion_group());
    auto b = ctx.class_blocks(2);
    const std::vector<unsigned> one{1}, zero{0};
    CycloMatrix expect(2, 2, 2);
    expect.set(0, 0, Rational(1, 2));
    expect.set(0, 1, Rational(-1, 2));
    expect.set(1, 0, Rational(-1, 2));
    expect.set(1, 1, Rational(1, 2));
    CHECK(w_block(b, one) == expect);
    CHECK(w_block(b, zero) * Rational(2) == all_ones(2, 2));
    CHECK(build_W(ctx, 2, one) == ctx.embed(2, expect));

    auto inv = inventory(ctx);
    CHECK(inv.size() == 3);
    CHECK(expected_inventory_size(ctx) == 3);
    CHECK(inv[0].label.to_string() == "W_2(1)");
    CHECK(families_for(ctx, 2) == std::vector<Family>{Family::W});
    CHECK(families_for(ctx, 0).empty());
}

TEST_CASE("idempotency and primary traces")
{
    struct Case {
        FiniteGroup g;
        std::size_t members;
        long primary_trace;
    };
    for (auto& c : std::vector<Case>{{quaternion_group(), 3, 5},
                                     {dihedral_group(8), 3, 5},
                                     {extraspecial_exp_p_group(3), 16, 11},
                                     {heisenberg_group(2, 2), 45, 19}}) {
        auto ctx = context(c.g);
        auto inv = inventory(ctx);
        CHECK(inv.size() == c.members);
        for (const auto& e : inv) {
            CHECK(e.block * e.block == e.block);
            CHECK(e.block.trace() == CycloScalar(ctx.prime(), Rational(1)));
        }
        auto ev = primary_idempotent(ctx, inv);
        CHECK(ev * ev == ev);
        CHECK(ev.trace() == CycloScalar(ctx.prime(), Rational(c.primary_trace)));
        CHECK(ev + sum_embedded(ctx, inv) == identity(ctx.size(), ctx.prime()));
    }
}

TEST_CASE("abelian groups have an identity primary idempotent")
{
    auto ctx = context(cyclic_group(4));
    auto inv = inventory(ctx);
    CHECK(inv.empty());
    CHECK(primary_idempotent(ctx, inv) == identity(4, 2));
}

TEST_CASE("incomplete inventory is rejected")
{
    auto ctx = context(quaternion_group());
    auto inv = inventory(ctx);
    inv.pop_back();
    CHECK_THROWS_AS(primary_idempotent(ctx, inv), PreconditionError);
}

TEST_CASE("orthogonality on full matrices")
{
    for (auto g : {quaternion_group(), extraspecial_exp_p_group(3)}) {
        auto ctx = context(g);
        auto inv = inventory(ctx);
        CHECK(verify_orthogonality(inv).all_pass());
        std::vector<CycloMatrix> full;
        for (const auto& e : inv)
            full.push_back(embed(ctx, e));
        auto ev = primary_idempotent(ctx, inv);
        const CycloMatrix zero(ctx.size(), ctx.size(), ctx.prime());
        std::size_t pairs = 0;
        for (std::size_t a = 0; a < full.size(); ++a) {
            CHECK(full[a] * ev == zero);
            CHECK(ev * full[a] == zero);
            for (std::size_t b = a + 1; b < full.size(); ++b) {
                CHECK(full[a] * full[b] == zero);
                CHECK(inner_product(full[a], full[b]).is_zero());
                ++pairs;
            }
        }
        CHECK(pairs == full.size() * (full.size() - 1) / 2);
    }
}

TEST_CASE("centrality")
{
    auto ctx = context(quaternion_group());
    auto r = verify_centrality(ctx, ctx.dual_idempotent(0));
    CHECK_FALSE(r.central);
    CHECK(r.generator == "A");
    CHECK(verify_centrality(ctx, identity(8, 2)).central);
    auto inv = inventory(ctx);
    for (const auto& e : inv)
        CHECK(verify_centrality(ctx, embed(ctx, e)).central);
    CHECK(verify_centrality(ctx, primary_idempotent(ctx, inv)).central);
}

TEST_CASE("primitivity")
{
    auto ctx = context(quaternion_group());
    auto basis = closure_basis(ctx, block_closure(ctx));
    REQUIRE(basis.size() == 28);
    auto inv = inventory(ctx);
    for (const auto& e : inv) {
        CHECK(ideal_dimension(embed(ctx, e), basis) == 1);
        CHECK(verify_primitivity(embed(ctx, e), basis));
    }
    auto two = embed(ctx, inv[0]) + embed(ctx, inv[1]);
    CHECK(ideal_dimension(two, basis) == 2);
    CHECK_FALSE(verify_primitivity(two, basis));
    CHECK(ideal_dimension(primary_idempotent(ctx, inv), basis) == 25);
}

TEST_CASE("Wedderburn reports")
{
    struct Case {
        FiniteGroup g;
        std::size_t dim, primary, count;
    };
    for (auto& c : std::vector<Case>{{quaternion_group(), 28, 25, 3},
                                     {dihedral_group(8), 28, 25, 3},
                                     {extraspecial_exp_p_group(3), 137, 121, 16}}) {
        auto rep = wedderburn_report(context(c.g));
        CHECK(rep.dim_T == c.dim);
        CHECK(rep.dim_formula == c.dim);
        REQUIRE(rep.dim_closure.has_value());
        CHECK(*rep.dim_closure == c.dim);
        CHECK(rep.dim_primary == c.primary);
        CHECK(rep.one_dim_ideal_count == c.count);
        CHECK(rep.expected_count == c.count);
        CHECK(rep.idempotent_inventory.size() == c.count);
        CHECK(rep.all_pass());
        for (const auto& [name, ok] : rep.checks) {
            INFO(name);
            CHECK(ok);
        }
    }
    WedderburnOptions never;
    never.closure = ClosureMode::Never;
    CHECK_FALSE(wedderburn_report(context(quaternion_group()), never).dim_closure.has_value());
    CHECK_THROWS_AS(wedderburn_report(context(dihedral_group(6))), ScopeError);
}

TEST_CASE("synthetic class-3 contexts")
{
    struct Case {
        unsigned p, n, k;
        bool twisted;
    };
    for (auto c : std::vector<Case>{{2, 2, 1, false}, {2, 2, 2, false}, {3, 2, 1, false}, {2, 2, 1, true}}) {
        auto s = synth_class3_context(c.p, c.n, c.k, c.twisted);
        CHECK(s.outer.size() == int_pow(c.p, c.n + c.k));
        auto rep = synth_class3_report(s);
        CHECK(rep.lemmas.all_pass());
        CHECK(rep.idempotents.all_pass());
        CHECK(rep.middle_classes == int_pow(c.p, c.n) - 1);
        CHECK(rep.x_count == int_pow(c.p, c.k) - 1);
        CHECK(rep.y_count == int_pow(c.p, c.n) - 1);
        CHECK(rep.w_count == rep.middle_classes * (int_pow(c.p, c.k) - 1));
    }
}

TEST_CASE("synthetic block identities")
{
    auto s = synth_class3_context(2, 2, 1);
    auto members = block_inventory(s.outer);
    CycloMatrix sum_x(s.outer.size(), s.outer.size(), 2);
    const std::vector<unsigned> zero{0};
    sum_x += w_block(s.outer, zero);
    for (const auto& e : members) {
        CHECK(e.block * e.block == e.block);
        if (e.label.family == Family::X)
            sum_x += e.block;
        else
            CHECK(e.block.trace() == CycloScalar(2, Rational(1)));
    }
    CHECK(sum_x == identity(s.outer.size(), 2));
}

TEST_CASE("Galois action permutes the inventory")
{
    auto ctx = context(extraspecial_exp_p_group(3));
    auto inv = inventory(ctx);
    auto perm = galois_permutation(inv, 2);
    REQUIRE(perm.has_value());
    std::vector<std::size_t> sorted = *perm;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        CHECK(sorted[i] == i);
    for (std::size_t i = 0; i < inv.size(); ++i)
        CHECK((*perm)[i] != i);
}

TEST_CASE("inventory does not depend on the generator choice")
{
    auto g = extraspecial_exp_p_group(3);
    auto a = context(g);
    const Element z = a.ordering().generators->z.at(0);
    auto b = context(g, CentralGenerators{3, {g.mul(z, z)}, {}});
    auto ia = element_indexed_inventory(a, inventory(a));
    auto ib = element_indexed_inventory(b, inventory(b));
    CHECK(same_matrix_set(ia, ib));
}

TEST_CASE("idempotent constructor errors")
{
    auto ctx = context(quaternion_group());
    const std::vector<unsigned> one{1}, two{1, 0}, big{2};
    CHECK_THROWS_AS(build_X(ctx, 2, one), ScopeError);
    CHECK_THROWS_AS(build_Y(ctx, 2, one), ScopeError);
    CHECK_THROWS_AS(build_W(ctx, 0, one), ScopeError);
    CHECK_THROWS_AS(build_W(ctx, 2, two), PreconditionError);
    CHECK_THROWS_AS(build_W(ctx, 2, big), PreconditionError);
    CHECK_THROWS_AS(build_W(ctx, 9, one), PreconditionError);
    CHECK_THROWS_AS(synth_class3_context(2, 10, 3), PreconditionError);
    CHECK_THROWS_AS(synth_class3_context(4, 1, 1), PreconditionError);
    CHECK_THROWS_AS(synth_class3_context(2, 0, 1), PreconditionError);
}
