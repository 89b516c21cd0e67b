#include "camina/error.hpp"
#include "camina/idempotents.hpp"
#include "camina/terwilliger.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace camina;

namespace {

TerwilligerContext context(const FiniteGroup& g, std::optional<CentralGenerators> gens = std::nullopt)
{
    return TerwilligerContext::build(build_scheme(g), std::move(gens));
}

CycloMatrix rat_matrix(unsigned p, std::vector<std::vector<int>> rows)
{
    CycloMatrix m(rows.size(), rows.front().size(), p);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            m.set(r, c, Rational(rows[r][c]));
    return m;
}

} // namespace

TEST_CASE("adjacency and dual idempotents")
{
    for (auto g : {cyclic_group(2), quaternion_group(), dihedral_group(6), extraspecial_exp_p_group(3)}) {
        auto ctx = context(g);
        const std::size_t n = ctx.size();
        const unsigned p = ctx.prime();
        CycloMatrix sum_a(n, n, p), sum_e(n, n, p);
        for (std::size_t i = 0; i < ctx.class_count(); ++i) {
            sum_a += ctx.adjacency(i);
            sum_e += ctx.dual_idempotent(i);
            for (std::size_t j = 0; j < ctx.class_count(); ++j) {
                auto prod = ctx.dual_idempotent(i) * ctx.dual_idempotent(j);
                CHECK(prod == (i == j ? ctx.dual_idempotent(i) : CycloMatrix(n, n, p)));
                CHECK(ctx.adjacency_block(i, j, 0) == ctx.block(ctx.adjacency(i), j, 0));
            }
            CHECK(ctx.adjacency(i).transpose() == ctx.adjacency(ctx.scheme().inverse_class(i)));
        }
        CHECK(ctx.adjacency(0) == identity(n, p));
        CHECK(sum_a == all_ones(n, p));
        CHECK(sum_e == identity(n, p));
    }
}

TEST_CASE("adjacency matrices agree with the element-order oracle")
{
    for (auto g : {quaternion_group(), dihedral_group(8), dihedral_group(6)}) {
        auto ctx = context(g);
        std::vector<CycloMatrix> ours;
        for (std::size_t i = 0; i < ctx.class_count(); ++i) {
            ours.push_back(ctx.to_element_indexing(ctx.adjacency(i)));
            ours.push_back(ctx.to_element_indexing(ctx.dual_idempotent(i)));
        }
        CHECK(same_matrix_set(ours, oracle::terwilliger_generators(g, ctx.prime())));
    }
}

TEST_CASE("Z2 example")
{
    auto ctx = context(cyclic_group(2));
    CHECK(ctx.adjacency(1) == rat_matrix(2, {{0, 1}, {1, 0}}));
    CHECK(ctx.dual_idempotent(0) == rat_matrix(2, {{1, 0}, {0, 0}}));
    CHECK(dim_by_triples(ctx) == 4);
    CHECK(dim_by_closure(ctx) == 4);
}

TEST_CASE("Q8 ordering and row sums")
{
    auto ctx = context(quaternion_group());
    REQUIRE(ctx.camina_scope());
    CHECK(ctx.k() == 1);
    CHECK(ctx.n_param() == 3);
    CHECK(ctx.nil_class() == 2);
    REQUIRE(ctx.ordering().generators.has_value());
    CHECK(ctx.ordering().generators->z == std::vector<Element>{2});
    const std::vector<std::size_t> sums{1, 1, 2, 2, 2};
    for (std::size_t i = 0; i < ctx.class_count(); ++i)
        for (std::size_t r = 0; r < ctx.size(); ++r)
            CHECK(ctx.adjacency_row(i, r).size() == sums[i]);
    // A for {-1} restricted to an outer class is the 2 x 2 shift
    CHECK(ctx.adjacency_block(1, 2, 2) == shift_matrix(2));
    CHECK(ctx.class_blocks(2).central[1] == shift_kronecker(2, 1, 1));
}

TEST_CASE("dimensions by triples and by closure")
{
    CHECK(dim_by_triples(context(quaternion_group())) == 28);
    CHECK(dim_by_triples(context(dihedral_group(8))) == 28);
    auto e27 = context(extraspecial_exp_p_group(3));
    CHECK(dim_by_triples(e27) == 137);
    CHECK(dim_by_closure(e27) == 137);
    CHECK(class2_dimension_formula(2, 3, 1) == 28);
    CHECK(class2_dimension_formula(3, 3, 1) == 137);
    CHECK_THROWS_AS(dim_by_triples(context(dihedral_group(12))), PreconditionError);
}

TEST_CASE("block closure agrees with the closure of all generators")
{
    for (auto g : {cyclic_group(2), cyclic_group(3), quaternion_group(), dihedral_group(8), dihedral_group(6)}) {
        auto ctx = context(g);
        auto gens = oracle::terwilliger_generators(g, ctx.prime());
        auto whole = algebra_closure(gens);
        auto blocks = block_closure(ctx);
        CHECK(blocks.dimension == whole.dimension);
        auto basis = closure_basis(ctx, blocks);
        CHECK(basis.size() == blocks.dimension);
        CHECK(span_dimension(basis) == blocks.dimension);
    }
}

TEST_CASE("lemma reports pass on class-2 fixtures")
{
    for (auto g : {quaternion_group(), dihedral_group(8), extraspecial_exp_p_group(3), heisenberg_group(2, 2)}) {
        auto ctx = context(g);
        REQUIRE(ctx.camina_scope());
        auto a = verify_block_lemmas(ctx);
        auto b = verify_power_product_lemmas(ctx);
        auto c = verify_kronecker_decompositions(ctx);
        CHECK(a.all_pass());
        CHECK(b.all_pass());
        CHECK(c.all_pass());
        CHECK_FALSE(a.entries.empty());
        CHECK_FALSE(b.entries.empty());
        CHECK_FALSE(c.entries.empty());
    }
}

TEST_CASE("construction is deterministic")
{
    auto a = context(heisenberg_group(2, 2));
    auto b = context(heisenberg_group(2, 2));
    CHECK(a.ordering().order == b.ordering().order);
    CHECK(a.ordering().generators->z == b.ordering().generators->z);
    for (std::size_t i = 0; i < a.class_count(); ++i)
        CHECK(a.class_blocks(i).central == b.class_blocks(i).central);
}

TEST_CASE("exponent encoding")
{
    CHECK(exponent_digits(5, 2, 3) == std::vector<unsigned>{1, 0, 1});
    const std::vector<unsigned> d{2, 1};
    CHECK(exponent_index(d, 3) == 5);
    auto g = extraspecial_exp_p_group(3);
    const std::vector<Element> z{9};
    auto seq = exponent_sequence(g, z, 3);
    REQUIRE(seq.size() == 3);
    CHECK(seq[0] == 0);
    CHECK(seq[1] == 9);
    CHECK(seq[2] == g.mul(9, 9));
}

TEST_CASE("tampered blocks are detected")
{
    auto ctx = context(extraspecial_exp_p_group(3));
    auto b = ctx.class_blocks(3);
    {
        VerificationReport r;
        check_kronecker_forms(b, r);
        check_central_power_laws(b, r);
        check_outer_row_counts(b, r);
        CHECK(r.all_pass());
    }
    auto bad = b;
    bad.central[1] = identity(bad.size(), 3);
    VerificationReport r1;
    check_kronecker_forms(bad, r1);
    CHECK_FALSE(r1.all_pass());

    bad = b;
    bad.central[1].set(0, 0, Rational(1));
    VerificationReport r2;
    check_outer_row_counts(bad, r2);
    check_central_power_laws(bad, r2);
    CHECK(r2.failures() > 0);
}

TEST_CASE("scope and generator validation")
{
    auto d6 = context(dihedral_group(6));
    CHECK_FALSE(d6.camina_scope());
    CHECK_THROWS_AS(verify_block_lemmas(d6), ScopeError);
    CHECK_THROWS_AS(verify_power_product_lemmas(d6), ScopeError);
    CHECK_THROWS_AS(verify_kronecker_decompositions(d6), ScopeError);
    CHECK_THROWS_AS(context(dihedral_group(6), CentralGenerators{2, {1}, {}}), ScopeError);
    CHECK_THROWS_AS(central_generators(cyclic_group(4)), ScopeError);

    auto q = quaternion_group();
    CHECK_NOTHROW(validate_generators(q, CentralGenerators{2, {2}, {}}));
    CHECK_THROWS_AS(validate_generators(q, CentralGenerators{2, {0}, {}}), PreconditionError);
    CHECK_THROWS_AS(validate_generators(q, CentralGenerators{2, {1}, {}}), PreconditionError);
    CHECK_THROWS_AS(validate_generators(q, CentralGenerators{2, {2, 2}, {}}), PreconditionError);
    CHECK_THROWS_AS(validate_generators(q, CentralGenerators{3, {2}, {}}), PreconditionError);
}

TEST_CASE("alternative central generator")
{
    auto g = extraspecial_exp_p_group(3);
    const Element z = central_generators(g).z.at(0);
    auto ctx = context(g, CentralGenerators{3, {g.mul(z, z)}, {}});
    CHECK(ctx.ordering().generators->z == std::vector<Element>{g.mul(z, z)});
    CHECK(verify_block_lemmas(ctx).all_pass());
    CHECK(verify_power_product_lemmas(ctx).all_pass());
    CHECK(verify_kronecker_decompositions(ctx).all_pass());
    CHECK(dim_by_triples(ctx) == 137);
}
