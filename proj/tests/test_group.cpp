#include "camina/error.hpp"
#include "camina/group.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <set>
#include <sstream>

using namespace camina;

namespace {

std::vector<FiniteGroup> sweep()
{
    return {cyclic_group(1),          cyclic_group(4),           elementary_abelian_group(2, 2),
            dihedral_group(6),        dihedral_group(8),         quaternion_group(),
            dihedral_group(12),       extraspecial_exp_p_group(3), oracle::alternating4(),
            oracle::affine_line(5),   heisenberg_group(2, 2)};
}

} // namespace

TEST_CASE("loading small tables")
{
    auto z2 = load_cayley_table_text("2\n0 1\n1 0\n");
    CHECK(z2.order() == 2);
    CHECK(z2.mul(1, 1) == 0);
    auto z3 = load_cayley_table_text("# cyclic of order 3\n3\n0 1 2\n1 2 0\n2 0 1\na b c\n");
    CHECK(z3.order() == 3);
    CHECK(z3.inv(1) == 2);
    CHECK(z3.label(2) == "c");
}

TEST_CASE("duplicate entry reports the offending row")
{
    try {
        load_cayley_table_text("3\n0 1 2\n1 2 0\n0 1 1\n");
        FAIL("expected a validation error");
    } catch (const ValidationError& e) {
        CHECK(e.row() == 2);
    }
}

TEST_CASE("malformed tables are rejected")
{
    CHECK_THROWS_AS(load_cayley_table_text("2\n0 1\n"), ValidationError);
    CHECK_THROWS_AS(load_cayley_table_text("2\n0 1\n1 2\n"), ValidationError);
    CHECK_THROWS_AS(load_cayley_table_text("2\n0 x\n1 0\n"), ValidationError);
    // Latin square without identity
    CHECK_THROWS_AS(load_cayley_table_text("3\n0 2 1\n2 1 0\n1 0 2\n"), ValidationError);
    // Latin square with identity, not associative (order-5 loop)
    CHECK_THROWS_AS(load_cayley_table_text("5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n"),
                    ValidationError);
    CHECK_THROWS_AS(load_cayley_table_file("/nonexistent/table.tbl"), ValidationError);
}

TEST_CASE("identity is renumbered to 0")
{
    // Z_2 with identity listed as element 1
    auto g = load_cayley_table_text("2\n1 0\n0 1\n");
    CHECK(g.mul(0, 1) == 1);
    CHECK(g.mul(1, 1) == 0);
}

TEST_CASE("table round trip")
{
    auto q = quaternion_group();
    auto back = load_cayley_table_text(write_cayley_table(q));
    CHECK(back == q);
    CHECK(back.label(2) == "-1");
}

TEST_CASE("builtin examples")
{
    auto q = quaternion_group();
    CHECK(q.order() == 8);
    CHECK(oracle::center(q).size() == 2);
    auto e = extraspecial_exp_p_group(3);
    CHECK(e.order() == 27);
    CHECK(oracle::center(e).size() == 3);
    for (Element x = 0; x < 27; ++x)
        CHECK(e.power(x, 3) == 0);
    CHECK(cyclic_group(1).order() == 1);
    CHECK(make_builtin("direct_product(cyclic(2), quaternion8)").order() == 16);
    CHECK(make_builtin("dihedral12").order() == 12);
    CHECK(make_builtin("elementary_abelian(3, 2)").order() == 9);
    CHECK(make_builtin("heisenberg(2,2)").order() == 64);
    CHECK_THROWS_AS(make_builtin("extraspecial_exp_p(4)"), PreconditionError);
    CHECK_THROWS_AS(make_builtin("extraspecial_exp_p(2)"), PreconditionError);
    CHECK_THROWS_AS(make_builtin("cyclic(0)"), PreconditionError);
    CHECK_THROWS_AS(make_builtin("dihedral(7)"), PreconditionError);
    CHECK_THROWS_AS(make_builtin("nonsense(3)"), ValidationError);
    CHECK_THROWS_AS(make_builtin("cyclic(3"), ValidationError);
    CHECK_THROWS_AS(make_builtin("cyclic(5000)"), PreconditionError);
}

TEST_CASE("conjugacy classes match the orbit oracle")
{
    for (const auto& g : sweep()) {
        auto cd = conjugacy_classes(g);
        CHECK(cd.classes == oracle::classes(g));
        CHECK(cd.classes.front() == std::vector<Element>{0});
        auto again = conjugacy_classes(g);
        CHECK(again.classes == cd.classes);
    }
    auto sizes = [](const FiniteGroup& g) {
        std::vector<std::size_t> s;
        for (const auto& c : conjugacy_classes(g).classes)
            s.push_back(c.size());
        return s;
    };
    CHECK(sizes(cyclic_group(4)) == std::vector<std::size_t>{1, 1, 1, 1});
    CHECK(sizes(quaternion_group()) == std::vector<std::size_t>{1, 1, 2, 2, 2});
    CHECK(sizes(dihedral_group(6)) == std::vector<std::size_t>{1, 2, 3});
}

TEST_CASE("center, derived subgroup and series")
{
    for (const auto& g : sweep()) {
        CHECK(center(g).members == oracle::center(g));
        CHECK(derived_subgroup(g).members == oracle::derived(g));
    }
    auto q = quaternion_group();
    CHECK(center(q).members == std::vector<Element>{0, 2});
    auto e = extraspecial_exp_p_group(3);
    CHECK(derived_subgroup(e) == center(e));
    auto ea = elementary_abelian_group(2, 3);
    auto lcs = lower_central_series(ea);
    REQUIRE(lcs.size() == 2);
    CHECK(lcs[0].size() == 8);
    CHECK(lcs[1].size() == 1);
    CHECK(nilpotency_class(ea) == 1u);
    CHECK(nilpotency_class(q) == 2u);
    CHECK(nilpotency_class(dihedral_group(16)) == 3u);
    CHECK_FALSE(nilpotency_class(dihedral_group(6)).has_value());
    CHECK(nilpotency_class(cyclic_group(1)) == 0u);
}

TEST_CASE("Camina predicate")
{
    CHECK(is_camina(quaternion_group()));
    CHECK(is_camina(dihedral_group(8)));
    CHECK(is_camina(dihedral_group(6)));
    CHECK(is_camina(cyclic_group(4)));
    CHECK(is_camina(extraspecial_exp_p_group(3)));
    CHECK_FALSE(is_camina(dihedral_group(12)));
    for (const auto& g : sweep())
        CHECK(is_camina(g) == oracle::camina(g));
}

TEST_CASE("Camina pair conditions agree")
{
    auto q = quaternion_group();
    auto r = is_camina_pair(q, derived_subgroup(q));
    CHECK(r.decision);
    CHECK(r.agree());
    auto d8 = dihedral_group(8);
    CHECK(is_camina_pair(d8, center(d8)).agree());
    auto v4 = elementary_abelian_group(2, 2);
    for (Element x = 1; x < 4; ++x)
        CHECK(is_camina_pair(v4, generated_subgroup(v4, std::vector<Element>{x})).agree());
    for (const auto& g : sweep()) {
        if (g.order() == 1 || g.order() > 32)
            continue;
        for (const auto& k : normal_subgroups_within(g, whole_group(g)))
            if (k.size() > 1)
                CHECK(is_camina_pair(g, k).agree());
    }
    CHECK_THROWS_AS(is_camina_pair(q, trivial_subgroup(q)), PreconditionError);
    auto s3 = dihedral_group(6);
    CHECK_THROWS_AS(is_camina_pair(s3, make_subgroup(s3, {0, 3})), PreconditionError);
}

TEST_CASE("quotients of Camina groups by N <= G' are Camina")
{
    for (const auto& g : sweep()) {
        if (!is_camina(g))
            continue;
        for (const auto& nsub : normal_subgroups_within(g, derived_subgroup(g)))
            CHECK(is_camina(quotient(g, nsub).group));
    }
}

TEST_CASE("quotient tables")
{
    auto q = quaternion_group();
    auto quo = quotient(q, center(q));
    CHECK(quo.group.order() == 4);
    CHECK(quo.group.is_abelian());
    for (Element a = 0; a < 8; ++a)
        for (Element b = 0; b < 8; ++b)
            CHECK(quo.coset_of[q.mul(a, b)] == quo.group.mul(quo.coset_of[a], quo.coset_of[b]));
}

TEST_CASE("Camina profiles")
{
    auto pq = camina_profile(quaternion_group());
    CHECK(pq.is_nonabelian_camina_p_group);
    CHECK(pq.p == 2);
    CHECK(pq.nilpotency_class == 2u);
    CHECK(pq.k == 1);
    CHECK(pq.n_param == 3);
    auto pe = camina_profile(extraspecial_exp_p_group(3));
    CHECK(pe.is_nonabelian_camina_p_group);
    CHECK(pe.p == 3);
    CHECK(pe.k == 1);
    CHECK(pe.n_param == 3);
    CHECK_FALSE(camina_profile(dihedral_group(12)).is_camina);
    auto ph = camina_profile(heisenberg_group(2, 2));
    CHECK(ph.is_nonabelian_camina_p_group);
    CHECK(ph.k == 2);
    CHECK(ph.n_param == 6);
    for (const auto& g : sweep()) {
        auto p = camina_profile(g);
        if (!p.is_nonabelian_camina_p_group)
            continue;
        CHECK(p.center_in_derived);
        CHECK(p.center_elementary_abelian);
        for (Element z : oracle::center(g))
            CHECK(g.power(z, p.p) == 0);
        if (p.shapes_checked) {
            CHECK(p.outer_shape);
            CHECK(p.middle_shape);
            CHECK(p.inner_shape);
        }
    }
}

TEST_CASE("almost-commutative family membership")
{
    CHECK(classification_family(cyclic_group(6)) == AcFamily::Abelian);
    CHECK(classification_family(quaternion_group()) == AcFamily::CaminaPGroup);
    CHECK(classification_family(oracle::alternating4()) == AcFamily::FrobeniusAffine);
    CHECK(classification_family(dihedral_group(6)) == AcFamily::FrobeniusAffine);
    CHECK(classification_family(oracle::affine_line(5)) == AcFamily::FrobeniusAffine);
    auto g72 = oracle::z3sq_q8();
    REQUIRE(g72.order() == 72);
    CHECK(classification_family(g72) == AcFamily::FrobeniusQ8);
    CHECK(classification_family(dihedral_group(12)) == AcFamily::None);
    CHECK(classification_family(dihedral_group(16)) == AcFamily::None);
}
