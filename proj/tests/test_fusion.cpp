#include "doctest.h"

#include "hopf/error.hpp"
#include "hopf/fusion.hpp"

using namespace hopf;

namespace {

AlgebraParams params(int n, int n1, long b1, long b2, long b3)
{
    return AlgebraParams::make(n, n1, {CycScalar(b1), CycScalar(b2), CycScalar(b3)});
}

FusionVector single(FusionEngine& e, const std::string& label)
{
    return {{e.canonical(label), 1}};
}

// the product is one simple, in either order, and dimensions balance
void check_simple_product(FusionEngine& e, const std::string& l1, const std::string& l2, const std::string& expected)
{
    FusionVector f = e.fuse(l1, l2);
    CHECK_MESSAGE(f == single(e, expected), l1 << " * " << l2 << " = " << fusion_str(f));
    CHECK(e.fuse(l2, l1) == f);
}

// VI/VII: the product lies among the seeds of the expected weights
void check_seeded_product(FusionEngine& e, const std::string& l1, const std::string& l2, SimpleLabel expected)
{
    const AlgebraParams& p = e.params();
    FusionVector f = e.fuse(l1, l2);
    REQUIRE_MESSAGE(f.size() == 1, l1 << " * " << l2 << " = " << fusion_str(f));
    CHECK(f.begin()->second == 1);
    bool found = false;
    for (const auto& k : solve_k_seed(p, expected)) {
        expected.kseed = k;
        found = found || e.canonical(expected.str()) == f.begin()->first;
    }
    CHECK_MESSAGE(found, l1 << " * " << l2 << " = " << fusion_str(f));
    CHECK(e.fuse(l2, l1) == f);
}

void check_intertwined(FusionEngine& e, const std::string& l1, const std::string& l2)
{
    const AlgebraParams& p = e.params();
    ModuleRep t = tensor(p, e.module(l1), e.module(l2));
    FusionVector f = e.fuse(l1, l2);
    REQUIRE(f.size() == 1);
    auto iso = find_isomorphism(t, e.module(f.begin()->first));
    REQUIRE(iso.has_value());
    CHECK(iso->rank() == t.dim);
}

long label_dim(FusionEngine& e, const std::string& l)
{
    return e.module(l).dim;
}

}  // namespace

TEST_CASE("unit and dimension")
{
    auto p = params(3, 1, 1, 0, 1);
    FusionEngine e(p);
    for (const char* l : {"V0(2,2,2;0)", "VI(2,1,1;0)", "V2(1,1,1;0)", "V3(1,1,1;0)"}) {
        CHECK(e.fuse("V0(1,1,1;0)", l) == single(e, l));
        CHECK(e.fuse(l, "V0(1,1,1;0)") == single(e, l));
    }
    ModuleRep t = tensor(p, e.module("VI(2,1,1;0)"), e.module("V2(1,1,1;0)"));
    CHECK(t.dim == 3 * 2);
    CHECK(fusion_dim(p, e.fuse("VI(2,1,1;0)", "V2(1,1,1;0)")) == 6);
}

TEST_CASE("one-dimensional products")
{
    SUBCASE("beta = 0")
    {
        FusionEngine e(params(3, 1, 0, 0, 0));
        check_simple_product(e, "V0(2,1,1;0)", "V0(3,1,1;1)", "V0(6,1,1;1)");
        check_simple_product(e, "V0(1/2,5,7;2)", "V0(3,2,1/7;2)", "V0(3/2,10,1;1)");
        check_intertwined(e, "V0(2,1,1;0)", "V0(3,1,1;1)");
    }
    SUBCASE("beta1 != 0")
    {
        FusionEngine e(params(3, 1, 1, 0, 0));
        check_simple_product(e, "V0(2,2,3;1)", "V0(1,1,1;2)", "V0(2,2,3;0)");
        check_simple_product(e, "V0(2,2,1;0)", "V0(3,3,5;1)", "V0(6,6,5;1)");
    }
    SUBCASE("beta2 != 0, n = 2")
    {
        FusionEngine e(params(2, 1, 0, 1, 0));
        check_simple_product(e, "V0(2,3,2;1)", "V0(3,1,3;1)", "V0(6,3,6;0)");
    }
    SUBCASE("beta3 != 0")
    {
        FusionEngine e(params(3, 1, 0, 0, 1));
        check_simple_product(e, "V0(1,2,1/2;0)", "V0(2,4,1;0)", "V0(2,8,1/2;0)");
    }
}

TEST_CASE("V_I times V0")
{
    auto p = params(3, 1, 1, 0, 0);
    FusionEngine e(p);
    auto vi = [&](long g1, long g2, int i) {
        return SimpleLabel{Kind::VI, CycScalar(g1), CycScalar(g2), CycScalar(1), i, 0, std::nullopt};
    };
    check_seeded_product(e, "VI(2,1,1;0)", "V0(1,1,1;1)", vi(2, 1, 1));
    check_seeded_product(e, "VI(2,1,1;0)", "V0(3,3,1;0)", vi(6, 3, 0));
    check_seeded_product(e, "VI(3,1,1;0)", "V0(2,2,1;2)", vi(6, 2, 2));
    check_seeded_product(e, "VI(5,1,1;0)", "V0(1,1,1;2)", vi(5, 1, 2));
    check_intertwined(e, "VI(2,1,1;0)", "V0(3,3,1;0)");

    FusionEngine e2(params(2, 1, 1, 0, 0));
    SimpleLabel l{Kind::VI, CycScalar(6), CycScalar(3), CycScalar(1), 1, 0, std::nullopt};
    check_seeded_product(e2, "VI(2,1,1;0)", "V0(3,3,1;1)", l);
}

TEST_CASE("V_II times V0")
{
    auto vii = [](long g1, long g3, int i) {
        return SimpleLabel{Kind::VII, CycScalar(g1), CycScalar(1), CycScalar(g3), i, 0, std::nullopt};
    };
    FusionEngine e(params(3, 1, 0, 1, 0));
    check_seeded_product(e, "VII(2,1,1;0)", "V0(2,1,2;1)", vii(4, 2, 1));
    check_seeded_product(e, "VII(2,1,1;0)", "V0(1,1,1;1)", vii(2, 1, 1));
    check_seeded_product(e, "VII(3,1,1;0)", "V0(3,1,3;0)", vii(9, 3, 0));
    check_seeded_product(e, "VII(2,1,1;0)", "V0(5,1,5;2)", vii(10, 5, 2));
    FusionEngine e2(params(2, 1, 0, 1, 0));
    check_seeded_product(e2, "VII(3,1,1;0)", "V0(2,1,2;1)", vii(6, 2, 1));
}

TEST_CASE("V_r times V0")
{
    FusionEngine e(params(3, 1, 0, 0, 1));
    check_simple_product(e, "V2(1,1,1;0)", "V0(2,4,1;0)", "V2(2,4,1;0)");
    check_simple_product(e, "V2(1,1,1;0)", "V0(1,2,1/2;0)", "V2(1,2,1/2;0)");
    check_simple_product(e, "V3(1,1,1;0)", "V0(2,4,1;0)", "V3(2,4,1;0)");
    check_simple_product(e, "V3(1,1,1;0)", "V0(3,3,3;0)", "V3(3,3,3;0)");
    check_simple_product(e, "V2(2,4,1;0)", "V0(3,3,3;0)", "V2(6,12,3;0)");
    check_intertwined(e, "V2(1,1,1;0)", "V0(2,4,1;0)");
    check_intertwined(e, "V3(1,1,1;0)", "V0(3,3,3;0)");
}

TEST_CASE("z2 products")
{
    SUBCASE("n = 3")
    {
        FusionEngine e(params(3, 1, 0, 0, 1));
        // V0(1,1,1;k) is a module only for k = 0 here, so the one-dimensional factors are trivial
        FusionVector want{{e.canonical("V3(1,1,1;0)"), 1}, {"V0(1,1,1;0)", 1}};
        CHECK(e.fuse("V2(1,1,1;0)", "V2(1,1,1;0)") == want);
        FusionVector want3{{e.canonical("V2(1,1,1;0)"), 2}, {"V0(1,1,1;0)", 2}};
        CHECK(e.fuse("V3(1,1,1;0)", "V2(1,1,1;0)") == want3);
        CHECK_THROWS_AS(e.module("V0(1,1,1;1)"), Error);
    }
    SUBCASE("n = 2")
    {
        FusionEngine e(params(2, 1, 0, 0, 1));
        FusionVector want{{e.canonical("V0(1,1,1;0)"), 2}, {e.canonical("V0(1,1,1;1)"), 2}};
        CHECK(e.fuse("V2(1,1,1;0)", "V2(1,1,1;0)") == want);
    }
}

TEST_CASE("V_I products with nonunit weight product")
{
    // the n shifts g^p x of V_I(6,1,1) are isomorphic, so the n factors are one class
    auto p = params(3, 1, 1, 0, 0);
    FusionEngine e(p);
    FusionVector f = e.fuse("VI(2,1,1;0)", "VI(3,1,1;0)");
    REQUIRE(f.size() == 1);
    CHECK(f.begin()->second == 3);
    CHECK(parse_label(f.begin()->first, p).kind == Kind::VI);
    CHECK(fusion_dim(p, f) == 9);
    const ModuleRep& x = e.module(f.begin()->first);
    for (int k = 1; k < 3; ++k)
        CHECK(isomorphic(tensor(p, e.module("V0(1,1,1;" + std::to_string(k) + ")"), x), x));
}

TEST_CASE("commutativity and duality")
{
    auto p = params(3, 1, 1, 0, 1);
    FusionEngine e(p);
    std::vector<std::string> labels{"V0(2,2,2;0)", "VI(2,1,1;0)", "VI(3,1,1;0)", "V2(1,1,1;0)"};
    FusionTable t = fusion_table(e, labels);
    CHECK(t.commutative);
    for (size_t i = 0; i < labels.size(); ++i)
        for (size_t j = 0; j < labels.size(); ++j)
            CHECK(fusion_dim(p, t.cells[i][j]) == label_dim(e, labels[i]) * label_dim(e, labels[j]));
    for (const auto& l : labels) {
        const ModuleRep& m = e.module(l);
        FusionVector f = decompose(p, tensor(p, m, dual_module(p, m)));
        auto it = f.find(e.canonical("V0(1,1,1;0)"));
        CHECK_MESSAGE(it != f.end(), l);
    }
}

TEST_CASE("decompose preconditions")
{
    auto p = params(3, 1, 0, 0, 1);
    ModuleRep m = build_Vr(p, CycScalar(1), CycScalar(1), CycScalar(1), 0, 2);
    CHECK(decompose(p, m) == FusionVector{{FusionEngine(p).canonical("V2(1,1,1;0)"), 1}});
    ModuleRep bad = m;
    bad.a = m.a + m.y;
    CHECK_THROWS_WITH_AS(decompose(p, bad), doctest::Contains("PreconditionViolated"), Error);
}
