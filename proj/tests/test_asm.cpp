#include "doctest.h"

#include "sixv/alt_sign.hpp"

using namespace sixv;

namespace {

AsmMatrix mat(int n, std::vector<int> entries) {
    AsmMatrix a;
    a.n = n;
    a.entries = std::move(entries);
    return a;
}

} // namespace

TEST_CASE("defining property") {
    CHECK(is_asm(mat(1, {1})));
    CHECK(is_asm(mat(2, {0, 1, 1, 0})));
    CHECK(is_asm(mat(3, {0, 1, 0, 1, -1, 1, 0, 1, 0})));
    CHECK_FALSE(is_asm(mat(2, {1, 0, 1, 0})));    // a column sums to 2
    CHECK_FALSE(is_asm(mat(2, {0, 1, 1, -1})));   // a row sums to 0
    CHECK_FALSE(is_asm(mat(2, {-1, 1, 1, 0})));   // partial sum dips below 0
    CHECK_FALSE(is_asm(mat(1, {0})));
}

TEST_CASE("enumeration order and frozen counts") {
    std::vector<AsmMatrix> one = enumerate_asm(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == mat(1, {1}));

    std::vector<AsmMatrix> two = enumerate_asm(2);
    REQUIRE(two.size() == 2);
    CHECK(two[0] == mat(2, {0, 1, 1, 0}));
    CHECK(two[1] == mat(2, {1, 0, 0, 1}));

    CHECK(enumerate_asm(3).size() == 7);
    CHECK(enumerate_asm(4).size() == 42);
    CHECK_THROWS_AS((void)enumerate_asm(0), StructuralError);
    CHECK_THROWS_AS((void)enumerate_asm(7), StructuralError);
}

TEST_CASE("statistics on hand-checked matrices") {
    AsmStatistics center = asm_statistics(mat(3, {0, 1, 0, 1, -1, 1, 0, 1, 0}));
    CHECK(center.nu == 1);
    CHECK(center.mu == 1);
    CHECK(center.rho == 1);

    AsmStatistics id3 = asm_statistics(mat(3, {1, 0, 0, 0, 1, 0, 0, 0, 1}));
    CHECK(id3.nu == 0);
    CHECK(id3.mu == 0);
    CHECK(id3.rho == 0);

    AsmStatistics anti = asm_statistics(mat(3, {0, 0, 1, 0, 1, 0, 1, 0, 0}));
    CHECK(anti.nu == 3);
    CHECK(anti.mu == 0);
    CHECK(anti.rho == 2);
}

TEST_CASE("lattice correspondence on the smallest cases") {
    SixVertexConfiguration c1 = asm_to_sixvertex(mat(1, {1}));
    CHECK(c1.vert == std::vector<std::vector<int>>{{0}, {1}});
    CHECK(c1.horiz == std::vector<std::vector<int>>{{1, 0}});
    CHECK(is_sixvertex_dw(c1));
    CHECK(sixvertex_to_asm(c1) == mat(1, {1}));

    CHECK(enumerate_sixvertex_dw(2).size() == 2);
    for (const SixVertexConfiguration& c : enumerate_sixvertex_dw(3))
        CHECK(asm_to_sixvertex(sixvertex_to_asm(c)) == c);

    SixVertexConfiguration broken = c1;
    broken.horiz[0][1] = 1;
    CHECK_FALSE(is_sixvertex_dw(broken));
    CHECK_THROWS_AS((void)sixvertex_to_asm(broken), StructuralError);
    CHECK_THROWS_AS((void)asm_to_sixvertex(mat(1, {0})), StructuralError);
}

TEST_CASE("vertex tallies track the matrix statistics") {
    SixVertexConfiguration id2 = asm_to_sixvertex(mat(2, {1, 0, 0, 1}));
    VertexCounts k = vertex_type_counts(id2);
    CHECK(k.a0 == 0);
    CHECK(k.a1 == 0);
    CHECK(k.b0 == 1);
    CHECK(k.b1 == 1);
    CHECK(k.c0 == 0);
    CHECK(k.c1 == 2);
    CHECK(k.a0 + k.a1 + k.b0 + k.b1 + k.c0 + k.c1 == 4);
}

TEST_CASE("generating function and the one-variable identity") {
    VarTablePtr t = VarTable::make({"x", "y", "z"});
    CHECK(asm_generating_function(1, t).to_string() == "1");
    CHECK(asm_generating_function(2, t).to_string() == "x*z + 1");
    CHECK(asm_generating_function(3, t).to_string() ==
          "x^3*z^2 + x^2*z^2 + x^2*z + x*y*z + x*z + x + 1");
    CHECK(verify_u_formula(2).all());
}
