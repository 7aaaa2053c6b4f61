#include "doctest.h"

#include "sixv/schur.hpp"

using namespace sixv;

TEST_CASE("bialternant matches hand-expanded Schur polynomials") {
    SchurContext ctx = SchurContext::make(2);
    Polynomial z1 = ctx.z(1), z2 = ctx.z(2);
    CHECK(schur_bialternant(Partition(), ctx) == ctx.constant(1));
    CHECK(schur_bialternant(Partition(std::vector<int>{1}), ctx) == z1 + z2);
    CHECK(schur_bialternant(Partition(std::vector<int>{2, 1}), ctx) ==
          z1.pow(2) * z2 + z1 * z2.pow(2));
    CHECK(schur_bialternant(Partition(std::vector<int>{2}), ctx) ==
          z1.pow(2) + z1 * z2 + z2.pow(2));
}

TEST_CASE("principal specialization counts tableaux") {
    SchurContext ctx = SchurContext::make(3);
    Polynomial s = schur_bialternant(Partition(std::vector<int>{2, 1}), ctx);
    CHECK(s.evaluate_all({{"z1", Rational(1)}, {"z2", Rational(1)}, {"z3", Rational(1)}}) ==
          Rational(8));
}

TEST_CASE("interlacing-chain form agrees with a bound beta") {
    SchurContext ctx = SchurContext::make(2, Rational(1, 2));
    CHECK_FALSE(ctx.beta_formal());
    for (const Partition& lambda : partitions_in_box(2, 3))
        CHECK(schur_combinatorial(lambda, ctx) == schur_bialternant(lambda, ctx));
}

TEST_CASE("empty partition has a single trivial chain") {
    SchurContext ctx = SchurContext::make(1);
    CHECK(schur_combinatorial(Partition(), ctx) == ctx.constant(1));
    std::vector<ChainTerm> terms = combinatorial_chain_terms(Partition(), ctx);
    CHECK(terms.size() == 1);
}

TEST_CASE("Q polynomials and the single-variable skew rule") {
    SchurContext ctx1 = SchurContext::make(1);
    CHECK(schur_q(StrictPartition(std::vector<int>{2}), ctx1) ==
          ctx1.z(1).pow(2).scaled(Rational(2)));

    SchurContext ctx = SchurContext::make(2);
    Polynomial z1 = ctx.z(1), z2 = ctx.z(2);
    CHECK(schur_q(StrictPartition(std::vector<int>{2, 1}), ctx) ==
          ((z1.pow(2) * z2) + (z1 * z2.pow(2))).scaled(Rational(4)));

    VarTablePtr t = VarTable::make({"z"});
    Polynomial z = Polynomial::variable(t, "z");
    CHECK(skew_q_single(StrictPartition(std::vector<int>{3, 1}),
                        StrictPartition(std::vector<int>{2}), z) ==
          z.pow(2).scaled(Rational(4)));
    CHECK(skew_q_single(StrictPartition(std::vector<int>{3, 1}),
                        StrictPartition(std::vector<int>{3}), z) ==
          z.scaled(Rational(2)));
    CHECK(skew_q_single(StrictPartition(std::vector<int>{3, 2}),
                        StrictPartition(std::vector<int>{1}), z)
              .is_zero());
    CHECK_THROWS_AS((void)skew_q_single(StrictPartition(std::vector<int>{3, 1}),
                                        StrictPartition(std::vector<int>{2, 1}), z),
                    StructuralError);
}

TEST_CASE("box Cauchy determinant: column indexing works, row indexing does not") {
    CHECK(cauchy_sides(2, 1, CauchyIndexing::columns).equal);
    CHECK(cauchy_sides(3, 2, CauchyIndexing::columns).equal);
    CHECK(cauchy_sides(3, 1, CauchyIndexing::rows).equal);
    CHECK_FALSE(cauchy_sides(3, 2, CauchyIndexing::rows).equal);
}
