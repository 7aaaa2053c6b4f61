#include "doctest.h"

#include <vector>

#include "sixv/partitions.hpp"

using namespace sixv;

TEST_CASE("partition basics") {
    Partition p = Partition::parse("3,1");
    CHECK(p.part(1) == 3);
    CHECK(p.part(2) == 1);
    CHECK(p.part(3) == 0);
    CHECK(p.sum() == 4);
    CHECK(p.to_string() == "3,1");
    CHECK(p.padded(4).size() == 4);
    CHECK(p == Partition(std::vector<int>{3, 1, 0, 0}));
    CHECK(p.fits_box(2, 3));
    CHECK_FALSE(p.fits_box(1, 3));
    CHECK_FALSE(p.fits_box(2, 2));
    CHECK(Partition::parse("").to_string() == "");
    CHECK_THROWS_AS((void)Partition(std::vector<int>{1, 2}), StructuralError);
    CHECK_THROWS_AS((void)Partition(std::vector<int>{-1}), StructuralError);
}

TEST_CASE("strict partitions and occupations") {
    OccupationVector occ(std::vector<int>{1, 0, 1});
    CHECK(occ.sites() == 3);
    CHECK(occ.particles() == 2);
    CHECK(occ.is_strict());
    StrictPartition x = occupation_to_strict(occ);
    CHECK(x == StrictPartition(std::vector<int>{3, 1}));
    CHECK(strict_to_occupation(x, 3) == occ);
    CHECK(strict_to_occupation(x, 5).sites() == 5);
    CHECK_THROWS_AS((void)occupation_to_strict(OccupationVector(std::vector<int>{2, 0})),
                    NotStrictSector);
    CHECK_THROWS_AS((void)StrictPartition(std::vector<int>{2, 2}), StructuralError);
    CHECK_THROWS_AS((void)StrictPartition(std::vector<int>{0}), StructuralError);
}

TEST_CASE("interlacing agrees with the occupation criterion") {
    for (int m = 1; m <= 5; ++m) {
        for (int np = 0; np + 1 <= m; ++np) {
            for (const OccupationVector& n : strict_occupations(m, np)) {
                for (const OccupationVector& mm : strict_occupations(m, np + 1)) {
                    bool a = admissible(mm, n);
                    bool i = interlaces(occupation_to_strict(mm), occupation_to_strict(n));
                    CHECK(a == i);
                }
            }
        }
    }
}

TEST_CASE("new parts count") {
    StrictPartition y(std::vector<int>{3, 1});
    CHECK(new_parts_count(y, StrictPartition(std::vector<int>{2})) == 2);
    CHECK(new_parts_count(y, StrictPartition(std::vector<int>{1})) == 1);
    CHECK(new_parts_count(y, StrictPartition(std::vector<int>{3})) == 1);
}

TEST_CASE("interlacing chains enumerate completely and in order") {
    std::vector<InterlacingChain> chains = enumerate_chains(StrictPartition(std::vector<int>{3, 1}));
    REQUIRE(chains.size() == 3);
    for (std::size_t i = 0; i < chains.size(); ++i) {
        const InterlacingChain& c = chains[i];
        REQUIRE(c.levels.size() == 3);
        CHECK(c.levels[0].size() == 0);
        CHECK(c.levels[2] == StrictPartition(std::vector<int>{3, 1}));
        CHECK(c.levels[1] == StrictPartition(std::vector<int>{static_cast<int>(i) + 1}));
        for (std::size_t k = 1; k < c.levels.size(); ++k)
            CHECK(interlaces(c.levels[k], c.levels[k - 1]));
    }

    std::vector<InterlacingChain> big = enumerate_chains(StrictPartition(std::vector<int>{4, 2, 1}));
    CHECK(big.size() == 14);
    for (const InterlacingChain& c : big) {
        REQUIRE(c.levels.size() == 4);
        for (std::size_t k = 1; k < c.levels.size(); ++k)
            CHECK(interlaces(c.levels[k], c.levels[k - 1]));
    }
}

TEST_CASE("box dual and index conversions") {
    CHECK(poincare_dual(Partition(std::vector<int>{1, 0}), 5, 2) ==
          Partition(std::vector<int>{3, 2}));
    CHECK(poincare_dual(Partition(std::vector<int>{2, 1}), 5, 2) ==
          Partition(std::vector<int>{2, 1}));
    for (const Partition& lambda : partitions_in_box(2, 3))
        CHECK(poincare_dual(poincare_dual(lambda, 5, 2), 5, 2) == lambda);

    for (const OccupationVector& occ : strict_occupations(5, 2)) {
        StrictPartition x = occupation_to_strict(occ);
        CHECK(x_of_lambda(lambda_of_x(x, 2), 2) == x);
    }
    CHECK(lambda_of_x(StrictPartition(std::vector<int>{3, 1}), 2) ==
          Partition(std::vector<int>{1, 0}));

    CHECK(complement_strict(StrictPartition(std::vector<int>{3, 1}), 5) ==
          StrictPartition(std::vector<int>{5, 3}));
    for (const OccupationVector& occ : strict_occupations(4, 2)) {
        StrictPartition x = occupation_to_strict(occ);
        CHECK(complement_strict(complement_strict(x, 4), 4) == x);
    }
}

TEST_CASE("box and sector enumerations") {
    std::vector<Partition> box = partitions_in_box(2, 2);
    REQUIRE(box.size() == 6);
    CHECK(box.front() == Partition());
    CHECK(box.back() == Partition(std::vector<int>{2, 2}));
    for (const Partition& lambda : box) CHECK(lambda.fits_box(2, 2));

    std::vector<OccupationVector> occs = strict_occupations(4, 2);
    CHECK(occs.size() == 6);
    for (const OccupationVector& occ : occs) {
        CHECK(occ.sites() == 4);
        CHECK(occ.particles() == 2);
        CHECK(occ.is_strict());
    }
    CHECK(strict_occupations(3, 0).size() == 1);
}
