#include <catch2/catch_amalgamated.hpp>

#include "qsmash/partitions.hpp"

using namespace qsmash;

TEST_CASE("partitions_of order and row bound") {
    CHECK(partitions_of(2, 2) == std::vector<Partition>{{2}, {1, 1}});
    // Block labels of the degree-3 idempotent table.
    CHECK(partitions_of(3, 3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
    CHECK(partitions_of(4, 1) == std::vector<Partition>{{4}});
    CHECK(partitions_of(4) ==
          std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
    CHECK(partitions_of(0) == std::vector<Partition>{{}});
}

TEST_CASE("partition tokens") {
    CHECK(partition_str({2, 1}) == "[2,1]");
    CHECK(partition_parse("[2,1]") == Partition{2, 1});
    CHECK(partition_parse("[]") == Partition{});
    CHECK_THROWS_AS(partition_parse("[1,2]"), std::invalid_argument);
}

TEST_CASE("hook products") {
    CHECK(hook_product({2, 1}) == 3);  // hooks 3,1,1
    CHECK(hook_product({4}) == factorial(4));
    CHECK(hook_product({1, 1, 1}) == 6);  // hooks 3,2,1
}

TEST_CASE("irreducible dimensions") {
    CHECK(dim_symgroup_irrep({2, 1}) == 2);
    CHECK(dim_gl_irrep({1}, 5) == 5);
    CHECK(dim_gl_irrep({1, 1}, 3) == 3);
    CHECK(dim_gl_irrep({2}, 3) == 6);
    CHECK(dim_gl_irrep({2, 1}, 3) == 8);
    CHECK(dim_gl_irrep({3}, 3) == 10);
    CHECK(dim_gl_irrep({2, 1}, 2) == 2);
    CHECK(dim_gl_irrep({3}, 2) == 4);
    CHECK_THROWS_AS(dim_gl_irrep({1, 1, 1}, 2), std::invalid_argument);
}

TEST_CASE("sum of squared dimensions is d!") {
    for (int d = 1; d <= 6; ++d) {
        Int sum = 0;
        for (const Partition& p : partitions_of(d)) {
            Int dim = dim_symgroup_irrep(p);
            sum += dim * dim;
        }
        CHECK(sum == factorial(d));
    }
}

TEST_CASE("characters") {
    CHECK(symgroup_character({1, 1}, {2}) == -1);
    CHECK(symgroup_character({4}, {2, 1, 1}) == 1);
    CHECK(symgroup_character({5}, {3, 2}) == 1);
    CHECK(symgroup_character({2, 1}, {1, 1, 1}) == 2);
    CHECK(symgroup_character({2, 1}, {3}) == -1);
    CHECK(symgroup_character({2, 1}, {2, 1}) == 0);
}

TEST_CASE("character table column orthogonality up to degree 6") {
    for (int d = 1; d <= 6; ++d) {
        const CharacterTable& t = character_table(d);
        size_t n = t.classes.size();
        for (size_t c1 = 0; c1 < n; ++c1)
            for (size_t c2 = 0; c2 < n; ++c2) {
                Int sum = 0;
                for (size_t r = 0; r < n; ++r) sum += Int(t.chi[r][c1]) * Int(t.chi[r][c2]);
                if (c1 == c2)
                    CHECK(sum == centralizer_order(t.classes[c1]));
                else
                    CHECK(sum == 0);
            }
    }
}

TEST_CASE("kronecker coefficients") {
    // Trivial factor acts as identity.
    for (const Partition& p : partitions_of(4))
        for (const Partition& q : partitions_of(4))
            CHECK(kronecker({4}, p, q) == (p == q ? 1 : 0));
    CHECK(kronecker({1, 1}, {1, 1}, {2}) == 1);
    CHECK(kronecker({2, 1}, {2, 1}, {2, 1}) == 1);
}

TEST_CASE("kronecker symmetry and dimension identity") {
    int d = 4;
    const CharacterTable& t = character_table(d);
    for (const Partition& rho : t.irreps)
        for (const Partition& pi : t.irreps) {
            Int total = 0;
            for (const Partition& sigma : t.irreps) {
                long g = kronecker(rho, pi, sigma);
                CHECK(g == kronecker(pi, rho, sigma));
                CHECK(g == kronecker(sigma, pi, rho));
                total += Int(g) * dim_symgroup_irrep(sigma);
            }
            CHECK(total == dim_symgroup_irrep(rho) * dim_symgroup_irrep(pi));
        }
}

TEST_CASE("littlewood-richardson") {
    CHECK(lr_coefficient({1}, {1}, {2}) == 1);
    CHECK(lr_coefficient({1}, {1}, {1, 1}) == 1);
    CHECK(lr_coefficient({1}, {2}, {2, 1}) == 1);
    CHECK(lr_coefficient({1}, {2}, {3}) == 1);
    CHECK(lr_coefficient({1}, {2}, {1, 1, 1}) == 0);
    CHECK(lr_coefficient({2, 1}, {2, 1}, {3, 2, 1}) == 2);
    CHECK(lr_coefficient({}, {2, 1}, {2, 1}) == 1);
}

TEST_CASE("lr symmetry in the first two arguments") {
    for (int total = 2; total <= 6; ++total)
        for (const Partition& nu : partitions_of(total))
            for (int a = 0; a <= total; ++a)
                for (const Partition& lam : partitions_of(a))
                    for (const Partition& mu : partitions_of(total - a))
                        CHECK(lr_coefficient(lam, mu, nu) == lr_coefficient(mu, lam, nu));
}

TEST_CASE("pieri specialization is the add-one-box indicator") {
    for (int d = 1; d <= 5; ++d)
        for (const Partition& lam : partitions_of(d))
            for (const Partition& nu : partitions_of(d + 1)) {
                long c = lr_coefficient(lam, {1}, nu);
                // indicator: nu covers lam
                bool covers = true;
                if (nu.size() < lam.size() || nu.size() > lam.size() + 1) covers = false;
                int diff = 0;
                for (size_t i = 0; covers && i < nu.size(); ++i) {
                    int l = i < lam.size() ? lam[i] : 0;
                    if (nu[i] < l) covers = false;
                    diff += nu[i] - l;
                }
                covers = covers && diff == 1;
                CHECK(c == (covers ? 1 : 0));
            }
}

TEST_CASE("branching multiplicities") {
    CHECK(branching_multiplicity({3}, {4}) == 1);
    CHECK(branching_multiplicity({3}, {3, 1}) == 1);
    CHECK(branching_multiplicity({2, 1}, {2, 1, 1}) == 1);
    CHECK(branching_multiplicity({2, 1}, {4}) == 0);
}

TEST_CASE("standard tableaux") {
    Tableau rr = row_reading_tableau({2, 1});
    CHECK(rr.is_standard());
    CHECK(standard_tableaux({2, 1}).size() == 2);
    CHECK(standard_tableaux({2, 2}).size() == 2);
    CHECK(standard_tableaux({3, 2}).size() == 5);
    for (int d = 1; d <= 5; ++d)
        for (const Partition& p : partitions_of(d))
            CHECK(Int(standard_tableaux(p).size()) == dim_symgroup_irrep(p));
}
