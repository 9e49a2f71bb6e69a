#include <catch2/catch_amalgamated.hpp>

#include "qsmash/semisimple.hpp"
#include "qsmash/symmetric_group.hpp"

using namespace qsmash;

namespace {

MatrixAlgebra full_matrix_algebra(int n) {
    MatrixAlgebra alg{n, {}};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            RatMatrix e(n, n);
            e(i, j) = 1;
            alg.basis.push_back(e);
        }
    return alg;
}

MatrixAlgebra upper_triangular_2() {
    MatrixAlgebra alg{2, {}};
    RatMatrix e11(2, 2), e22(2, 2), e12(2, 2);
    e11(0, 0) = 1;
    e22(1, 1) = 1;
    e12(0, 1) = 1;
    alg.basis = {e11, e12, e22};
    return alg;
}

MatrixAlgebra conjugated(const MatrixAlgebra& alg, const RatMatrix& g, const RatMatrix& ginv) {
    MatrixAlgebra out{alg.ambient, {}};
    for (const RatMatrix& b : alg.basis) out.basis.push_back(g * b * ginv);
    return out;
}

void check_decomposition(const MatrixAlgebra& alg, const SemisimpleDecomposition& dec) {
    RatMatrix one = algebra_identity(alg);
    // Central idempotents: orthogonal, sum to the identity.
    RatMatrix sum_z(alg.ambient, alg.ambient);
    for (const auto& b : dec.blocks) {
        CHECK(b.central_idempotent * b.central_idempotent == b.central_idempotent);
        sum_z += b.central_idempotent;
    }
    CHECK(sum_z == one);
    // Primitive idempotents refine, are orthogonal, and sum to the identity.
    auto prims = dec.primitive_idempotents();
    RatMatrix sum_e(alg.ambient, alg.ambient);
    for (const auto& e : prims) {
        CHECK(e * e == e);
        sum_e += e;
    }
    CHECK(sum_e == one);
    for (size_t i = 0; i < prims.size(); ++i)
        for (size_t j = 0; j < prims.size(); ++j)
            if (i != j) CHECK((prims[i] * prims[j]).is_zero());
    // Matrix unit relations within each block.
    for (const auto& b : dec.blocks) {
        for (int i = 1; i <= b.matrix_size; ++i)
            for (int j = 1; j <= b.matrix_size; ++j)
                for (int k = 1; k <= b.matrix_size; ++k)
                    for (int l = 1; l <= b.matrix_size; ++l) {
                        RatMatrix prod = b.units.at({i, j}) * b.units.at({k, l});
                        if (j == k)
                            CHECK(prod == b.units.at({i, l}));
                        else
                            CHECK(prod.is_zero());
                    }
        CHECK(b.units.at({1, 1}) == b.diag_units[0]);
    }
}

}  // namespace

TEST_CASE("radical") {
    CHECK(radical(full_matrix_algebra(3)).empty());

    auto rad = radical(upper_triangular_2());
    REQUIRE(rad.size() == 1);
    CHECK(rad[0](0, 0) == 0);
    CHECK(rad[0](1, 1) == 0);
    CHECK(rad[0](0, 1) != 0);

    // Product of two fields realized diagonally.
    MatrixAlgebra two_fields{2, {}};
    RatMatrix a(2, 2), b(2, 2);
    a(0, 0) = 1;
    b(1, 1) = 1;
    two_fields.basis = {a, b};
    CHECK(radical(two_fields).empty());
}

TEST_CASE("decompose the regular representation of S2") {
    MatrixAlgebra alg = group_algebra_realization(2);
    check_closed(alg);
    SemisimpleDecomposition dec = decompose(alg, 7);
    REQUIRE(dec.blocks.size() == 2);
    check_decomposition(alg, dec);
    // Idempotents are (1 +- swap)/2 in the regular realization.
    for (const auto& b : dec.blocks) {
        CHECK(b.matrix_size == 1);
        RatMatrix e = b.diag_units[0];
        CHECK((e(0, 0) == rat(1, 2)));
        CHECK((e(0, 1) == rat(1, 2) || e(0, 1) == rat(-1, 2)));
    }
}

TEST_CASE("decompose k[S3]: blocks of dimension 1,1,4") {
    MatrixAlgebra alg = group_algebra_realization(3);
    SemisimpleDecomposition dec = decompose(alg, 5);
    check_decomposition(alg, dec);
    std::vector<int> sizes;
    for (const auto& b : dec.blocks) sizes.push_back(b.matrix_size * b.matrix_size);
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{1, 1, 4});
}

TEST_CASE("decompose the full matrix algebra") {
    MatrixAlgebra alg = full_matrix_algebra(3);
    SemisimpleDecomposition dec = decompose(alg, 3);
    REQUIRE(dec.blocks.size() == 1);
    CHECK(dec.blocks[0].matrix_size == 3);
    check_decomposition(alg, dec);
}

TEST_CASE("decompose recovers block sizes after a random change of basis") {
    // Mat_2 x Mat_1 x Mat_1 embedded block-diagonally, then conjugated.
    MatrixAlgebra alg{4, {}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            RatMatrix e(4, 4);
            e(i, j) = 1;
            alg.basis.push_back(e);
        }
    RatMatrix f1(4, 4), f2(4, 4);
    f1(2, 2) = 1;
    f2(3, 3) = 1;
    alg.basis.push_back(f1);
    alg.basis.push_back(f2);

    Rng rng(99);
    RatMatrix g = random_invertible(rng, 4, 3);
    RatMatrix ginv = *solve_left(g, RatMatrix::identity(4));
    // solve_left gives x with x*g = I, i.e. the left inverse.
    REQUIRE(ginv * g == RatMatrix::identity(4));
    MatrixAlgebra scrambled = conjugated(alg, g, ginv);
    SemisimpleDecomposition dec = decompose(scrambled, 17);
    std::vector<int> sizes;
    for (const auto& b : dec.blocks) sizes.push_back(b.matrix_size);
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{1, 1, 2});
    check_decomposition(scrambled, dec);
}

TEST_CASE("matrix_units_from diagonal idempotents of Mat_2") {
    MatrixAlgebra alg = full_matrix_algebra(2);
    RatMatrix e1(2, 2), e2(2, 2);
    e1(0, 0) = 1;
    e2(1, 1) = 1;
    auto units = matrix_units_from({e1, e2}, alg);
    CHECK(units.at({1, 2}) * units.at({2, 1}) == e1);
    CHECK(units.at({2, 1}) * units.at({1, 2}) == e2);
    CHECK(units.at({1, 1}) == e1);

    // Inconsistent grouping: two idempotents from different blocks.
    MatrixAlgebra diag{2, {}};
    diag.basis = {e1, e2};
    CHECK_THROWS_AS(matrix_units_from({e1, e2}, diag), std::domain_error);
}

TEST_CASE("matrix units from young symmetrizer seeds in k[S3]") {
    auto units = symmetric_group_matrix_units({2, 1});
    REQUIRE(units.size() == 2);
    GroupAlgebraElement e11 = units[0][0];
    CHECK(e11 == young_symmetrizer(row_reading_tableau({2, 1})));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) {
                    GroupAlgebraElement prod = units[i][j] * units[k][l];
                    if (j == k)
                        CHECK(prod == units[i][l]);
                    else
                        CHECK(prod.terms.empty());
                }
    // The diagonal units sum to the central idempotent of the block.
    GroupAlgebraElement sum = units[0][0] + units[1][1];
    CHECK(sum == central_idempotent({2, 1}));
}

TEST_CASE("newton lifting of idempotents through the radical") {
    // Upper triangular 2x2: semisimple quotient Q x Q, radical the strict part.
    MatrixAlgebra alg = upper_triangular_2();
    auto idems = idempotents_in_end(alg, 3);
    REQUIRE(idems.size() == 2);
    RatMatrix sum(2, 2);
    for (const auto& e : idems) {
        CHECK(e * e == e);
        sum += e;
    }
    CHECK(sum == algebra_identity(alg));
    CHECK((idems[0] * idems[1]).is_zero());
    CHECK((idems[1] * idems[0]).is_zero());
}

TEST_CASE("idempotents_in_end on a semisimple algebra returns primitives") {
    MatrixAlgebra alg = full_matrix_algebra(2);
    auto idems = idempotents_in_end(alg, 3);
    CHECK(idems.size() == 2);
}
