#include <doctest.h>

#include "drazin/decompose.hpp"
#include "drazin/drazin.hpp"
#include "drazin/generate.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace drazin;
using test_util::g;

TEST_CASE("drazin inverse base cases and the rank-1 example") {
    DrazinResult nil = drazin_inverse(matrix_of({{0, 1}, {0, 0}}));
    CHECK(nil.a_d.is_zero());
    CHECK(nil.index == 2);
    CHECK(nil.a_pi == Matrix::identity(2));

    DrazinResult inv = drazin_inverse(matrix_of({{2, 0}, {0, 3}}));
    CHECK(inv.a_d == matrix_of({{g("1/2"), 0}, {0, g("1/3")}}));
    CHECK(inv.index == 0);
    CHECK(inv.a_pi.is_zero());

    // frozen from the eigendecomposition S diag(1/2,0) S^{-1},
    // eigenvectors (1,0) and (1,-2)
    DrazinResult structured = drazin_inverse(matrix_of({{2, 1}, {0, 0}}));
    CHECK(structured.a_d == matrix_of({{g("1/2"), g("1/4")}, {0, 0}}));
    CHECK(structured.index == 1);

    DrazinResult zero1 = drazin_inverse(matrix_of({{0}}));
    CHECK(zero1.index == 1);
    CHECK(zero1.a_d.is_zero());

    CHECK_THROWS_AS(drazin_inverse(Matrix::zero(2, 3)), ShapeError);
}

TEST_CASE("axiom verdicts break down per identity") {
    Matrix a = matrix_of({{2, 0}, {0, 0}});
    AxiomReport good = verify_drazin_axioms(a, drazin_inverse(a).a_d);
    CHECK(good.commute);
    CHECK(good.inner);
    CHECK(good.defect.nilpotent);
    CHECK(good.all());

    AxiomReport bad = verify_drazin_axioms(a, Matrix::zero(2, 2));
    CHECK(bad.commute);
    CHECK(bad.inner); // 0 = 0 a 0
    CHECK(!bad.defect.nilpotent);
    CHECK(!bad.all());

    Matrix idem = matrix_of({{1, 1}, {0, 0}});
    CHECK(verify_drazin_axioms(idem, idem).all()); // own inverse
}

TEST_CASE("cline transfer") {
    Matrix a = matrix_of({{0, 1}, {0, 0}});
    Matrix b = matrix_of({{0, 0}, {1, 0}});
    CHECK(cline_transfer(a, b) == matrix_of({{0, 0}, {0, 1}}));
    CHECK(cline_transfer(a, b) == drazin_inverse(b * a).a_d);

    Matrix m = matrix_of({{2, 1}, {0, 0}});
    CHECK(cline_transfer(m, Matrix::identity(2)) == drazin_inverse(m).a_d);

    Matrix m_d = drazin_inverse(m).a_d;
    CHECK(cline_transfer(m, m_d) == drazin_inverse(m_d * m).a_d);
}

TEST_CASE("commuting product rule") {
    Matrix a = matrix_of({{2, 0}, {0, 0}});
    Matrix b = matrix_of({{3, 0}, {0, 5}});
    CHECK(commuting_product_drazin(a, b) == matrix_of({{g("1/6"), 0}, {0, 0}}));
    CHECK(commuting_product_drazin(a, b) == drazin_inverse(a * b).a_d);

    Matrix m = matrix_of({{2, 1}, {0, 0}});
    CHECK(commuting_product_drazin(m, Matrix::identity(2)) ==
          drazin_inverse(m).a_d);

    Matrix nil = matrix_of({{0, 1}, {0, 0}});
    CHECK(commuting_product_drazin(nil, nil).is_zero());

    CHECK_THROWS_AS(
        commuting_product_drazin(nil, matrix_of({{0, 0}, {1, 0}})),
        HypothesisError);
}

TEST_CASE("additive rule for pq = 0") {
    Matrix p = matrix_of({{1, 0}, {0, 0}});
    Matrix q = matrix_of({{0, 0}, {1, 0}});
    CHECK(additive_pq_zero(p, q) == matrix_of({{1, 0}, {1, 0}}));
    CHECK(additive_pq_zero(p, q) == drazin_inverse(p + q).a_d);

    Matrix m = matrix_of({{2, 1}, {0, 0}});
    CHECK(additive_pq_zero(m, Matrix::zero(2, 2)) == drazin_inverse(m).a_d);
    CHECK(additive_pq_zero(Matrix::zero(2, 2), m) == drazin_inverse(m).a_d);

    CHECK_THROWS_AS(additive_pq_zero(Matrix::identity(2), m), HypothesisError);
}

TEST_CASE("agreement with the independent core-nilpotent oracle") {
    const Kind kinds[] = {Kind::nilpotent, Kind::idempotent, Kind::unit,
                          Kind::drazin_structured};
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        GenSpec spec;
        spec.seed = derive_seed(23, seed);
        spec.size = 1 + seed % 6;
        spec.kind = kinds[seed % 4];
        Matrix a = gen_element(spec);
        DrazinResult d = drazin_inverse(a);
        CHECK(d.a_d == testing::drazin_oracle(a));
        CHECK(d.index == testing::index_oracle(a));
        CHECK(d.a_pi == Matrix::identity(a.rows()) - a * d.a_d);
    }
}

TEST_CASE("rank-1 closed formula agrees") {
    Matrix a = matrix_of({{2, 1}, {0, 0}});
    CHECK(drazin_inverse(a).a_d == testing::rank1_drazin_oracle(a));
    Matrix b = matrix_of({{1, 1}, {-1, -1}}); // trace 0, nilpotent
    CHECK(drazin_inverse(b).a_d == testing::rank1_drazin_oracle(b));
}

TEST_CASE("defining invariants on generated instances") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        GenSpec spec;
        spec.seed = derive_seed(29, seed);
        spec.size = 2 + seed % 5;
        spec.kind = Kind::drazin_structured;
        Matrix a = gen_element(spec);
        DrazinResult d = drazin_inverse(a);

        CHECK(verify_drazin_axioms(a, d.a_d).all());

        // spectral idempotent facts
        CHECK(d.a_pi * d.a_pi == d.a_pi);
        CHECK(d.a_pi * a == a * d.a_pi);
        CHECK(is_nilpotent(a * d.a_pi));
        CHECK(try_inverse(a + d.a_pi).has_value());

        // index facts: a^{k+1} a_d = a^k
        CHECK(a.pow(d.index + 1) * d.a_d == a.pow(d.index));

        // (a^d)^d = a^2 a^d
        CHECK(drazin_inverse(d.a_d).a_d == a * a * d.a_d);

        // a^d lies in the unital algebra generated by a
        auto coeffs = express_as_polynomial(a, d.a_d);
        REQUIRE(coeffs.has_value());
        CHECK(eval_polynomial(a, *coeffs) == d.a_d);
    }
}

TEST_CASE("uniqueness: independently constructed candidates coincide") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        GenSpec spec;
        spec.seed = derive_seed(31, seed);
        spec.size = 2 + seed % 4;
        spec.kind = Kind::drazin_structured;
        Matrix a = gen_element(spec);
        Matrix direct = drazin_inverse(a).a_d;

        CHECK(quasipolar(a).b == direct);
        CHECK(corner_characterize(a).a_d == direct);

        // any candidate passing the axioms is the inverse
        CHECK(verify_drazin_axioms(a, quasipolar(a).b).all());
    }
}

TEST_CASE("similarity covariance") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        GenSpec spec;
        spec.seed = derive_seed(37, seed);
        spec.size = 1 + seed % 6;
        spec.kind = Kind::drazin_structured;
        Matrix a = gen_element(spec);
        SimilarityData sim = similarity_conjugate(a, derive_seed(41, seed));
        CHECK(drazin_inverse(sim.conjugated).a_d ==
              sim.s * drazin_inverse(a).a_d * sim.s_inv);
    }
}
