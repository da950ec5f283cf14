#include <doctest.h>

#include "drazin/decompose.hpp"
#include "drazin/generate.hpp"
#include "test_util.hpp"

using namespace drazin;
using test_util::g;

TEST_CASE("strongly Drazin verdict") {
    Matrix idem = matrix_of({{1, 1}, {0, 0}});
    StronglyDrazinVerdict v1 = strongly_drazin_check(idem);
    CHECK(v1.holds);
    CHECK(v1.e == idem); // a^2 = a, so e is a itself
    CHECK(first_failure(certify_strongly_drazin(idem, v1)).empty());

    Matrix unipotent = matrix_of({{1, 1}, {0, 1}});
    StronglyDrazinVerdict v2 = strongly_drazin_check(unipotent);
    CHECK(v2.holds);
    CHECK(v2.e == Matrix::identity(2));
    CHECK(is_nilpotent(unipotent - v2.e));

    CHECK(!strongly_drazin_check(matrix_of({{2, 0}, {0, 0}})).holds);
}

TEST_CASE("thm 2.2 witness check") {
    Matrix a = matrix_of({{2, 0}, {0, 0}});
    CHECK(thm22_witness_check(a, matrix_of({{g("1/2"), 0}, {0, 0}})));
    CHECK(!thm22_witness_check(a, Matrix::zero(2, 2)));

    Matrix b = matrix_of({{2, 1}, {0, 0}});
    CHECK(thm22_witness_check(b, matrix_of({{g("1/2"), g("1/4")}, {0, 0}})));
}

TEST_CASE("thm 2.2 refinement") {
    Matrix a = matrix_of({{2, 0}, {0, 0}});
    WitnessRefinement r = thm22_refine(a, matrix_of({{g("1/2"), 0}, {0, 0}}));
    CHECK(r.z == matrix_of({{g("1/2"), 0}, {0, 0}}));
    CHECK(r.e == matrix_of({{1, 0}, {0, 0}}));
    CHECK(r.a_d == matrix_of({{g("1/2"), 0}, {0, 0}}));
    CHECK(first_failure(certify_refinement(a, r.z, r)).empty());

    Matrix nil = matrix_of({{0, 1}, {0, 0}});
    WitnessRefinement rn = thm22_refine(nil, Matrix::zero(2, 2));
    CHECK(rn.z.is_zero());
    CHECK(rn.e.is_zero());
    CHECK(rn.a_d.is_zero());

    Matrix b = matrix_of({{2, 1}, {0, 0}});
    Matrix b_d = matrix_of({{g("1/2"), g("1/4")}, {0, 0}});
    CHECK(thm22_refine(b, b_d).a_d == b_d);

    // named hypothesis violations
    try {
        thm22_refine(nil, matrix_of({{0, 0}, {1, 0}}));
        FAIL("expected HypothesisError");
    } catch (const HypothesisError& e) {
        CHECK(e.condition() == "xa = ax");
    }
    try {
        thm22_refine(matrix_of({{2, 0}, {0, 0}}), Matrix::zero(2, 2));
        FAIL("expected HypothesisError");
    } catch (const HypothesisError& e) {
        CHECK(e.condition() == "a - a^2 x nilpotent");
    }
}

TEST_CASE("quasipolar certificates") {
    Matrix a = matrix_of({{2, 1}, {0, 0}});
    QuasipolarCertificate c = quasipolar(a);
    CHECK(c.p == matrix_of({{0, g("-1/2")}, {0, 1}}));
    CHECK((a * c.p).is_zero());
    CHECK(c.b == drazin_inverse(a).a_d);
    CHECK(first_failure(certify_quasipolar(a, c)).empty());

    Matrix d = matrix_of({{2, 0}, {0, 0}});
    QuasipolarCertificate c2 = quasipolar_with(d, matrix_of({{0, 0}, {0, 1}}));
    CHECK(c2.b == matrix_of({{g("1/2"), 0}, {0, 0}}));

    Matrix unit = matrix_of({{2, 1}, {1, 1}});
    QuasipolarCertificate c3 = quasipolar_with(unit, Matrix::zero(2, 2));
    CHECK(c3.b == *try_inverse(unit));

    // violations identify the failed condition
    try {
        quasipolar_with(matrix_of({{0, 1}, {0, 0}}),
                        matrix_of({{0, 0}, {1, 0}}));
        FAIL("expected HypothesisError");
    } catch (const HypothesisError& e) {
        CHECK(e.condition() == "pa = ap");
    }
    try {
        quasipolar_with(d, matrix_of({{-2, 0}, {0, 0}}));
        FAIL("expected HypothesisError");
    } catch (const HypothesisError& e) {
        CHECK(e.condition() == "a + p invertible");
    }
    try {
        quasipolar_with(d, Matrix::identity(2));
        FAIL("expected HypothesisError");
    } catch (const HypothesisError& e) {
        CHECK(e.condition() == "ap nilpotent");
    }
}

TEST_CASE("cor 2.3 scaler") {
    Matrix a = matrix_of({{2, 0}, {0, 0}});
    Matrix u = cor23_scaler(a);
    CHECK(u == matrix_of({{g("1/2"), 0}, {0, 1}}));
    Matrix au = a * u;
    CHECK(au == matrix_of({{1, 0}, {0, 0}}));
    CHECK(au * au == au);
    CHECK(first_failure(certify_scaler(a, u)).empty());

    Matrix inv1 = matrix_of({{2}});
    CHECK(cor23_scaler(inv1) == matrix_of({{g("1/2")}}));

    Matrix nil = matrix_of({{0, 1}, {0, 0}});
    Matrix un = cor23_scaler(nil);
    CHECK(un == *try_inverse(nil + Matrix::identity(2)));
    CHECK(is_nilpotent(nil * un));
}

TEST_CASE("eu + w decomposition") {
    Matrix a = matrix_of({{2, 0}, {0, 0}});
    EUWDecomposition d = euw_decompose(a);
    CHECK(d.e == matrix_of({{1, 0}, {0, 0}}));
    CHECK(d.u == matrix_of({{2, 0}, {0, 1}}));
    CHECK(d.w.is_zero());
    CHECK(first_failure(certify_euw(a, d)).empty());

    Matrix m = matrix_of({{2, 0, 0}, {0, 0, 1}, {0, 0, 0}});
    EUWDecomposition d3 = euw_decompose(m);
    CHECK(d3.e == matrix_of({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}));
    CHECK(d3.u == matrix_of({{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(d3.w == matrix_of({{0, 0, 0}, {0, 0, 1}, {0, 0, 0}}));
    CHECK(first_failure(certify_euw(m, d3)).empty());

    Matrix nil = matrix_of({{0, 1}, {0, 0}});
    EUWDecomposition dn = euw_decompose(nil);
    CHECK(dn.e.is_zero());
    CHECK(dn.u == Matrix::identity(2));
    CHECK(dn.w == nil);
}

TEST_CASE("sum of two units") {
    UnitPair z = two_units(Matrix::zero(3, 3));
    CHECK(z.u1 == -Matrix::identity(3));
    CHECK(z.u2 == Matrix::identity(3));

    UnitPair d = two_units(matrix_of({{2, 0}, {0, 0}}));
    CHECK(d.u1 == matrix_of({{1, 0}, {0, -1}}));
    CHECK(d.u2 == Matrix::identity(2));

    Matrix nil = matrix_of({{0, 1}, {0, 0}});
    UnitPair n = two_units(nil);
    CHECK(n.u1 == -Matrix::identity(2));
    CHECK(n.u2 == matrix_of({{1, 1}, {0, 1}}));
    CHECK(first_failure(certify_two_units(nil, n)).empty());

    CHECK_THROWS_AS(two_units(Matrix::zero(0, 0)), ShapeError);
}

TEST_CASE("corner characterization") {
    Matrix a = matrix_of({{2, 1}, {0, 0}});
    CornerData c = corner_characterize(a);
    CHECK(c.e == matrix_of({{1, g("1/2")}, {0, 0}}));
    Matrix ident = Matrix::identity(2);
    CHECK(((ident - c.e) * a * (ident - c.e)).is_zero());
    CHECK(c.a_d == drazin_inverse(a).a_d);
    CHECK(first_failure(certify_corner(a, c)).empty());

    Matrix d = matrix_of({{3, 0}, {0, 0}});
    CornerData c2 = corner_characterize_with(d, matrix_of({{1, 0}, {0, 0}}));
    CHECK(c2.a_d == matrix_of({{g("1/3"), 0}, {0, 0}}));

    Matrix unit = matrix_of({{2, 1}, {1, 1}});
    CornerData c3 = corner_characterize_with(unit, Matrix::identity(2));
    CHECK(c3.a_d == *try_inverse(unit));

    try {
        corner_characterize_with(d, matrix_of({{2, 0}, {0, 0}}));
        FAIL("expected HypothesisError");
    } catch (const HypothesisError& e) {
        CHECK(e.condition() == "e idempotent");
    }
    try {
        corner_characterize_with(matrix_of({{0, 1}, {0, 0}}),
                                 matrix_of({{1, 0}, {0, 0}}));
        FAIL("expected HypothesisError");
    } catch (const HypothesisError& e) {
        CHECK(e.condition() == "ea = ae");
    }
    // commuting idempotent that satisfies neither corner condition
    try {
        corner_characterize_with(matrix_of({{0, 1}, {0, 0}}),
                                 Matrix::identity(2));
        FAIL("expected HypothesisError");
    } catch (const HypothesisError& e) {
        CHECK(e.condition() == "eae + 1 - e invertible");
    }
}

TEST_CASE("invariant splitting") {
    Matrix a = matrix_of({{2, 0}, {0, 0}});
    Splitting s = invariant_splitting(a);
    CHECK(s.basis_p == matrix_of({{1}, {0}}));
    CHECK(s.basis_q == matrix_of({{0}, {1}}));
    CHECK(s.restriction_p == matrix_of({{2}}));
    CHECK(s.restriction_q == matrix_of({{0}}));
    CHECK(first_failure(certify_splitting(a, s)).empty());

    Matrix nil = matrix_of({{0, 1}, {0, 0}});
    Splitting sn = invariant_splitting(nil);
    CHECK(sn.basis_p.cols() == 0); // P is the zero subspace
    CHECK(sn.restriction_p.rows() == 0);
    CHECK(sn.basis_q == Matrix::identity(2));
    CHECK(sn.restriction_q == nil);
    CHECK(first_failure(certify_splitting(nil, sn)).empty());

    Matrix unit = matrix_of({{2, 1}, {1, 1}});
    Splitting su = invariant_splitting(unit);
    CHECK(su.basis_q.cols() == 0);
    CHECK(su.restriction_p == unit); // basis is the standard one here
    CHECK(first_failure(certify_splitting(unit, su)).empty());
}

TEST_CASE("decomposition certificates hold across generated instances") {
    const Kind kinds[] = {Kind::nilpotent, Kind::idempotent, Kind::unit,
                          Kind::drazin_structured};
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        GenSpec spec;
        spec.seed = derive_seed(43, seed);
        spec.size = 1 + seed % 6;
        spec.kind = kinds[seed % 4];
        Matrix a = gen_element(spec);

        CHECK(first_failure(certify_euw(a, euw_decompose(a))).empty());
        CHECK(first_failure(certify_two_units(a, two_units(a))).empty());
        CHECK(first_failure(certify_quasipolar(a, quasipolar(a))).empty());
        CHECK(first_failure(certify_corner(a, corner_characterize(a))).empty());
        CHECK(first_failure(certify_splitting(a, invariant_splitting(a))).empty());
        CHECK(first_failure(certify_scaler(a, cor23_scaler(a))).empty());
    }
}
