#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "klac/cohomology.hpp"
#include "klac/constructions.hpp"
#include "klac/errors.hpp"
#include "oracle.hpp"

using namespace klac;

TEST_CASE("rank basics") {
    CHECK(rank(Matrix::identity(2)) == 2);
    CHECK(rank(Matrix(3, 4)) == 0);
    // Kodaira-Thurston d1 has a single nonzero entry
    auto kt = make_algebroid_preset("kt");
    ExteriorBasis b(4);
    GradedOperator d = ce_differential(b, kt);
    CHECK(rank(d.at(1)) == 1);
}

TEST_CASE("rank equals transpose rank and oracle rank") {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        Matrix m = oracle::random_matrix(rng, 1 + trial % 5, 1 + (trial * 7) % 6);
        const int rk = rank(m);
        CHECK(rk == rank(m.transpose()));
        CHECK(rk == oracle::gauss_jordan_rank(m));
        // rank + nullity = cols
        CHECK(rk + kernel_basis_matrix(m).cols() == m.cols());
    }
}

TEST_CASE("kernel bases") {
    CHECK(kernel_basis(Matrix::identity(3)).dim() == 0);
    CHECK(kernel_basis(Matrix(0, 5)).dim() == 5);
    auto kt = make_algebroid_preset("kt");
    ExteriorBasis b(4);
    Matrix d1 = ce_differential(b, kt).at(1);
    Subspace k = kernel_basis(d1);
    CHECK(k.dim() == 3);
    // spanned by e^1, e^2, e^4 coordinates: every kernel vector has zero e^3 part
    for (int c = 0; c < k.dim(); ++c) CHECK(k.basis.at(2, c).is_zero());
    Matrix e1(4, 1), e2(4, 1), e4(4, 1);
    e1.at(0, 0) = Scalar(1);
    e2.at(1, 0) = Scalar(1);
    e4.at(3, 0) = Scalar(1);
    CHECK(subspace_contains(k, Matrix::hstack(Matrix::hstack(e1, e2), e4)));
    // kernel vectors actually die under d1
    CHECK((d1 * k.basis).is_zero());
}

TEST_CASE("solve and inverse") {
    std::mt19937 rng(77);
    Matrix a = oracle::random_gl(rng, 4);
    Matrix x = oracle::random_matrix(rng, 4, 2);
    auto sol = solve(a, a * x);
    REQUIRE(sol.has_value());
    CHECK(*sol == x);
    CHECK(inverse(a) * a == Matrix::identity(4));
    // inconsistent system
    Matrix z(2, 1);
    z.at(0, 0) = Scalar(1);
    Matrix bad(2, 1);
    bad.at(1, 0) = Scalar(1);
    Matrix op(2, 1);
    op.at(0, 0) = Scalar(1);
    CHECK_FALSE(solve(op, bad).has_value());
    Matrix sing(2, 2);
    sing.at(0, 0) = Scalar(1);
    CHECK_THROWS_AS(inverse(sing), ModelError);
}

TEST_CASE("determinant") {
    Matrix m{{Scalar(1), Scalar(2)}, {Scalar(3), Scalar(4)}};
    CHECK(determinant(m) == Scalar(-2));
    CHECK(determinant(Matrix::identity(5)) == Scalar(1));
    std::mt19937 rng(5);
    for (int t = 0; t < 10; ++t) {
        Matrix a = oracle::random_matrix(rng, 3, 3);
        Matrix b = oracle::random_matrix(rng, 3, 3);
        CHECK(determinant(a * b) == determinant(a) * determinant(b));
        CHECK(determinant(a.transpose()) == determinant(a));
    }
}

TEST_CASE("subspace sum and intersection") {
    Subspace a = column_space(Matrix::identity(3));
    auto si = subspace_ops(a, a);
    CHECK(same_subspace(si.sum, a));
    CHECK(same_subspace(si.intersection, a));

    // complementary coordinate planes in dim 4
    Matrix pa(4, 2), pb(4, 2);
    pa.at(0, 0) = Scalar(1);
    pa.at(1, 1) = Scalar(1);
    pb.at(2, 0) = Scalar(1);
    pb.at(3, 1) = Scalar(1);
    auto si2 = subspace_ops(Subspace{4, pa}, Subspace{4, pb});
    CHECK(si2.sum.dim() == 4);
    CHECK(si2.intersection.dim() == 0);

    Subspace wrong{5, Matrix(5, 1)};
    CHECK_THROWS_AS(subspace_ops(a, wrong), DimensionError);

    // ker d cap im d in degree 1 of kt is zero (im d0 = 0)
    auto kt = make_algebroid_preset("kt");
    ExteriorBasis b(4);
    GradedOperator d = ce_differential(b, kt);
    Subspace kerd = kernel_basis(d.at(1));
    Subspace imd = column_space(d.at(0));
    CHECK(intersect(kerd, imd).dim() == 0);
}

TEST_CASE("grassmann dimension formula on random pairs") {
    std::mt19937 rng(41);
    for (int t = 0; t < 40; ++t) {
        const int ambient = 2 + t % 5;
        Subspace a = column_space(oracle::random_matrix(rng, ambient, 1 + t % ambient));
        Subspace b = column_space(oracle::random_matrix(rng, ambient, 1 + (t + 2) % ambient));
        auto si = subspace_ops(a, b);
        CHECK(si.sum.dim() + si.intersection.dim() == a.dim() + b.dim());
        CHECK(subspace_contains(si.sum, a.basis));
        CHECK(subspace_contains(a, si.intersection.basis));
        CHECK(subspace_contains(b, si.intersection.basis));
    }
}

TEST_CASE("induced map on quotient: identity and zero") {
    ExteriorBasis b(4);
    auto kt = make_algebroid_preset("kt");
    GradedOperator d = ce_differential(b, kt);
    Subspace ker = kernel_basis(d.at(1));
    Subspace im = column_space(d.at(0));  // zero
    auto q = induced_map_on_quotient(Matrix::identity(4), ker, im, ker, im);
    CHECK(q.map == Matrix::identity(ker.dim()));
    auto qz = induced_map_on_quotient(Matrix(4, 4), ker, im, ker, Subspace::zero(4));
    CHECK(qz.map.is_zero());
}

TEST_CASE("induced map on quotient: L-wedge from H^1(kt) to H^3(kt)") {
    auto kt = make_algebroid_preset("kt");
    ExteriorBasis b(4);
    GradedOperator d = ce_differential(b, kt);
    GradedOperator lef = wedge_operator(b, *kt.omega);
    Subspace src_ker = kernel_basis(d.at(1));
    Subspace src_im = column_space(d.at(0));
    Subspace dst_ker = kernel_basis(d.at(3));
    Subspace dst_im = column_space(d.at(2));
    auto q = induced_map_on_quotient(lef.at(1), src_ker, src_im, dst_ker, dst_im);
    CHECK(rank(q.map) == 2);
    Matrix ker = kernel_basis_matrix(q.map);
    REQUIRE(ker.cols() == 1);
    // kernel class is [e^1]
    Matrix rep = q.src_reps * ker.col(0);
    Matrix e1(4, 1);
    e1.at(0, 0) = rep.at(0, 0);
    CHECK(rep == e1);
    CHECK_FALSE(rep.at(0, 0).is_zero());
}

TEST_CASE("induced map contract violation") {
    ExteriorBasis b(4);
    auto kt = make_algebroid_preset("kt");
    GradedOperator d = ce_differential(b, kt);
    Subspace ker1 = kernel_basis(d.at(1));
    Subspace im1 = column_space(d.at(0));
    // a map that does not preserve ker d: send e^1 to e^3 (not closed)
    Matrix bad(4, 4);
    bad.at(2, 0) = Scalar(1);
    CHECK_THROWS_AS(induced_map_on_quotient(bad, ker1, im1, ker1, im1), ContractError);
}

TEST_CASE("induced map commutes with quotient projections on random representatives") {
    auto kt = make_algebroid_preset("kt");
    ExteriorBasis b(4);
    GradedOperator d = ce_differential(b, kt);
    GradedOperator lef = wedge_operator(b, *kt.omega);
    Subspace src_ker = kernel_basis(d.at(1));
    Subspace src_im = column_space(d.at(0));
    Subspace dst_ker = kernel_basis(d.at(3));
    Subspace dst_im = column_space(d.at(2));
    auto q = induced_map_on_quotient(lef.at(1), src_ker, src_im, dst_ker, dst_im);

    std::mt19937 rng(99);
    for (int t = 0; t < 20; ++t) {
        // random class: random combination of reps plus a random element of im
        Matrix coeffs = oracle::random_matrix(rng, q.src_reps.cols(), 1);
        Matrix rep = q.src_reps * coeffs;
        if (src_im.dim() > 0)
            rep += src_im.basis * oracle::random_matrix(rng, src_im.dim(), 1);
        // class of op(rep) must match map * coeffs
        Matrix img = lef.at(1) * rep;
        Matrix target = Matrix::hstack(q.dst_reps, dst_im.basis);
        auto x = solve(target, img);
        REQUIRE(x.has_value());
        for (int i = 0; i < q.dst_reps.cols(); ++i)
            CHECK(x->at(i, 0) == (q.map * coeffs).at(i, 0));
    }
}
