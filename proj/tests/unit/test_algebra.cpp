#include <cmath>

#include "doctest.h"
#include "support/oracles.hpp"

#include "sgswell/algebra.hpp"
#include "sgswell/errors.hpp"

using namespace sgswell;

namespace {

double tensor_entry(const TripleProductTensor& t, int i, int j, int k)
{
    int idx[3] = {i, j, k};
    std::sort(idx, idx + 3);
    for (const auto& e : t.entries)
        if (e.i == idx[0] && e.j == idx[1] && e.k == idx[2]) return e.value;
    return 0.0;
}

} // namespace

TEST_CASE("triple products")
{
    SUBCASE("two-function values")
    {
        const auto basis = haar_basis(1);
        const auto tensor = triple_products(basis);
        CHECK(tensor_entry(tensor, 0, 0, 0) == doctest::Approx(1.0));
        CHECK(tensor_entry(tensor, 0, 0, 1) == doctest::Approx(0.0));
        CHECK(tensor_entry(tensor, 0, 1, 1) == doctest::Approx(1.0));
        CHECK(tensor_entry(tensor, 1, 1, 1) == doctest::Approx(0.0));
    }

    SUBCASE("slices against the first function reproduce orthonormality")
    {
        const auto basis = haar_basis(3);
        const auto tensor = triple_products(basis);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                CHECK(tensor_entry(tensor, i, j, 0) == doctest::Approx(i == j ? 1.0 : 0.0));
    }

    SUBCASE("full permutation symmetry by brute force")
    {
        const auto basis = haar_basis(2);
        const Mat& vals = basis.cell_values();
        const auto tensor = triple_products(basis);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                for (int k = 0; k < 4; ++k) {
                    double brute = 0.0;
                    for (int c = 0; c < 4; ++c)
                        brute += vals(i, c) * vals(j, c) * vals(k, c);
                    brute /= 4.0;
                    CHECK(std::abs(tensor_entry(tensor, i, j, k) - brute) < 1e-15);
                }
    }
}

TEST_CASE("sg matrix assembly")
{
    const auto basis = haar_basis(1);
    const auto tensor = triple_products(basis);

    SUBCASE("first unit vector gives the identity")
    {
        Vec e1(2);
        e1 << 1.0, 0.0;
        CHECK((sg_matrix(tensor, e1) - Mat::Identity(2, 2)).norm() < 1e-15);
    }

    SUBCASE("closed form for two modes")
    {
        Vec v(2);
        v << 3.0, -2.0;
        Mat expected(2, 2);
        expected << 3.0, -2.0, -2.0, 3.0;
        CHECK((sg_matrix(tensor, v) - expected).norm() < 1e-14);
    }

    SUBCASE("commutation of the argument and the operand")
    {
        const auto b8 = haar_basis(3);
        const auto t8 = triple_products(b8);
        auto gen = test::rng(11);
        for (int trial = 0; trial < 100; ++trial) {
            const Vec v = test::random_vec(gen, 8, -2.0, 2.0);
            const Vec w = test::random_vec(gen, 8, -2.0, 2.0);
            CHECK((sg_matrix(t8, v) * w - sg_matrix(t8, w) * v).cwiseAbs().maxCoeff() < 1e-13);
        }
    }

    SUBCASE("dimension mismatch is rejected")
    {
        CHECK_THROWS_AS(sg_matrix(tensor, Vec::Zero(3)), Error);
    }
}

TEST_CASE("eigenstructure")
{
    SUBCASE("closed form for two modes")
    {
        const SgAlgebra alg(haar_basis(1));
        const double s = 1.0 / std::sqrt(2.0);
        Mat expected(2, 2);
        expected << s, s, s, -s;
        CHECK((alg.eig.V() - expected).norm() < 1e-15);
        Vec v(2);
        v << 5.0, 3.0;
        const Vec lam = alg.eig.eigenvalues(v);
        CHECK(lam(0) == doctest::Approx(8.0));
        CHECK(lam(1) == doctest::Approx(2.0));
    }

    SUBCASE("identity spectrum for the first unit vector")
    {
        const SgAlgebra alg(haar_basis(2));
        Vec e1 = Vec::Zero(4);
        e1(0) = 1.0;
        CHECK((alg.eig.eigenvalues(e1) - Vec::Ones(4)).cwiseAbs().maxCoeff() < 1e-14);
    }

    SUBCASE("matches a dense symmetric eigensolver")
    {
        const SgAlgebra alg(haar_basis(3));
        auto gen = test::rng(42);
        for (int trial = 0; trial < 20; ++trial) {
            const Vec w = test::random_vec(gen, 8, -3.0, 3.0);
            Vec lam = alg.eig.eigenvalues(w);
            std::sort(lam.data(), lam.data() + lam.size());
            const Vec dense = test::sorted_symmetric_eigenvalues(sg_matrix(alg.tensor, w));
            CHECK((lam - dense).cwiseAbs().maxCoeff() < 1e-11);
        }
    }

    SUBCASE("factorization holds for bivariate bases")
    {
        for (int K : {2, 4, 8}) {
            const SgAlgebra alg(bivariate_haar_basis_total(K));
            auto gen = test::rng(7 + K);
            const Vec w = test::random_vec(gen, K, -2.0, 2.0);
            const Mat dense = sg_matrix(alg.tensor, w);
            const Mat route =
                alg.eig.V() * alg.eig.eigenvalues(w).asDiagonal() * alg.eig.V().transpose();
            CHECK((dense - route).norm() < 1e-12);
        }
    }
}

TEST_CASE("sg apply routes")
{
    const SgAlgebra alg(haar_basis(3));
    auto gen = test::rng(5);

    SUBCASE("agrees with the dense product")
    {
        for (int trial = 0; trial < 50; ++trial) {
            const Vec v = test::random_vec(gen, 8, -2.0, 2.0);
            const Vec w = test::random_vec(gen, 8, -2.0, 2.0);
            const Vec fast = sg_apply(alg.eig, v, w);
            const Vec dense = sg_matrix(alg.tensor, v) * w;
            CHECK((fast - dense).cwiseAbs().maxCoeff() < 1e-13);
        }
    }

    SUBCASE("identity and commutation")
    {
        Vec e1 = Vec::Zero(8);
        e1(0) = 1.0;
        const Vec w = test::random_vec(gen, 8, -2.0, 2.0);
        CHECK((sg_apply(alg.eig, e1, w) - w).cwiseAbs().maxCoeff() < 1e-14);
        const Vec v = test::random_vec(gen, 8, -2.0, 2.0);
        CHECK((sg_apply(alg.eig, v, w) - sg_apply(alg.eig, w, v)).cwiseAbs().maxCoeff() < 1e-13);
    }
}

TEST_CASE("sg inverse")
{
    const SgAlgebra alg2(haar_basis(1));

    SUBCASE("closed form reciprocal coefficients")
    {
        Vec v(2);
        v << 5.0, 3.0;
        const Vec inv = sg_inverse_coefficients(alg2.eig, v);
        CHECK(inv(0) == doctest::Approx(5.0 / 16.0));
        CHECK(inv(1) == doctest::Approx(-3.0 / 16.0));
        Vec e1(2);
        e1 << 1.0, 0.0;
        CHECK((sg_apply(alg2.eig, v, inv) - e1).cwiseAbs().maxCoeff() < 1e-14);
    }

    SUBCASE("constants invert mode-wise")
    {
        Vec v = Vec::Zero(2);
        v(0) = 4.0;
        const Vec inv = sg_inverse_coefficients(alg2.eig, v);
        CHECK(inv(0) == doctest::Approx(0.25));
        CHECK(std::abs(inv(1)) < 1e-15);
    }

    SUBCASE("reciprocal coefficients generate the inverse matrix")
    {
        const SgAlgebra alg(haar_basis(3));
        auto gen = test::rng(99);
        for (int trial = 0; trial < 20; ++trial) {
            const Vec v = test::random_positive_spectrum(gen, alg.eig, 0.4, 3.0);
            const Mat P = sg_matrix(alg.tensor, v);
            const Mat Pinv_direct = P.inverse();
            const Mat P_of_inv = sg_matrix(alg.tensor, sg_inverse_coefficients(alg.eig, v));
            CHECK((Pinv_direct - P_of_inv).norm() < 1e-11);
        }
    }

    SUBCASE("singular spectra are rejected")
    {
        Vec v(2);
        v << 1.0, 1.0; // eigenvalues 2 and 0
        CHECK_THROWS_AS(sg_inverse_coefficients(alg2.eig, v), SingularState);
    }
}

TEST_CASE("sg square root")
{
    const SgAlgebra alg2(haar_basis(1));

    SUBCASE("constants take the scalar square root")
    {
        Vec h = Vec::Zero(2);
        h(0) = 4.0;
        const Vec r = sg_sqrt(alg2.eig, h);
        CHECK(r(0) == doctest::Approx(2.0));
        CHECK(std::abs(r(1)) < 1e-15);
    }

    SUBCASE("closed form for two modes")
    {
        Vec h(2);
        h << 5.0, 3.0;
        const Vec r = sg_sqrt(alg2.eig, h);
        CHECK(r(0) == doctest::Approx(3.0 / std::sqrt(2.0)));
        CHECK(r(1) == doctest::Approx(1.0 / std::sqrt(2.0)));
        CHECK((sg_apply(alg2.eig, r, r) - h).cwiseAbs().maxCoeff() < 1e-13);
    }

    SUBCASE("defining identity on random positive-spectrum vectors")
    {
        const SgAlgebra alg(haar_basis(3));
        auto gen = test::rng(123);
        for (int trial = 0; trial < 20; ++trial) {
            const Vec h = test::random_positive_spectrum(gen, alg.eig, 0.3, 4.0);
            const Vec r = sg_sqrt(alg.eig, h);
            CHECK((sg_apply(alg.eig, r, r) - h).cwiseAbs().maxCoeff() < 1e-12);
        }
    }

    SUBCASE("nonpositive spectra are rejected")
    {
        Vec h(2);
        h << 1.0, 2.0; // eigenvalues 3 and -1
        CHECK_THROWS_AS(sg_sqrt(alg2.eig, h), NonPositiveHeight);
    }
}

TEST_CASE("composition identity")
{
    SUBCASE("random pairs across sizes")
    {
        for (int levels : {1, 2, 3}) {
            const SgAlgebra alg(haar_basis(levels));
            auto gen = test::rng(31 + levels);
            for (int trial = 0; trial < 100; ++trial) {
                const Vec v = test::random_vec(gen, alg.K(), -2.0, 2.0);
                const Vec w = test::random_vec(gen, alg.K(), -2.0, 2.0);
                const auto [lhs, rhs] = sg_compose_check(alg.tensor, alg.eig, v, w);
                CHECK((lhs - rhs).norm() < 1e-12);
            }
        }
    }

    SUBCASE("first unit vector degenerates to a single matrix")
    {
        const SgAlgebra alg(haar_basis(2));
        Vec e1 = Vec::Zero(4);
        e1(0) = 1.0;
        auto gen = test::rng(3);
        const Vec w = test::random_vec(gen, 4, -2.0, 2.0);
        const auto [lhs, rhs] = sg_compose_check(alg.tensor, alg.eig, e1, w);
        CHECK((lhs - sg_matrix(alg.tensor, w)).norm() < 1e-13);
        CHECK((rhs - sg_matrix(alg.tensor, w)).norm() < 1e-13);
    }

    SUBCASE("closed form for two modes")
    {
        const SgAlgebra alg(haar_basis(1));
        Vec v(2), w(2);
        v << 1.5, -0.5;
        w << 0.25, 2.0;
        Mat expected(2, 2);
        expected << v(0) * w(0) + v(1) * w(1), v(0) * w(1) + v(1) * w(0),
            v(0) * w(1) + v(1) * w(0), v(0) * w(0) + v(1) * w(1);
        const auto [lhs, rhs] = sg_compose_check(alg.tensor, alg.eig, v, w);
        CHECK((lhs - expected).norm() < 1e-14);
        CHECK((rhs - expected).norm() < 1e-14);
    }
}

TEST_CASE("matrix commutators vanish")
{
    for (int levels : {1, 2, 3}) {
        const SgAlgebra alg(haar_basis(levels));
        auto gen = test::rng(77 + levels);
        for (int trial = 0; trial < 30; ++trial) {
            const Vec v = test::random_vec(gen, alg.K(), -2.0, 2.0);
            const Vec w = test::random_vec(gen, alg.K(), -2.0, 2.0);
            const Mat A = sg_matrix(alg.tensor, v);
            const Mat B = sg_matrix(alg.tensor, w);
            CHECK((A * B - B * A).norm() < 1e-12);
        }
    }
}
