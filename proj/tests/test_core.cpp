#include <doctest.h>

#include "hardy/core.hpp"
#include "support.hpp"

using namespace hardy;
using hardy::testing::random_matrix;
using hardy::testing::random_vector;

namespace {
constexpr Complex I{0.0, 1.0};
}

TEST_CASE("inner_product examples") {
    CHECK(inner_product(CoeffVector{1.0, 0.0}, CoeffVector{1.0, 0.0}) == Complex(1.0));
    CHECK(inner_product(CoeffVector{0.0, I}, CoeffVector{0.0, 1.0}) == I);
    // 1*3 + 2i*conj(-i) = 3 + 2i*i = 1
    CHECK(std::abs(inner_product(CoeffVector{1.0, 2.0 * I}, CoeffVector{3.0, -I}) - Complex(1.0)) == 0.0);
    CHECK_THROWS_AS(inner_product(CoeffVector{1.0}, CoeffVector{1.0, 2.0}), DimensionError);
}

TEST_CASE("apply_antilinear examples") {
    const AntilinearOp J(LinearOp::identity(2));
    CHECK(apply_antilinear(J, CoeffVector{I, 1.0 + I}) == CoeffVector{-I, 1.0 - I});

    const AntilinearOp D(LinearOp{{1.0, 0.0}, {0.0, -1.0}});
    CHECK(apply_antilinear(D, CoeffVector{1.0, I}) == CoeffVector{1.0, I});

    const AntilinearOp Z(LinearOp::zero(2));
    CHECK(apply_antilinear(Z, CoeffVector{3.0 + I, -2.0}) == CoeffVector::zero(2));

    CHECK_THROWS_AS(apply_antilinear(J, CoeffVector{1.0, 2.0, 3.0}), DimensionError);
}

TEST_CASE("apply_linear examples") {
    const CoeffVector f{2.0 + I, -1.0};
    CHECK(apply_linear(LinearOp::identity(2), f) == f);
    CHECK(apply_linear(LinearOp{{0.0, 0.0}, {0.0, 1.0}}, f) == CoeffVector{0.0, -1.0});
    const LinearOp shift{{0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}};
    CHECK(apply_linear(shift, CoeffVector{1.0, 0.0, 0.0}) == CoeffVector{0.0, 1.0, 0.0});
    CHECK_THROWS_AS(apply_linear(shift, f), DimensionError);
}

TEST_CASE("adjoint examples") {
    CHECK(adjoint(LinearOp::identity(3)) == LinearOp::identity(3));
    CHECK(adjoint(LinearOp{{I}}) == LinearOp{{-I}});
    CHECK(adjoint(LinearOp{{0.0, 1.0}, {0.0, 0.0}}) == LinearOp{{0.0, 0.0}, {1.0, 0.0}});
}

TEST_CASE("frobenius_norm examples") {
    CHECK(frobenius_norm(LinearOp::zero(3)) == 0.0);
    CHECK(frobenius_norm(LinearOp::identity(4)) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(frobenius_norm(LinearOp{{3.0, 4.0}, {0.0, 0.0}}) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(frobenius_norm(LinearOp{{3.0, 4.0}, {0.0, 0.0}}, 1) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK_THROWS_AS(frobenius_norm(LinearOp::zero(2), 3), DimensionError);
}

TEST_CASE("construction rejects non-finite and empty data") {
    CHECK_THROWS_AS(CoeffVector({Complex(std::nan(""), 0.0)}), ValidationError);
    CHECK_THROWS_AS(CoeffVector(std::vector<Complex>{}), ValidationError);
    CHECK_THROWS_AS(LinearOp(2, std::vector<Complex>(3)), DimensionError);
    CHECK_THROWS_AS(LinearOp(1, {Complex(0.0, INFINITY)}), ValidationError);
}

TEST_CASE("property: conjugate symmetry of the inner product") {
    Rng rng(11);
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + t % 17;
        const CoeffVector f = random_vector(n, rng);
        const CoeffVector g = random_vector(n, rng);
        worst = std::max(worst, std::abs(inner_product(f, g) - std::conj(inner_product(g, f))));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("property: antilinearity of A J") {
    Rng rng(12);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + t % 23;
        const AntilinearOp C(random_matrix(n, rng));
        const CoeffVector f = random_vector(n, rng);
        const CoeffVector g = random_vector(n, rng);
        const Complex a = complex_gaussian(rng);
        const Complex b = complex_gaussian(rng);
        const CoeffVector lhs = apply_antilinear(C, a * f + b * g);
        const CoeffVector rhs = std::conj(a) * apply_antilinear(C, f) + std::conj(b) * apply_antilinear(C, g);
        CHECK((lhs - rhs).norm() <= 1e-10 * (f.norm() + g.norm()));
    }
}

TEST_CASE("property: adjoint pairing") {
    Rng rng(13);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + t % 29;
        const LinearOp T = random_matrix(n, rng);
        const CoeffVector f = random_vector(n, rng);
        const CoeffVector g = random_vector(n, rng);
        const Complex lhs = inner_product(apply_linear(T, f), g);
        const Complex rhs = inner_product(f, apply_linear(adjoint(T), g));
        CHECK(std::abs(lhs - rhs) <= 1e-10 * frobenius_norm(T) * f.norm() * g.norm());
    }
}

TEST_CASE("residual helpers") {
    CHECK(unitarity_residual(LinearOp::identity(5)) == 0.0);
    CHECK(unitarity_residual(LinearOp{{2.0}}) == doctest::Approx(3.0));
    CHECK(transpose_residual(LinearOp{{0.0, 1.0}, {-1.0, 0.0}}) == doctest::Approx(std::sqrt(8.0)));
    CHECK(transpose_residual(LinearOp{{0.0, I}, {I, 0.0}}) == 0.0);
    CHECK(bandwidth(LinearOp::identity(4)) == 0);
    CHECK(bandwidth(LinearOp{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {5.0, 0.0, 1.0}}) == 2);
}

TEST_CASE("unit_pow matches polar powers") {
    Rng rng(14);
    for (int t = 0; t < 50; ++t) {
        const double theta = std::uniform_real_distribution<double>(-3.0, 3.0)(rng);
        const Complex z = std::polar(1.0, theta);
        for (long long k : {0LL, 1LL, 2LL, 7LL, 64LL, 511LL, -3LL}) {
            CHECK(std::abs(unit_pow(z, k) - std::polar(1.0, theta * static_cast<double>(k))) <= 1e-12);
        }
    }
}
