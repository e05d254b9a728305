#include <doctest.h>

#include <numbers>

#include "hardy/conjugations.hpp"
#include "support.hpp"

using namespace hardy;
using hardy::testing::max_abs_diff;
using hardy::testing::random_zeta;

namespace {

constexpr Complex I{0.0, 1.0};
constexpr double pi = std::numbers::pi;

double uniform_angle(Rng& rng) { return std::uniform_real_distribution<double>(-pi, pi)(rng); }

}  // namespace

TEST_CASE("build_J") {
    const AntilinearOp J = build_J(2);
    CHECK(J.a_factor() == LinearOp::identity(2));
    CHECK(apply_antilinear(J, CoeffVector{1.0 + I, 2.0}) == CoeffVector{1.0 - I, 2.0});

    Rng rng(1);
    const AntilinearOp J8 = build_J(8);
    for (int t = 0; t < 100; ++t) {
        const CoeffVector f = hardy::testing::random_vector(8, rng);
        CHECK(apply_antilinear(J8, apply_antilinear(J8, f)) == f);
    }
    for (std::size_t n = 0; n < 8; ++n) {
        CHECK(apply_antilinear(J8, CoeffVector::basis(8, n)) == CoeffVector::basis(8, n));
    }
}

TEST_CASE("build_c_lambda") {
    CHECK(build_c_lambda(1.0, 5) == build_J(5));
    // conj(lambda^n) = (-1)^n
    CHECK(apply_antilinear(build_c_lambda(-1.0, 3), CoeffVector{1.0, 1.0, 1.0}) == CoeffVector{1.0, -1.0, 1.0});
    // conj(i^1) = -i
    const CoeffVector r = apply_antilinear(build_c_lambda(I, 3), CoeffVector{0.0, 1.0, 0.0});
    CHECK((r - CoeffVector{0.0, -I, 0.0}).norm() <= 1e-15);
    CHECK_THROWS_AS(build_c_lambda(1.5, 3), ValidationError);
}

TEST_CASE("build_c_alpha") {
    Rng rng(2);
    const Complex lambda = random_unimodular(rng);
    std::vector<Complex> alpha(16);
    for (std::size_t n = 0; n < alpha.size(); ++n) {
        alpha[n] = std::conj(unit_pow(lambda, static_cast<long long>(n)));
    }
    CHECK(max_abs_diff(build_c_alpha(AlphaSeq(alpha)).a_factor(), build_c_lambda(lambda, 16).a_factor()) <= 1e-12);
    CHECK(build_c_alpha(AlphaSeq(std::vector<Complex>(4, 1.0))) == build_J(4));
    // conj then multiply by alpha_n: (conj(i)*1, conj(i)*(-1)) = (-i, i)
    CHECK(apply_antilinear(build_c_alpha(AlphaSeq({1.0, -1.0})), CoeffVector{I, I}) == CoeffVector{-I, I});

    try {
        AlphaSeq bad({1.0, I, 0.5});
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.index() == std::optional<std::size_t>(2));
    }
}

TEST_CASE("unimodular inputs are renormalised") {
    const UnimodularSeq z({Complex(1.0 + 5e-13, 0.0)});
    CHECK(std::abs(z.at(1)) == 1.0);
    try {
        UnimodularSeq bad({1.0, 1.0, 1.0 + 1e-9});
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.index() == std::optional<std::size_t>(3));  // zeta_3
    }
}

TEST_CASE("build_c_zeta") {
    // constant e^{i theta/2} with theta = pi gives d_n = (-1)^n
    const AntilinearOp c = build_c_zeta(UnimodularSeq::constant(std::polar(1.0, pi / 2), 6));
    for (std::size_t n = 0; n < 6; ++n) {
        CHECK(std::abs(c.a_factor()(n, n) - (n % 2 == 0 ? 1.0 : -1.0)) <= 1e-12);
    }
    CHECK(build_c_zeta(UnimodularSeq::constant(1.0, 7)) == build_J(7));
    // d_0 = 1 for any zeta
    Rng rng(3);
    CHECK(build_c_zeta(random_zeta(9, rng)).a_factor()(0, 0) == Complex(1.0));
}

TEST_CASE("constant half-angle zeta reproduces C_lambda") {
    Rng rng(4);
    for (int t = 0; t < 20; ++t) {
        const double theta = uniform_angle(rng);
        const auto cz = build_c_zeta(UnimodularSeq::constant(std::polar(1.0, theta / 2), 64));
        const auto cl = build_c_lambda(std::polar(1.0, theta), 64);
        CHECK(max_abs_diff(cz.a_factor(), cl.a_factor()) <= 1e-12);
    }
}

TEST_CASE("root-angle zeta reproduces C_alpha") {
    Rng rng(5);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 64;
        std::vector<Complex> zeta(n - 1);
        std::vector<Complex> alpha(n);
        alpha[0] = 1.0;  // the n = 0 factor is fixed at 1
        for (std::size_t k = 1; k < n; ++k) {
            const double theta = uniform_angle(rng);
            zeta[k - 1] = std::conj(std::polar(1.0, theta / (2.0 * static_cast<double>(k))));
            alpha[k] = std::polar(1.0, theta);
        }
        const auto cz = build_c_zeta(UnimodularSeq(zeta));
        const auto ca = build_c_alpha(AlphaSeq(alpha));
        CHECK(max_abs_diff(cz.a_factor(), ca.a_factor()) <= 1e-12);
        // coefficient matrix: b_n^{(n)} = e^{i theta_n}
        CHECK(max_abs_diff(coefficient_matrix(cz), LinearOp::diagonal(alpha)) <= 1e-12);
    }
}

TEST_CASE("build_from_unitary") {
    Rng rng(6);
    const UnimodularSeq zeta = random_zeta(12, rng);
    const AntilinearOp from_u = build_from_unitary(monomial_rotation(zeta));
    CHECK(max_abs_diff(from_u.a_factor(), build_c_zeta(zeta).a_factor()) <= 1e-12);

    CHECK(build_from_unitary(LinearOp::identity(4)) == build_J(4));

    const LinearOp U = random_unitary(24, 99);
    const AntilinearOp C = build_from_unitary(U);
    CHECK(verify_conjugation(C, 100, 1e-10, 1).passed);
    for (int t = 0; t < 20; ++t) {
        const CoeffVector f = hardy::testing::random_vector(24, rng);
        const CoeffVector direct = apply_linear(adjoint(U), apply_antilinear(build_J(24), apply_linear(U, f)));
        CHECK((apply_antilinear(C, f) - direct).norm() <= 1e-10);
    }

    try {
        build_from_unitary(LinearOp{{2.0, 0.0}, {0.0, 1.0}});
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        REQUIRE(e.residual().has_value());
        CHECK(*e.residual() == doctest::Approx(3.0));
    }
}

TEST_CASE("monomial rotation is unitary") {
    Rng rng(7);
    for (int t = 0; t < 20; ++t) {
        CHECK(unitarity_residual(monomial_rotation(random_zeta(40, rng))) <= 1e-12);
    }
}

TEST_CASE("coefficient_matrix") {
    const double theta = 0.7;
    const LinearOp B = coefficient_matrix(build_c_lambda(std::polar(1.0, theta), 10));
    CHECK(bandwidth(B) == 0);
    for (std::size_t n = 0; n < 10; ++n) {
        CHECK(std::abs(B(n, n) - std::conj(std::polar(1.0, theta * static_cast<double>(n)))) <= 1e-12);
    }
    CHECK(coefficient_matrix(build_J(3)) == LinearOp::identity(3));

    // columns orthonormal for a valid conjugation
    const LinearOp Bu = coefficient_matrix(build_from_unitary(random_unitary(16, 3)));
    CHECK(unitarity_residual(Bu) <= 1e-10);
}

TEST_CASE("verify_conjugation") {
    Rng rng(8);
    const ConjugationCert ok = verify_conjugation(build_c_zeta(random_zeta(32, rng)), 50, 1e-10, 3);
    CHECK(ok.passed);
    CHECK(ok.isometry_residual <= 1e-10);
    CHECK(ok.involution_residual <= 1e-10);

    const ConjugationCert two = verify_conjugation(AntilinearOp(LinearOp{{2.0}}), 20, 1e-10, 3);
    CHECK_FALSE(two.passed);
    CHECK(two.isometry_residual > 1e-10);
    CHECK(two.a_unitarity_residual > 1e-10);

    // unitary but antisymmetric: A conj(A) = A^2 = -I
    const ConjugationCert anti = verify_conjugation(AntilinearOp(LinearOp{{0.0, 1.0}, {-1.0, 0.0}}), 50, 1e-10, 3);
    CHECK_FALSE(anti.passed);
    CHECK(anti.isometry_residual <= 1e-12);
    CHECK(anti.a_unitarity_residual <= 1e-12);
    CHECK(anti.involution_residual == doctest::Approx(2.0));
    CHECK(anti.a_symmetry_residual == doctest::Approx(std::sqrt(8.0)));

    CHECK_THROWS_AS(verify_conjugation(build_J(2), 0, 1e-10, 0), ValidationError);
}

TEST_CASE("factor_diagonal") {
    const double theta = 0.3;
    const LinearOp U = factor_diagonal(build_c_lambda(std::polar(1.0, theta), 8));
    for (std::size_t n = 0; n < 8; ++n) {
        // n theta stays inside (-pi, pi], so the principal root is e^{i n theta / 2} itself.
        CHECK(std::abs(U(n, n) - std::polar(1.0, theta * static_cast<double>(n) / 2.0)) <= 1e-12);
    }
    // Outside that range the principal root differs by a sign; its square is unchanged.
    const double wide = 2.5;
    const LinearOp Uw = factor_diagonal(build_c_lambda(std::polar(1.0, wide), 8));
    for (std::size_t n = 0; n < 8; ++n) {
        CHECK(std::abs(Uw(n, n) * Uw(n, n) - std::polar(1.0, wide * static_cast<double>(n))) <= 1e-12);
        CHECK(std::arg(Uw(n, n)) > -pi / 2);
        CHECK(std::arg(Uw(n, n)) <= pi / 2);
    }

    CHECK(factor_diagonal(build_J(5)) == LinearOp::identity(5));

    Rng rng(9);
    for (int t = 0; t < 50; ++t) {
        const AntilinearOp C = build_c_zeta(random_zeta(33, rng));
        CHECK(max_abs_diff(build_from_unitary(factor_diagonal(C)).a_factor(), C.a_factor()) <= 1e-10);
    }

    CHECK_THROWS_AS(factor_diagonal(build_from_unitary(random_unitary(6, 1))), ValidationError);
    CHECK_THROWS_AS(factor_diagonal(AntilinearOp(LinearOp{{1.0, 0.0}, {0.0, 2.0}})), ValidationError);
}

TEST_CASE("random_unitary") {
    const LinearOp u1 = random_unitary(1, 5);
    CHECK(std::abs(std::abs(u1(0, 0)) - 1.0) <= 1e-15);
    CHECK(random_unitary(16, 42) == random_unitary(16, 42));
    CHECK_FALSE(random_unitary(16, 42) == random_unitary(16, 43));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        CHECK(unitarity_residual(random_unitary(64, seed)) <= 1e-10);
    }
}

TEST_CASE("structure theorem: every U^* J U has a unitary, symmetric A-factor") {
    for (std::uint64_t seed = 100; seed < 110; ++seed) {
        const LinearOp A = build_from_unitary(random_unitary(48, seed)).a_factor();
        CHECK(unitarity_residual(A) <= 1e-10);
        CHECK(transpose_residual(A) <= 1e-10);
    }
}
