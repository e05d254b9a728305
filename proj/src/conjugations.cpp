#include "hardy/conjugations.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hardy/kernels.hpp"
#include "hardy/random.hpp"

namespace hardy {

Complex require_unimodular(Complex z, const std::string& what, std::optional<std::size_t> index) {
    const double modulus = std::abs(z);
    if (!std::isfinite(modulus) || std::abs(modulus - 1.0) > kUnimodularTol) {
        std::string msg = what;
        if (index) {
            msg += "[" + std::to_string(*index) + "]";
        }
        msg += " has modulus " + std::to_string(modulus) + ", expected 1";
        throw ValidationError(msg, index);
    }
    return z / modulus;
}

UnimodularSeq::UnimodularSeq(std::vector<Complex> values) : values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        values_[i] = require_unimodular(values_[i], "zeta", i + 1);
    }
}

UnimodularSeq UnimodularSeq::constant(Complex value, std::size_t dim) {
    if (dim == 0) {
        throw ValidationError("UnimodularSeq: dimension must be positive");
    }
    return UnimodularSeq(std::vector<Complex>(dim - 1, value));
}

Complex UnimodularSeq::at(std::size_t j) const {
    if (j == 0 || j > values_.size()) {
        throw ValidationError("zeta index " + std::to_string(j) + " outside 1.." + std::to_string(values_.size()), j);
    }
    return values_[j - 1];
}

Complex UnimodularSeq::doubled_power(std::size_t n) const {
    if (n == 0) {
        return 1.0;
    }
    return unit_pow(at(n), 2 * static_cast<long long>(n));
}

AlphaSeq::AlphaSeq(std::vector<Complex> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw ValidationError("AlphaSeq: dimension must be positive");
    }
    for (std::size_t m = 0; m < values_.size(); ++m) {
        values_[m] = require_unimodular(values_[m], "alpha", m);
    }
}

AntilinearOp build_J(std::size_t dim) { return AntilinearOp(LinearOp::identity(dim)); }

AntilinearOp build_c_lambda(Complex lambda, std::size_t dim) {
    const Complex l = require_unimodular(lambda, "lambda");
    std::vector<Complex> d(dim);
    for (std::size_t n = 0; n < dim; ++n) {
        d[n] = std::conj(unit_pow(l, static_cast<long long>(n)));
    }
    return AntilinearOp(LinearOp::diagonal(d));
}

AntilinearOp build_c_alpha(const AlphaSeq& alpha) { return AntilinearOp(LinearOp::diagonal(alpha.values())); }

AntilinearOp build_c_zeta(const UnimodularSeq& zeta) {
    std::vector<Complex> d(zeta.dim());
    for (std::size_t n = 0; n < d.size(); ++n) {
        d[n] = std::conj(zeta.doubled_power(n));
    }
    return AntilinearOp(LinearOp::diagonal(d));
}

AntilinearOp build_from_unitary(const LinearOp& U, double unitary_tol) {
    const double residual = unitarity_residual(U);
    if (!(residual <= unitary_tol)) {
        throw ValidationError("build_from_unitary: U is not unitary, ||U*U - I||_F = " + std::to_string(residual),
                              std::nullopt, residual);
    }
    return AntilinearOp(adjoint(U) * conj(U));
}

LinearOp monomial_rotation(const UnimodularSeq& zeta) {
    std::vector<Complex> d(zeta.dim());
    d[0] = 1.0;
    for (std::size_t n = 1; n < d.size(); ++n) {
        d[n] = unit_pow(zeta.at(n), static_cast<long long>(n));
    }
    return LinearOp::diagonal(d);
}

LinearOp coefficient_matrix(const AntilinearOp& C) { return C.a_factor(); }

ConjugationCert verify_conjugation(const AntilinearOp& C, int trials, double tol, std::uint64_t seed) {
    if (trials < 1) {
        throw ValidationError("verify_conjugation: trials must be >= 1");
    }
    ConjugationCert cert;
    cert.tol = tol;
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        const CoeffVector f = random_unit_vector(C.dim(), rng);
        const CoeffVector g = random_unit_vector(C.dim(), rng);
        const CoeffVector cf = apply_antilinear(C, f);
        const CoeffVector cg = apply_antilinear(C, g);
        cert.isometry_residual =
            std::max(cert.isometry_residual, std::abs(inner_product(cf, cg) - inner_product(g, f)));
        for (const auto& [v, cv] : {std::pair{&f, &cf}, std::pair{&g, &cg}}) {
            const double r = (apply_antilinear(C, *cv) - *v).norm() / v->norm();
            cert.involution_residual = std::max(cert.involution_residual, r);
        }
    }
    const LinearOp& A = C.a_factor();
    cert.a_unitarity_residual = unitarity_residual(A);
    cert.a_symmetry_residual = transpose_residual(A);
    cert.passed = cert.isometry_residual <= tol && cert.involution_residual <= tol &&
                  cert.a_unitarity_residual <= tol && cert.a_symmetry_residual <= tol;
    return cert;
}

LinearOp factor_diagonal(const AntilinearOp& C, double tol) {
    const LinearOp& A = C.a_factor();
    const std::size_t n = A.dim();
    std::vector<Complex> u(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && std::abs(A(i, j)) > tol) {
                throw ValidationError("factor_diagonal: A-factor is not diagonal at (" + std::to_string(i) + ", " +
                                          std::to_string(j) + ")",
                                      i);
            }
        }
        const Complex d = A(i, i);
        if (std::abs(std::abs(d) - 1.0) > tol) {
            throw ValidationError("factor_diagonal: diagonal entry " + std::to_string(i) + " has modulus " +
                                      std::to_string(std::abs(d)),
                                  i);
        }
        // std::sqrt takes the branch with arg in (-pi/2, pi/2].
        u[i] = std::sqrt(std::conj(d) / std::abs(d));
    }
    return LinearOp::diagonal(u);
}

LinearOp random_unitary(std::size_t dim, std::uint64_t seed) {
    if (dim == 0) {
        throw ValidationError("random_unitary: dimension must be positive");
    }
    Rng rng(seed);
    // columns[j] holds column j.
    std::vector<std::vector<Complex>> columns(dim, std::vector<Complex>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            columns[j][i] = complex_gaussian(rng);
        }
    }
    for (std::size_t j = 0; j < dim; ++j) {
        std::vector<Complex>& v = columns[j];
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                const std::vector<Complex>& q = columns[k];
                Complex proj = 0.0;
                for (std::size_t i = 0; i < dim; ++i) {
                    proj += std::conj(q[i]) * v[i];
                }
                for (std::size_t i = 0; i < dim; ++i) {
                    v[i] -= proj * q[i];
                }
            }
        }
        double sum = 0.0;
        for (const Complex& a : v) {
            sum += std::norm(a);
        }
        const double scale = 1.0 / std::sqrt(sum);
        for (Complex& a : v) {
            a *= scale;
        }
    }
    std::vector<Complex> rows(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            rows[i * dim + j] = columns[j][i];
        }
    }
    return LinearOp(dim, std::move(rows));
}

}  // namespace hardy
