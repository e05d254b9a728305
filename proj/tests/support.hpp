#pragma once

// Test-only generators and oracles. The oracles here never call the matrix
// kernels they are used to check: they go through vector-level application
// or plain coefficient arithmetic.

#include <cmath>
#include <map>
#include <numbers>
#include <vector>

#include "hardy/conjugations.hpp"
#include "hardy/random.hpp"
#include "hardy/toeplitz.hpp"

namespace hardy::testing {

inline LaurentSymbol random_symbol(std::size_t band, Rng& rng) {
    std::map<int, Complex> c;
    const int b = static_cast<int>(band);
    for (int n = -b; n <= b; ++n) {
        c[n] = complex_gaussian(rng);
    }
    return LaurentSymbol(band, c);
}

inline LinearOp random_matrix(std::size_t dim, Rng& rng) {
    std::vector<Complex> e(dim * dim);
    for (Complex& z : e) {
        z = complex_gaussian(rng);
    }
    return LinearOp(dim, std::move(e));
}

inline CoeffVector random_vector(std::size_t dim, Rng& rng) {
    std::vector<Complex> v(dim);
    for (Complex& z : v) {
        z = complex_gaussian(rng);
    }
    return CoeffVector(std::move(v));
}

inline UnimodularSeq random_zeta(std::size_t dim, Rng& rng) {
    std::vector<Complex> v(dim - 1);
    for (Complex& z : v) {
        z = random_unimodular(rng);
    }
    return UnimodularSeq(std::move(v));
}

inline double max_abs_diff(const LinearOp& a, const LinearOp& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    }
    return worst;
}

/// Frobenius norm of (C T - T^* C) on the leading window block, assembled
/// column by column from operator applications. (C T - T^* C) is antilinear
/// and e_k is real, so its matrix column k is (C T - T^* C) e_k.
inline double residual_by_application(const AntilinearOp& C, const LinearOp& T, std::size_t window) {
    const std::size_t n = T.dim();
    const LinearOp Th = adjoint(T);
    double sum = 0.0;
    for (std::size_t k = 0; k < window; ++k) {
        const CoeffVector e = CoeffVector::basis(n, k);
        const CoeffVector col = apply_antilinear(C, apply_linear(T, e)) - apply_linear(Th, apply_antilinear(C, e));
        for (std::size_t j = 0; j < window; ++j) {
            sum += std::norm(col[j]);
        }
    }
    return std::sqrt(sum);
}

/// P(phi f) truncated to the first `dim` coefficients, by direct convolution.
inline std::vector<Complex> multiply_then_truncate(const LaurentSymbol& symbol, const std::vector<Complex>& f,
                                                   std::size_t dim) {
    std::vector<Complex> out(dim);
    const long long b = static_cast<long long>(symbol.band());
    for (long long k = 0; k < static_cast<long long>(f.size()); ++k) {
        for (long long n = -b; n <= b; ++n) {
            const long long m = k + n;
            if (m >= 0 && m < static_cast<long long>(dim)) {
                out[static_cast<std::size_t>(m)] += symbol.coeff(n) * f[static_cast<std::size_t>(k)];
            }
        }
    }
    return out;
}

/// Samples sum_n phi^(n) w^n on the K-point grid w_k = e^{2 pi i k / K}.
inline std::vector<Complex> sample_symbol(const LaurentSymbol& symbol, std::size_t k_count) {
    std::vector<Complex> s(k_count);
    const long long b = static_cast<long long>(symbol.band());
    for (std::size_t k = 0; k < k_count; ++k) {
        for (long long n = -b; n <= b; ++n) {
            const double t = 2.0 * std::numbers::pi * static_cast<double>(k) * static_cast<double>(n) /
                             static_cast<double>(k_count);
            s[k] += symbol.coeff(n) * std::polar(1.0, t);
        }
    }
    return s;
}

/// Product of two layers of 2x2 rotations on pairs (0,1),(2,3),.. then (1,2),(3,4),..
/// Each rotation depends only on (seed, pair index), so the leading block does not depend on dim.
inline LinearOp banded_unitary(std::size_t dim, std::uint64_t seed) {
    auto layer = [&](std::size_t offset, std::uint64_t salt) {
        std::vector<Complex> e(dim * dim);
        for (std::size_t i = 0; i < dim; ++i) {
            e[i * dim + i] = 1.0;
        }
        for (std::size_t p = offset; p + 1 < dim; p += 2) {
            Rng rng(derive_seed(seed + salt, p));
            std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
            const double t = u(rng);
            const Complex ph1 = std::polar(1.0, u(rng));
            const Complex ph2 = std::polar(1.0, u(rng));
            e[p * dim + p] = std::cos(t) * ph1;
            e[p * dim + p + 1] = -std::sin(t) * std::conj(ph2);
            e[(p + 1) * dim + p] = std::sin(t) * ph2;
            e[(p + 1) * dim + p + 1] = std::cos(t) * std::conj(ph1);
        }
        return LinearOp(dim, std::move(e));
    };
    return layer(1, 1000) * layer(0, 0);
}

}  // namespace hardy::testing
