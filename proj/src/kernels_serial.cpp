#include "hardy/kernels.hpp"

#include <cmath>

namespace hardy::kernels::serial {

std::vector<Complex> matvec(std::size_t dim, std::span<const Complex> a, std::span<const Complex> x) {
    std::vector<Complex> y(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        Complex acc = 0.0;
        for (std::size_t k = 0; k < dim; ++k) {
            acc += a[i * dim + k] * x[k];
        }
        y[i] = acc;
    }
    return y;
}

std::vector<Complex> matmul(std::size_t dim, std::span<const Complex> a, std::span<const Complex> b) {
    std::vector<Complex> c(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            Complex acc = 0.0;
            for (std::size_t k = 0; k < dim; ++k) {
                acc += a[i * dim + k] * b[k * dim + j];
            }
            c[i * dim + j] = acc;
        }
    }
    return c;
}

double gram_residual(std::size_t dim, std::span<const Complex> a) {
    double sum = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t k = 0; k < dim; ++k) {
            Complex acc = 0.0;
            for (std::size_t l = 0; l < dim; ++l) {
                acc += std::conj(a[l * dim + j]) * a[l * dim + k];
            }
            if (j == k) {
                acc -= 1.0;
            }
            sum += std::norm(acc);
        }
    }
    return std::sqrt(sum);
}

double symmetry_block_residual(std::size_t dim, std::span<const Complex> a, std::span<const Complex> t,
                               std::size_t window) {
    double sum = 0.0;
    for (std::size_t j = 0; j < window; ++j) {
        for (std::size_t k = 0; k < window; ++k) {
            Complex acc = 0.0;
            for (std::size_t l = 0; l < dim; ++l) {
                acc += a[j * dim + l] * std::conj(t[l * dim + k]);
                acc -= std::conj(t[l * dim + j]) * a[l * dim + k];
            }
            sum += std::norm(acc);
        }
    }
    return std::sqrt(sum);
}

}  // namespace hardy::kernels::serial
