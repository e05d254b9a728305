#include "hardy/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <omp.h>

namespace hardy::kernels::parallel {

namespace {

using Index = std::ptrdiff_t;

// Fixed-order sum of per-row partials; keeps results independent of the team size.
double root_of_sum(const std::vector<double>& partials) {
    return std::sqrt(std::accumulate(partials.begin(), partials.end(), 0.0));
}

}  // namespace

std::vector<Complex> matvec(std::size_t dim, std::span<const Complex> a, std::span<const Complex> x) {
    std::vector<Complex> y(dim);
    const Index n = static_cast<Index>(dim);
#pragma omp parallel for schedule(static) if (n >= 128)
    for (Index i = 0; i < n; ++i) {
        const Complex* row = a.data() + i * n;
        Complex acc = 0.0;
        for (Index k = 0; k < n; ++k) {
            acc += row[k] * x[k];
        }
        y[i] = acc;
    }
    return y;
}

std::vector<Complex> matmul(std::size_t dim, std::span<const Complex> a, std::span<const Complex> b) {
    std::vector<Complex> c(dim * dim);
    const Index n = static_cast<Index>(dim);
#pragma omp parallel for schedule(static) if (n >= 32)
    for (Index i = 0; i < n; ++i) {
        Complex* out = c.data() + i * n;
        for (Index k = 0; k < n; ++k) {
            const Complex s = a[i * n + k];
            if (s == Complex{}) {
                continue;
            }
            const Complex* brow = b.data() + k * n;
            for (Index j = 0; j < n; ++j) {
                out[j] += s * brow[j];
            }
        }
    }
    return c;
}

double gram_residual(std::size_t dim, std::span<const Complex> a) {
    const Index n = static_cast<Index>(dim);
    std::vector<double> partial(dim, 0.0);
#pragma omp parallel if (n >= 32)
    {
        std::vector<Complex> row(dim);
#pragma omp for schedule(static)
        for (Index j = 0; j < n; ++j) {
            std::fill(row.begin(), row.end(), Complex{});
            for (Index l = 0; l < n; ++l) {
                const Complex s = std::conj(a[l * n + j]);
                if (s == Complex{}) {
                    continue;
                }
                const Complex* arow = a.data() + l * n;
                for (Index k = 0; k < n; ++k) {
                    row[k] += s * arow[k];
                }
            }
            row[j] -= 1.0;
            double sum = 0.0;
            for (const Complex& v : row) {
                sum += std::norm(v);
            }
            partial[j] = sum;
        }
    }
    return root_of_sum(partial);
}

double symmetry_block_residual(std::size_t dim, std::span<const Complex> a, std::span<const Complex> t,
                               std::size_t window) {
    const Index n = static_cast<Index>(dim);
    const Index w = static_cast<Index>(window);
    std::vector<double> partial(window, 0.0);
#pragma omp parallel if (n >= 32)
    {
        std::vector<Complex> row(window);
#pragma omp for schedule(static)
        for (Index j = 0; j < w; ++j) {
            std::fill(row.begin(), row.end(), Complex{});
            // (A conj(T))_{j,k} = sum_l A_{jl} conj(T_{lk})
            for (Index l = 0; l < n; ++l) {
                const Complex s = a[j * n + l];
                if (s == Complex{}) {
                    continue;
                }
                const Complex* trow = t.data() + l * n;
                for (Index k = 0; k < w; ++k) {
                    row[k] += s * std::conj(trow[k]);
                }
            }
            // (T^H A)_{j,k} = sum_l conj(T_{lj}) A_{lk}
            for (Index l = 0; l < n; ++l) {
                const Complex s = std::conj(t[l * n + j]);
                if (s == Complex{}) {
                    continue;
                }
                const Complex* arow = a.data() + l * n;
                for (Index k = 0; k < w; ++k) {
                    row[k] -= s * arow[k];
                }
            }
            double sum = 0.0;
            for (const Complex& v : row) {
                sum += std::norm(v);
            }
            partial[j] = sum;
        }
    }
    return root_of_sum(partial);
}

}  // namespace hardy::kernels::parallel
