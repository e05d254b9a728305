#include "hardy/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hardy/kernels.hpp"

namespace hardy {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_finite(std::span<const Complex> values, const char* what) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!finite(values[i])) {
            throw ValidationError(std::string(what) + ": non-finite entry at index " + std::to_string(i), i);
        }
    }
}

void require_same_dim(std::size_t lhs, std::size_t rhs, const char* what) {
    if (lhs != rhs) {
        throw DimensionError(what, lhs, rhs);
    }
}

}  // namespace

CoeffVector::CoeffVector(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw ValidationError("CoeffVector: dimension must be positive");
    }
    require_finite(coeffs_, "CoeffVector");
}

CoeffVector CoeffVector::zero(std::size_t dim) { return CoeffVector(std::vector<Complex>(dim)); }

CoeffVector CoeffVector::basis(std::size_t dim, std::size_t n) {
    if (n >= dim) {
        throw ValidationError("CoeffVector::basis: index " + std::to_string(n) + " outside section", n);
    }
    std::vector<Complex> c(dim);
    c[n] = 1.0;
    return CoeffVector(std::move(c));
}

double CoeffVector::norm() const {
    double sum = 0.0;
    for (const Complex& a : coeffs_) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

CoeffVector operator+(const CoeffVector& f, const CoeffVector& g) {
    require_same_dim(f.dim(), g.dim(), "vector sum");
    std::vector<Complex> out(f.dim());
    for (std::size_t n = 0; n < f.dim(); ++n) {
        out[n] = f[n] + g[n];
    }
    return CoeffVector(std::move(out));
}

CoeffVector operator-(const CoeffVector& f, const CoeffVector& g) {
    require_same_dim(f.dim(), g.dim(), "vector difference");
    std::vector<Complex> out(f.dim());
    for (std::size_t n = 0; n < f.dim(); ++n) {
        out[n] = f[n] - g[n];
    }
    return CoeffVector(std::move(out));
}

CoeffVector operator*(Complex s, const CoeffVector& f) {
    std::vector<Complex> out(f.coeffs().begin(), f.coeffs().end());
    for (Complex& a : out) {
        a *= s;
    }
    return CoeffVector(std::move(out));
}

LinearOp::LinearOp(std::size_t dim, std::vector<Complex> row_major) : dim_(dim), entries_(std::move(row_major)) {
    if (dim_ == 0) {
        throw ValidationError("LinearOp: dimension must be positive");
    }
    if (entries_.size() != dim_ * dim_) {
        throw DimensionError("LinearOp: entry count", entries_.size(), dim_ * dim_);
    }
    require_finite(entries_, "LinearOp");
}

LinearOp::LinearOp(std::initializer_list<std::initializer_list<Complex>> rows) : dim_(rows.size()) {
    entries_.reserve(dim_ * dim_);
    for (const auto& r : rows) {
        require_same_dim(r.size(), dim_, "LinearOp: row length");
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
    if (dim_ == 0) {
        throw ValidationError("LinearOp: dimension must be positive");
    }
    require_finite(entries_, "LinearOp");
}

LinearOp LinearOp::identity(std::size_t dim) {
    std::vector<Complex> e(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        e[i * dim + i] = 1.0;
    }
    return LinearOp(dim, std::move(e));
}

LinearOp LinearOp::zero(std::size_t dim) { return LinearOp(dim, std::vector<Complex>(dim * dim)); }

LinearOp LinearOp::diagonal(std::span<const Complex> diag) {
    const std::size_t dim = diag.size();
    std::vector<Complex> e(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        e[i * dim + i] = diag[i];
    }
    return LinearOp(dim, std::move(e));
}

Complex inner_product(const CoeffVector& f, const CoeffVector& g) {
    require_same_dim(f.dim(), g.dim(), "inner_product");
    Complex acc = 0.0;
    for (std::size_t n = 0; n < f.dim(); ++n) {
        acc += f[n] * std::conj(g[n]);
    }
    return acc;
}

CoeffVector apply_linear(const LinearOp& T, const CoeffVector& f) {
    require_same_dim(T.dim(), f.dim(), "apply_linear");
    return CoeffVector(kernels::parallel::matvec(T.dim(), T.data(), f.coeffs()));
}

CoeffVector apply_antilinear(const AntilinearOp& C, const CoeffVector& f) {
    require_same_dim(C.dim(), f.dim(), "apply_antilinear");
    std::vector<Complex> conj_f(f.coeffs().begin(), f.coeffs().end());
    for (Complex& a : conj_f) {
        a = std::conj(a);
    }
    return CoeffVector(kernels::parallel::matvec(C.dim(), C.a_factor().data(), conj_f));
}

LinearOp adjoint(const LinearOp& T) {
    const std::size_t n = T.dim();
    std::vector<Complex> e(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            e[j * n + i] = std::conj(T(i, j));
        }
    }
    return LinearOp(n, std::move(e));
}

LinearOp transpose(const LinearOp& T) {
    const std::size_t n = T.dim();
    std::vector<Complex> e(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            e[j * n + i] = T(i, j);
        }
    }
    return LinearOp(n, std::move(e));
}

LinearOp conj(const LinearOp& T) {
    std::vector<Complex> e(T.data().begin(), T.data().end());
    for (Complex& a : e) {
        a = std::conj(a);
    }
    return LinearOp(T.dim(), std::move(e));
}

LinearOp operator*(const LinearOp& lhs, const LinearOp& rhs) {
    require_same_dim(lhs.dim(), rhs.dim(), "operator product");
    return LinearOp(lhs.dim(), kernels::parallel::matmul(lhs.dim(), lhs.data(), rhs.data()));
}

LinearOp operator-(const LinearOp& lhs, const LinearOp& rhs) {
    require_same_dim(lhs.dim(), rhs.dim(), "operator difference");
    std::vector<Complex> e(lhs.data().begin(), lhs.data().end());
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] -= rhs.data()[i];
    }
    return LinearOp(lhs.dim(), std::move(e));
}

double frobenius_norm(const LinearOp& T) { return frobenius_norm(T, T.dim()); }

double frobenius_norm(const LinearOp& T, std::size_t window) {
    if (window > T.dim()) {
        throw DimensionError("frobenius_norm: window exceeds section", window, T.dim());
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < window; ++i) {
        for (std::size_t j = 0; j < window; ++j) {
            sum += std::norm(T(i, j));
        }
    }
    return std::sqrt(sum);
}

double unitarity_residual(const LinearOp& T) { return kernels::parallel::gram_residual(T.dim(), T.data()); }

double transpose_residual(const LinearOp& T) {
    const std::size_t n = T.dim();
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            sum += 2.0 * std::norm(T(i, j) - T(j, i));
        }
    }
    return std::sqrt(sum);
}

std::size_t bandwidth(const LinearOp& T, double threshold) {
    const std::size_t n = T.dim();
    std::size_t band = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(T(i, j)) >= threshold) {
                band = std::max(band, i > j ? i - j : j - i);
            }
        }
    }
    return band;
}

Complex unit_pow(Complex z, long long k) {
    if (k < 0) {
        return unit_pow(std::conj(z), -k);
    }
    Complex result = 1.0;
    Complex base = z;
    while (k > 0) {
        if (k & 1) {
            result *= base;
        }
        base *= base;
        k >>= 1;
    }
    const double modulus = std::abs(result);
    return modulus > 0.0 ? result / modulus : result;
}

}  // namespace hardy
